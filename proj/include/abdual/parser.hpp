#pragma once

#include <string>

#include "abdual/core.hpp"

namespace abdual {

// A variable (uppercase or underscore-initial name) appears in the input.
struct NonGroundError : ParseError {
  using ParseError::ParseError;
};

// A program rule has an abducible head.
struct AbducibleHeadError : ParseError {
  using ParseError::ParseError;
};

// A query is not a single literal.
struct QueryShapeError : ParseError {
  using ParseError::ParseError;
};

// Parses a source framework: rules, `abducible x.` declarations and `:- body.` integrity rules.
// Reserved symbols and default-negated heads are rejected.
AbductiveFramework parse_framework(const std::string& text);

// Parses a rule set as written by serialize(); accepts default-negated heads and reserved symbols.
Program parse_program(const std::string& text);

// Parses a single literal such as `q`, `not q`, `-q` or `not -q`.
Literal parse_query(const std::string& text);

std::string serialize(const Rule& r);
std::string serialize(const Program& p);
std::string serialize(const AbductiveFramework& fw);

}  // namespace abdual
