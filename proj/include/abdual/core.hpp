#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace abdual {

// Error with an optional source position (line and column are 1-based, 0 when unknown).
struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int l = 0, int c = 0)
      : std::runtime_error(l ? std::to_string(l) + ":" + std::to_string(c) + ": " + msg : msg), line(l), column(c) {}
};

// A reserved symbol is used where it is not allowed.
struct ReservedSymbolError : ParseError {
  using ParseError::ParseError;
};

// Error raised when a scenario abduces a literal together with its explicit conjugate.
struct InconsistentScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace sym {
inline const std::string kTrue = "t";
inline const std::string kUndefined = "u";
inline const std::string kFalse = "f";
inline const std::string kBottom = "bottom";
inline const std::string kQuery = "query";
inline const std::string kFoldA = "fold_a_";
inline const std::string kFoldB = "fold_b_";
}  // namespace sym

bool is_truth_constant(const std::string& atom);
bool is_folding_symbol(const std::string& atom);
// True for t, u, f, bottom, query and the folding namespace.
bool is_reserved_symbol(const std::string& atom);

// An atom A or its explicit negation -A.
struct ObjectiveLiteral {
  std::string atom;
  bool negated = false;

  auto operator<=>(const ObjectiveLiteral&) const = default;
  bool operator==(const ObjectiveLiteral&) const = default;
};

// An objective literal, optionally under default negation.
struct Literal {
  ObjectiveLiteral objective;
  bool naf = false;

  Literal() = default;
  Literal(ObjectiveLiteral o, bool default_negated = false) : objective(std::move(o)), naf(default_negated) {}

  bool positive() const { return !naf; }
  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;
};

ObjectiveLiteral atom(const std::string& name);
ObjectiveLiteral neg(const std::string& name);
Literal pos(const ObjectiveLiteral& o);
Literal not_(const ObjectiveLiteral& o);

ObjectiveLiteral conj_e(const ObjectiveLiteral& o);
Literal conj_d(const Literal& l);

std::string to_string(const ObjectiveLiteral& o);
std::string to_string(const Literal& l);

using ObjectiveSet = std::set<ObjectiveLiteral>;
using LiteralSet = std::set<Literal>;

struct Rule {
  Literal head;
  std::vector<Literal> body;

  auto operator<=>(const Rule&) const = default;
  bool operator==(const Rule&) const = default;
};

struct Program {
  std::vector<Rule> rules;

  bool operator==(const Program&) const = default;

  // Every objective literal occurring in the program, closed under explicit conjugation.
  // Truth constants are excluded; reserved symbols are never conjugated.
  ObjectiveSet objective_literals() const;
  // objective_literals() together with their default negations.
  LiteralSet literals() const;
  // Sum over rules of one plus the body length.
  std::size_t size() const;
};

// Adds conj_e(o) for every non-reserved member.
ObjectiveSet close_explicit(const ObjectiveSet& s);
bool consistent_set(const ObjectiveSet& s);

// Three-valued interpretation: true objective literals and default-negated ones.
struct Interpretation {
  ObjectiveSet t;
  ObjectiveSet f;

  bool operator==(const Interpretation&) const = default;

  // Membership honoring t / not f always true, u / not u never true.
  bool holds(const Literal& l) const;
  bool consistent() const;
  bool coherent() const;
};

bool info_leq(const Interpretation& a, const Interpretation& b);
Interpretation restrict(const Interpretation& i, const ObjectiveSet& s);
std::string to_string(const Interpretation& i);

struct AbductiveFramework {
  Program program;
  ObjectiveSet abducibles;
  std::vector<Rule> integrity;

  // Throws std::invalid_argument if the framework invariants do not hold.
  void validate() const;
  // Program rules followed by integrity rules.
  Program with_integrity() const;
};

// P_B: A <- t for A in B, A <- u otherwise, over every abducible.
Program scenario_program(const ObjectiveSet& abducibles, const ObjectiveSet& abduced);

}  // namespace abdual
