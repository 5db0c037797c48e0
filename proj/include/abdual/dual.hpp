#pragma once

#include <optional>
#include <vector>

#include "abdual/core.hpp"

namespace abdual {

enum class RuleOrigin { Source, Query, Folding, Coherency };

const char* to_string(RuleOrigin o);

struct DualProgram {
  Program program;
  std::vector<RuleOrigin> origin;  // parallel to program.rules

  void add(Rule r, RuleOrigin o);
  std::size_t size() const { return program.size(); }
};

// Name of the i-th (1-based) chain or leaf folding atom for O.
std::string fold_a_name(std::size_t i, const ObjectiveLiteral& o);
std::string fold_b_name(std::size_t i, const ObjectiveLiteral& o);

// Folded dual: source rules, folding chains and leaves (or `not O.` for rule-less O),
// then coherency axioms not(O) :- conj_E(O). Abducibles never receive `not O.`.
DualProgram dual_fold(const Program& p, const ObjectiveSet& abducibles);

// Unfolded dual: one rule for not(O) per choice of a body literal from each rule of O.
DualProgram dual_unfold(const Program& p, const ObjectiveSet& abducibles);

// P ∪ I ∪ {query :- q, not bottom}; without q the query rule is query :- not bottom.
Program attach_query(const AbductiveFramework& fw, const std::optional<Literal>& q);

struct SizeCheck {
  std::size_t size_in = 0;
  std::size_t size_out = 0;
  std::size_t bound = 0;  // 9 size_in + 2 |abducibles|
  bool bound_ok = false;
};

SizeCheck dual_size_check(const Program& p, const ObjectiveSet& abducibles);

}  // namespace abdual
