#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "abdual/core.hpp"
#include "abdual/dual.hpp"

namespace abdual {

struct TooManyAbduciblesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A set of literals given to is_co_unfounded_literal_set contains a positive literal.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-iteration snapshots of the outer fixpoint.
struct FixpointTrace {
  std::vector<Interpretation> steps;
  std::size_t inner_iterations = 0;
};

ObjectiveSet tx_step(const Program& p, const Interpretation& i, const ObjectiveSet& o1);
ObjectiveSet fx_step(const Program& p, const Interpretation& i, const ObjectiveSet& o2);
// I2_T = lfp of Tx from the empty set; I2_F = gfp of Fx seeded with objective_literals(p).
Interpretation omega_ext(const Program& p, const Interpretation& i, FixpointTrace* trace = nullptr);
// Least fixpoint of omega_ext over the information ordering.
Interpretation wfs(const Program& p, FixpointTrace* trace = nullptr);
bool is_partial_stable(const Program& p, const Interpretation& i);

// Objective heads regenerated from dual rules.
ObjectiveSet td_step(const Program& dp, const Interpretation& i, const ObjectiveSet& o1);
// Default-negated heads regenerated from dual rules; l1 and the result hold O for each not(O).
ObjectiveSet fd_step(const Program& dp, const Interpretation& i, const ObjectiveSet& l1);
Interpretation omega_d(const Program& dp, const Interpretation& i);
// Least fixpoint of omega_d.
Interpretation dual_lfp(const Program& dp);

// Compares wfs(p) with the dual fixpoint on literals(p).
bool wfs_dual_equiv_check(const Program& p, bool unfolded = false);

// Model of the scenario B: WFS(P ∪ P_B ∪ I).
Interpretation scenario_model(const AbductiveFramework& fw, const ObjectiveSet& abduced);

struct ScenarioModel {
  ObjectiveSet abduced;
  Interpretation model;
  ObjectiveSet language;  // objective literals of P ∪ P_B ∪ I
};

// Truth of l in m, where objective literals outside language have no rules and are false.
bool holds_closed(const Interpretation& m, const ObjectiveSet& language, const Literal& l);

// Every consistent B ⊆ abducibles with its model. Throws when |abducibles| exceeds the guard.
std::vector<ScenarioModel> enumerate_scenarios(const AbductiveFramework& fw, std::size_t max_abducibles = 20);

struct SolutionSet {
  std::vector<ObjectiveSet> all;
  std::vector<ObjectiveSet> minimal;
};

// Solutions among precomputed scenarios: bottom false and q (if given) true.
SolutionSet solutions_from(const std::vector<ScenarioModel>& scenarios, const std::optional<Literal>& q);
SolutionSet brute_force_solutions(const AbductiveFramework& fw, const std::optional<Literal>& q,
                                  std::size_t max_abducibles = 20);

// The subset-minimal members of sets.
std::vector<ObjectiveSet> minimal_sets(const std::vector<ObjectiveSet>& sets);

bool is_unfounded_set(const Program& p, const Interpretation& i, const ObjectiveSet& s);
bool is_co_unfounded_literal_set(const Program& dp, const Interpretation& i, const LiteralSet& s);

}  // namespace abdual
