#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abdual/core.hpp"
#include "abdual/engine.hpp"

namespace abdual {

enum class GsmMode { Partial, Total };

// Fresh atom names for the shadow and totality literals of a framework.
struct ShadowNames {
  std::map<ObjectiveLiteral, std::string> abd;
  std::map<ObjectiveLiteral, std::string> defined;

  explicit ShadowNames(const AbductiveFramework& fw);
  ObjectiveLiteral shadow_of(const ObjectiveLiteral& o) const { return atom(abd.at(o)); }
};

// Rewrites every default-negated body literal not(O) to not(abd_O).
Program shadow(const Program& p, const ShadowNames& names);
// bottom :- O, not abd_O and bottom :- not O, abd_O for every abd_O negated in shadowed.
std::vector<Rule> shadow_constraints(const Program& shadowed, const ShadowNames& names);
// Shadow constraints plus bottom :- O, not O and bottom :- A, -A over the objective literals of p.
std::vector<Rule> consistency_constraints(const Program& p, const Program& shadowed, const ShadowNames& names);
// bottom :- not defined_O, defined_O :- O and defined_O :- not O for every objective literal of p.
std::vector<Rule> totality_rules(const Program& p, const ShadowNames& names);

// The framework whose solutions correspond to generalized (partial or total) stable models of fw.
AbductiveFramework gsm_framework(const AbductiveFramework& fw, GsmMode mode);

struct GsmSolution {
  ObjectiveSet context;
  Interpretation model;  // restricted to the objective literals of the source framework
};

// Subset-minimal solution contexts of the reduction with their models. Total mode also rejects
// contexts whose model makes bottom true.
std::vector<GsmSolution> gsm_solve(const AbductiveFramework& fw, const std::optional<Literal>& q, GsmMode mode,
                                   const EngineOptions& opts = {});

}  // namespace abdual
