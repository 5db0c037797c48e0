#include "abdual/gsm.hpp"

#include <algorithm>
#include <set>

#include "abdual/oracle.hpp"

namespace abdual {
namespace {

const Literal kBottomHead = pos(atom(sym::kBottom));

// Objective literals of P ∪ I together with the abducibles; reserved symbols excluded.
ObjectiveSet language(const AbductiveFramework& fw) {
  ObjectiveSet out;
  for (const auto& o : fw.with_integrity().objective_literals())
    if (!is_reserved_symbol(o.atom)) out.insert(o);
  out.insert(fw.abducibles.begin(), fw.abducibles.end());
  return out;
}

ObjectiveSet user_literals(const AbductiveFramework& fw) {
  ObjectiveSet out;
  for (const auto& o : fw.with_integrity().objective_literals())
    if (!is_reserved_symbol(o.atom)) out.insert(o);
  return out;
}

}  // namespace

ShadowNames::ShadowNames(const AbductiveFramework& fw) {
  ObjectiveSet lang = language(fw);
  std::set<std::string> used;
  for (const auto& o : lang) used.insert(o.atom);
  auto fresh = [&](const std::string& base) {
    std::string name = base;
    for (int k = 1; used.count(name); ++k) name = base + "_" + std::to_string(k);
    used.insert(name);
    return name;
  };
  for (const auto& o : lang) {
    std::string mangled = (o.negated ? "_" : "") + o.atom;
    abd[o] = fresh("abd_" + mangled);
    defined[o] = fresh("defined_" + mangled);
  }
}

Program shadow(const Program& p, const ShadowNames& names) {
  Program out;
  for (const auto& r : p.rules) {
    Rule s = r;
    for (auto& l : s.body)
      if (l.naf && !is_reserved_symbol(l.objective.atom)) l = not_(names.shadow_of(l.objective));
    out.rules.push_back(std::move(s));
  }
  return out;
}

std::vector<Rule> shadow_constraints(const Program& shadowed, const ShadowNames& names) {
  std::set<ObjectiveLiteral> negated;
  for (const auto& r : shadowed.rules)
    for (const auto& l : r.body)
      if (l.naf) negated.insert(l.objective);
  std::vector<Rule> out;
  for (const auto& [o, name] : names.abd) {
    ObjectiveLiteral a = atom(name);
    if (!negated.count(a)) continue;
    out.push_back({kBottomHead, {pos(o), not_(a)}});
    out.push_back({kBottomHead, {not_(o), pos(a)}});
  }
  return out;
}

std::vector<Rule> consistency_constraints(const Program& p, const Program& shadowed, const ShadowNames& names) {
  std::vector<Rule> out = shadow_constraints(shadowed, names);
  ObjectiveSet os;
  for (const auto& o : p.objective_literals())
    if (!is_reserved_symbol(o.atom)) os.insert(o);
  for (const auto& o : os) out.push_back({kBottomHead, {pos(o), not_(o)}});
  for (const auto& o : os)
    if (!o.negated) out.push_back({kBottomHead, {pos(o), pos(conj_e(o))}});
  return out;
}

std::vector<Rule> totality_rules(const Program& p, const ShadowNames& names) {
  std::vector<Rule> out;
  for (const auto& o : p.objective_literals()) {
    if (is_reserved_symbol(o.atom)) continue;
    ObjectiveLiteral d = atom(names.defined.at(o));
    out.push_back({kBottomHead, {not_(d)}});
    out.push_back({pos(d), {pos(o)}});
    out.push_back({pos(d), {not_(o)}});
  }
  return out;
}

AbductiveFramework gsm_framework(const AbductiveFramework& fw, GsmMode mode) {
  ShadowNames names(fw);
  Program source = fw.with_integrity();
  Program shadowed = shadow(source, names);

  AbductiveFramework out;
  out.program = fw.program;
  out.abducibles = fw.abducibles;
  out.integrity = fw.integrity;
  for (const auto& r : shadowed.rules) (r.head == kBottomHead ? out.integrity : out.program.rules).push_back(r);
  for (const auto& r : shadow_constraints(shadowed, names)) {
    out.integrity.push_back(r);
    const ObjectiveLiteral& a = r.body[1].objective;  // the shadow literal of either constraint
    out.abducibles.insert(a);
    out.abducibles.insert(conj_e(a));
  }
  if (mode == GsmMode::Total) {
    Program consist{consistency_constraints(source, shadowed, names)};
    for (const auto& r : consist.rules)
      if (std::find(out.integrity.begin(), out.integrity.end(), r) == out.integrity.end()) out.integrity.push_back(r);
    for (const auto& r : totality_rules(source, names))
      (r.head == kBottomHead ? out.integrity : out.program.rules).push_back(r);
  }
  return out;
}

std::vector<GsmSolution> gsm_solve(const AbductiveFramework& fw, const std::optional<Literal>& q, GsmMode mode,
                                   const EngineOptions& opts) {
  AbductiveFramework reduced = gsm_framework(fw, mode);
  EvaluationResult r = run(reduced, q, opts);
  ObjectiveSet lang = user_literals(fw);
  std::vector<ObjectiveSet> contexts = r.answers;
  // Under paraconsistency bottom can be true and false at once; answer sets must keep it untrue.
  if (mode == GsmMode::Total)
    std::erase_if(contexts, [&](const ObjectiveSet& c) { return scenario_model(reduced, c).t.count(atom(sym::kBottom)) > 0; });
  std::vector<GsmSolution> out;
  for (const auto& ctx : minimal_sets(contexts)) out.push_back({ctx, restrict(scenario_model(reduced, ctx), lang)});
  return out;
}

}  // namespace abdual
