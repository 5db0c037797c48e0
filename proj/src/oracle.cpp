#include "abdual/oracle.hpp"

#include <algorithm>
#include <map>

namespace abdual {
namespace {

using RulesByHead = std::map<ObjectiveLiteral, std::vector<const Rule*>>;

RulesByHead by_head(const Program& p, bool negative_heads) {
  RulesByHead m;
  for (const auto& r : p.rules)
    if (r.head.naf == negative_heads) m[r.head.objective].push_back(&r);
  return m;
}

bool objective_in(const Literal& l, const ObjectiveSet& s) {
  return !l.naf && !is_truth_constant(l.objective.atom) && s.count(l.objective);
}

bool negative_in(const Literal& l, const ObjectiveSet& s) {
  return l.naf && !is_truth_constant(l.objective.atom) && s.count(l.objective);
}

template <typename Step>
ObjectiveSet lfp(Step step) {
  ObjectiveSet cur;
  for (;;) {
    ObjectiveSet next = step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

template <typename Step>
ObjectiveSet gfp(ObjectiveSet cur, Step step) {
  for (;;) {
    ObjectiveSet next = step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

template <typename Omega>
Interpretation iterate_lfp(Omega omega, FixpointTrace* trace) {
  Interpretation cur;
  for (;;) {
    Interpretation next = omega(cur);
    if (trace) trace->steps.push_back(next);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace

ObjectiveSet tx_step(const Program& p, const Interpretation& i, const ObjectiveSet& o1) {
  ObjectiveSet out;
  for (const auto& r : p.rules) {
    if (r.head.naf) continue;
    bool fires = std::all_of(r.body.begin(), r.body.end(),
                             [&](const Literal& l) { return i.holds(l) || objective_in(l, o1); });
    if (fires) out.insert(r.head.objective);
  }
  return out;
}

ObjectiveSet fx_step(const Program& p, const Interpretation& i, const ObjectiveSet& o2) {
  RulesByHead heads = by_head(p, false);
  ObjectiveSet out;
  for (const auto& o : p.objective_literals()) {
    if (!is_reserved_symbol(o.atom) && i.t.count(conj_e(o))) {
      out.insert(o);
      continue;
    }
    auto it = heads.find(o);
    bool all_witnessed = it == heads.end() || std::all_of(it->second.begin(), it->second.end(), [&](const Rule* r) {
                           return std::any_of(r->body.begin(), r->body.end(), [&](const Literal& l) {
                             return i.holds(conj_d(l)) || objective_in(l, o2);
                           });
                         });
    if (all_witnessed) out.insert(o);
  }
  return out;
}

Interpretation omega_ext(const Program& p, const Interpretation& i, FixpointTrace* trace) {
  Interpretation out;
  out.t = lfp([&](const ObjectiveSet& o1) {
    if (trace) ++trace->inner_iterations;
    return tx_step(p, i, o1);
  });
  out.f = gfp(p.objective_literals(), [&](const ObjectiveSet& o2) {
    if (trace) ++trace->inner_iterations;
    return fx_step(p, i, o2);
  });
  return out;
}

Interpretation wfs(const Program& p, FixpointTrace* trace) {
  return iterate_lfp([&](const Interpretation& i) { return omega_ext(p, i, trace); }, trace);
}

bool is_partial_stable(const Program& p, const Interpretation& i) { return omega_ext(p, i) == i; }

ObjectiveSet td_step(const Program& dp, const Interpretation& i, const ObjectiveSet& o1) {
  return tx_step(dp, i, o1);
}

ObjectiveSet fd_step(const Program& dp, const Interpretation& i, const ObjectiveSet& l1) {
  ObjectiveSet out;
  for (const auto& r : dp.rules) {
    if (!r.head.naf) continue;
    bool fires = std::all_of(r.body.begin(), r.body.end(),
                             [&](const Literal& l) { return i.holds(l) || negative_in(l, l1); });
    if (fires) out.insert(r.head.objective);
  }
  return out;
}

Interpretation omega_d(const Program& dp, const Interpretation& i) {
  Interpretation out;
  out.t = lfp([&](const ObjectiveSet& o1) { return td_step(dp, i, o1); });
  out.f = gfp(dp.objective_literals(), [&](const ObjectiveSet& l1) { return fd_step(dp, i, l1); });
  return out;
}

Interpretation dual_lfp(const Program& dp) {
  return iterate_lfp([&](const Interpretation& i) { return omega_d(dp, i); }, nullptr);
}

bool wfs_dual_equiv_check(const Program& p, bool unfolded) {
  Interpretation w = wfs(p);
  Interpretation d = dual_lfp((unfolded ? dual_unfold(p, {}) : dual_fold(p, {})).program);
  for (const auto& l : p.literals())
    if (w.holds(l) != d.holds(l)) return false;
  return true;
}

Interpretation scenario_model(const AbductiveFramework& fw, const ObjectiveSet& abduced) {
  Program p = fw.with_integrity();
  Program pb = scenario_program(fw.abducibles, abduced);
  p.rules.insert(p.rules.end(), pb.rules.begin(), pb.rules.end());
  Interpretation m = wfs(p);
  ObjectiveLiteral bottom = atom(sym::kBottom);
  if (!p.objective_literals().count(bottom)) m.f.insert(bottom);  // no integrity rules
  return m;
}

std::vector<ScenarioModel> enumerate_scenarios(const AbductiveFramework& fw, std::size_t max_abducibles) {
  if (fw.abducibles.size() > max_abducibles)
    throw TooManyAbduciblesError("brute force over " + std::to_string(fw.abducibles.size()) +
                                 " abducibles exceeds the guard of " + std::to_string(max_abducibles));
  std::vector<ObjectiveLiteral> pairs;
  for (const auto& a : fw.abducibles)
    if (!a.negated) pairs.push_back(a);
  std::vector<ScenarioModel> out;
  std::vector<int> choice(pairs.size(), 0);  // 0 none, 1 positive, 2 negative
  for (;;) {
    ObjectiveSet b;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (choice[k]) b.insert({pairs[k].atom, choice[k] == 2});
    Program p = fw.with_integrity();
    for (const auto& r : scenario_program(fw.abducibles, b).rules) p.rules.push_back(r);
    out.push_back({b, scenario_model(fw, b), p.objective_literals()});
    std::size_t k = 0;
    while (k < pairs.size() && choice[k] == 2) choice[k++] = 0;
    if (k == pairs.size()) break;
    ++choice[k];
  }
  return out;
}

std::vector<ObjectiveSet> minimal_sets(const std::vector<ObjectiveSet>& sets) {
  std::vector<ObjectiveSet> out;
  for (const auto& s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [&](const ObjectiveSet& t) {
      return t != s && std::includes(s.begin(), s.end(), t.begin(), t.end());
    });
    if (!dominated && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool holds_closed(const Interpretation& m, const ObjectiveSet& language, const Literal& l) {
  if (!is_truth_constant(l.objective.atom) && !language.count(l.objective)) return l.naf;
  return m.holds(l);
}

SolutionSet solutions_from(const std::vector<ScenarioModel>& scenarios, const std::optional<Literal>& q) {
  SolutionSet s;
  for (const auto& sc : scenarios)
    if (sc.model.holds(not_(atom(sym::kBottom))) && (!q || holds_closed(sc.model, sc.language, *q)))
      s.all.push_back(sc.abduced);
  std::sort(s.all.begin(), s.all.end());
  s.minimal = minimal_sets(s.all);
  return s;
}

SolutionSet brute_force_solutions(const AbductiveFramework& fw, const std::optional<Literal>& q,
                                  std::size_t max_abducibles) {
  return solutions_from(enumerate_scenarios(fw, max_abducibles), q);
}

bool is_unfounded_set(const Program& p, const Interpretation& i, const ObjectiveSet& s) {
  RulesByHead heads = by_head(p, false);
  return std::all_of(s.begin(), s.end(), [&](const ObjectiveLiteral& h) {
    auto it = heads.find(h);
    if (it == heads.end()) return true;
    return std::all_of(it->second.begin(), it->second.end(), [&](const Rule* r) {
      return std::any_of(r->body.begin(), r->body.end(),
                         [&](const Literal& l) { return i.holds(conj_d(l)) || objective_in(l, s); });
    });
  });
}

bool is_co_unfounded_literal_set(const Program& dp, const Interpretation& i, const LiteralSet& s) {
  ObjectiveSet members;
  for (const auto& l : s) {
    if (!l.naf) throw ShapeError("co-unfounded sets hold default-negated literals only: " + to_string(l));
    members.insert(l.objective);
  }
  RulesByHead heads = by_head(dp, true);
  return std::all_of(members.begin(), members.end(), [&](const ObjectiveLiteral& h) {
    auto it = heads.find(h);
    if (it == heads.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](const Rule* r) {
      return std::all_of(r->body.begin(), r->body.end(),
                         [&](const Literal& l) { return i.holds(l) || negative_in(l, members); });
    });
  });
}

}  // namespace abdual
