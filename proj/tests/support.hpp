#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "abdual/core.hpp"
#include "abdual/oracle.hpp"

namespace abdual::testing {

struct RandomShape {
  int atoms = 6;
  int max_rules = 8;
  int max_body = 3;
  bool explicit_negation = true;
  int abducible_pairs = 0;
  int max_integrity = 0;
};

// Skips the truth constants t, u and f.
inline std::string atom_name(int i) { return std::string(1, "abcdeghk"[i]); }
inline std::string abducible_name(int i) { return std::string(1, static_cast<char>('x' + i)); }

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  ObjectiveLiteral objective(const RandomShape& s) {
    int total = s.atoms + s.abducible_pairs;
    int k = uniform(0, total - 1);
    std::string name = k < s.atoms ? atom_name(k) : abducible_name(k - s.atoms);
    return {name, s.explicit_negation && coin(0.25)};
  }

  std::vector<Literal> body(const RandomShape& s) {
    std::vector<Literal> out;
    int n = uniform(0, s.max_body);
    for (int i = 0; i < n; ++i) out.emplace_back(objective(s), coin());
    return out;
  }

  Program program(const RandomShape& s) {
    Program p;
    int n = uniform(0, s.max_rules);
    for (int i = 0; i < n; ++i) {
      ObjectiveLiteral head{atom_name(uniform(0, s.atoms - 1)), s.explicit_negation && coin(0.2)};
      p.rules.push_back({pos(head), body(s)});
    }
    return p;
  }

  AbductiveFramework framework(const RandomShape& s) {
    AbductiveFramework fw;
    fw.program = program(s);
    for (int i = 0; i < s.abducible_pairs; ++i) {
      fw.abducibles.insert(atom(abducible_name(i)));
      fw.abducibles.insert(neg(abducible_name(i)));
    }
    int k = uniform(0, s.max_integrity);
    for (int i = 0; i < k; ++i) {
      std::vector<Literal> b = body(s);
      if (b.empty()) b.emplace_back(objective(s), coin());
      fw.integrity.push_back({pos(atom(sym::kBottom)), b});
    }
    return fw;
  }

 private:
  std::mt19937_64 rng_;
};

// Objective literals of P ∪ I together with the abducibles, reserved symbols excluded.
inline ObjectiveSet source_language(const AbductiveFramework& fw) {
  ObjectiveSet out;
  for (const auto& o : fw.with_integrity().objective_literals())
    if (!is_reserved_symbol(o.atom)) out.insert(o);
  out.insert(fw.abducibles.begin(), fw.abducibles.end());
  return out;
}

// Every interpretation over lang: each literal true, false or undefined, and with four_valued also
// both true and false.
inline std::vector<Interpretation> all_interpretations(const ObjectiveSet& lang, bool four_valued = false) {
  const int values = four_valued ? 4 : 3;
  std::vector<ObjectiveLiteral> ls(lang.begin(), lang.end());
  std::vector<Interpretation> out;
  std::vector<int> v(ls.size(), 0);
  for (;;) {
    Interpretation i;
    for (std::size_t k = 0; k < ls.size(); ++k) {
      if (v[k] == 1 || v[k] == 3) i.t.insert(ls[k]);
      if (v[k] == 2 || v[k] == 3) i.f.insert(ls[k]);
    }
    out.push_back(i);
    std::size_t k = 0;
    while (k < ls.size() && v[k] == values - 1) v[k++] = 0;
    if (k == ls.size()) break;
    ++v[k];
  }
  return out;
}

// True literals derived from p when only the default-negated literals are read from i.
inline ObjectiveSet true_given_negatives(const Program& p, const Interpretation& i) {
  ObjectiveSet t;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : p.rules) {
      if (r.head.naf || t.count(r.head.objective)) continue;
      bool fires = std::all_of(r.body.begin(), r.body.end(), [&](const Literal& l) {
        if (l.naf || is_truth_constant(l.objective.atom)) return i.holds(l);
        return t.count(l.objective) > 0;
      });
      if (fires) {
        t.insert(r.head.objective);
        changed = true;
      }
    }
  }
  return t;
}

// Partial stable interpretations in which positive literals are never supported by the interpretation
// itself: the false part is a fixpoint of omega_ext and the true part is derived from it. Enumerates
// every false part over the language of p.
inline std::vector<Interpretation> founded_partial_stable(const Program& p) {
  std::vector<ObjectiveLiteral> ls;
  for (const auto& o : p.objective_literals()) ls.push_back(o);
  std::vector<Interpretation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ls.size()); ++mask) {
    Interpretation i;
    for (std::size_t k = 0; k < ls.size(); ++k)
      if (mask >> k & 1) i.f.insert(ls[k]);
    i.t = true_given_negatives(p, i);
    if (omega_ext(p, i).f == i.f) out.push_back(i);
  }
  return out;
}

// Generalized partial stable interpretations by enumeration: for each scenario B, every founded
// partial stable interpretation of P ∪ P_B ∪ I with bottom false, restricted to the language of P ∪ I.
// With total, only those two-valued and free of contradictions on that language, with bottom untrue.
inline std::vector<Interpretation> brute_force_partial_stable(const AbductiveFramework& fw, bool total) {
  ObjectiveSet user;
  for (const auto& o : fw.with_integrity().objective_literals())
    if (!is_reserved_symbol(o.atom)) user.insert(o);
  ObjectiveLiteral bottom = atom(sym::kBottom);
  std::vector<Interpretation> out;
  for (const auto& sc : enumerate_scenarios(fw)) {
    Program p = fw.with_integrity();
    Program pb = scenario_program(fw.abducibles, sc.abduced);
    p.rules.insert(p.rules.end(), pb.rules.begin(), pb.rules.end());
    bool has_bottom = p.objective_literals().count(bottom) > 0;
    for (const auto& cand : founded_partial_stable(p)) {
      if (has_bottom && !cand.f.count(bottom)) continue;
      if (total && cand.t.count(bottom)) continue;
      Interpretation r = restrict(cand, user);
      if (total) {
        bool two_valued = std::all_of(user.begin(), user.end(), [&](const ObjectiveLiteral& o) {
          return r.t.count(o) || r.f.count(o);
        });
        bool contradiction = std::any_of(r.t.begin(), r.t.end(), [&](const ObjectiveLiteral& o) {
          return r.f.count(o) || r.t.count(conj_e(o));
        });
        if (!two_valued || contradiction) continue;
      }
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  }
  return out;
}

}  // namespace abdual::testing
