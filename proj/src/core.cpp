#include "abdual/core.hpp"

#include <algorithm>

namespace abdual {

bool is_truth_constant(const std::string& atom) {
  return atom == sym::kTrue || atom == sym::kUndefined || atom == sym::kFalse;
}

bool is_folding_symbol(const std::string& atom) {
  return atom.starts_with(sym::kFoldA) || atom.starts_with(sym::kFoldB);
}

bool is_reserved_symbol(const std::string& atom) {
  return is_truth_constant(atom) || atom == sym::kBottom || atom == sym::kQuery || is_folding_symbol(atom);
}

ObjectiveLiteral atom(const std::string& name) { return {name, false}; }
ObjectiveLiteral neg(const std::string& name) { return {name, true}; }
Literal pos(const ObjectiveLiteral& o) { return Literal(o, false); }
Literal not_(const ObjectiveLiteral& o) { return Literal(o, true); }

ObjectiveLiteral conj_e(const ObjectiveLiteral& o) {
  if (is_reserved_symbol(o.atom)) throw ReservedSymbolError("reserved symbol cannot be explicitly negated: " + o.atom);
  return {o.atom, !o.negated};
}

Literal conj_d(const Literal& l) { return Literal(l.objective, !l.naf); }

std::string to_string(const ObjectiveLiteral& o) { return (o.negated ? "-" : "") + o.atom; }

std::string to_string(const Literal& l) { return (l.naf ? "not " : "") + to_string(l.objective); }

ObjectiveSet close_explicit(const ObjectiveSet& s) {
  ObjectiveSet out = s;
  for (const auto& o : s)
    if (!is_reserved_symbol(o.atom)) out.insert(conj_e(o));
  return out;
}

bool consistent_set(const ObjectiveSet& s) {
  return std::none_of(s.begin(), s.end(), [&](const ObjectiveLiteral& o) {
    return !o.negated && s.count({o.atom, true});
  });
}

ObjectiveSet Program::objective_literals() const {
  ObjectiveSet s;
  auto add = [&](const Literal& l) {
    if (!is_truth_constant(l.objective.atom)) s.insert(l.objective);
  };
  for (const auto& r : rules) {
    add(r.head);
    for (const auto& l : r.body) add(l);
  }
  return close_explicit(s);
}

LiteralSet Program::literals() const {
  LiteralSet s;
  for (const auto& o : objective_literals()) {
    s.insert(pos(o));
    s.insert(not_(o));
  }
  return s;
}

std::size_t Program::size() const {
  std::size_t n = 0;
  for (const auto& r : rules) n += 1 + r.body.size();
  return n;
}

bool Interpretation::holds(const Literal& l) const {
  const auto& a = l.objective.atom;
  if (a == sym::kTrue) return !l.naf;
  if (a == sym::kFalse) return l.naf;
  if (a == sym::kUndefined) return false;
  return l.naf ? f.count(l.objective) > 0 : t.count(l.objective) > 0;
}

bool Interpretation::consistent() const {
  return std::none_of(t.begin(), t.end(), [&](const ObjectiveLiteral& o) { return f.count(o) > 0; });
}

bool Interpretation::coherent() const {
  return std::all_of(t.begin(), t.end(), [&](const ObjectiveLiteral& o) {
    return is_reserved_symbol(o.atom) || f.count(conj_e(o)) > 0;
  });
}

bool info_leq(const Interpretation& a, const Interpretation& b) {
  return std::includes(b.t.begin(), b.t.end(), a.t.begin(), a.t.end()) &&
         std::includes(b.f.begin(), b.f.end(), a.f.begin(), a.f.end());
}

Interpretation restrict(const Interpretation& i, const ObjectiveSet& s) {
  Interpretation out;
  for (const auto& o : i.t)
    if (s.count(o)) out.t.insert(o);
  for (const auto& o : i.f)
    if (s.count(o)) out.f.insert(o);
  return out;
}

std::string to_string(const Interpretation& i) {
  std::vector<Literal> ls;
  for (const auto& o : i.t) ls.push_back(pos(o));
  for (const auto& o : i.f) ls.push_back(not_(o));
  std::sort(ls.begin(), ls.end());
  std::string out = "{";
  for (std::size_t k = 0; k < ls.size(); ++k) out += (k ? ", " : "") + to_string(ls[k]);
  return out + "}";
}

void AbductiveFramework::validate() const {
  for (const auto& a : abducibles) {
    if (is_reserved_symbol(a.atom)) throw std::invalid_argument("reserved symbol declared abducible: " + a.atom);
    if (!abducibles.count(conj_e(a))) throw std::invalid_argument("abducibles not closed under explicit negation");
  }
  for (const auto& r : program.rules) {
    if (r.head.naf) throw std::invalid_argument("source rule head is default-negated");
    if (abducibles.count(r.head.objective)) throw std::invalid_argument("rule head is abducible: " + to_string(r.head));
  }
  for (const auto& r : integrity)
    if (r.head != pos(atom(sym::kBottom))) throw std::invalid_argument("integrity rule head is not bottom");
}

Program AbductiveFramework::with_integrity() const {
  Program p = program;
  p.rules.insert(p.rules.end(), integrity.begin(), integrity.end());
  return p;
}

Program scenario_program(const ObjectiveSet& abducibles, const ObjectiveSet& abduced) {
  if (!consistent_set(abduced)) throw InconsistentScenarioError("scenario abduces a literal and its explicit conjugate");
  Program p;
  for (const auto& a : abducibles)
    p.rules.push_back({pos(a), {pos(atom(abduced.count(a) ? sym::kTrue : sym::kUndefined))}});
  return p;
}

}  // namespace abdual
