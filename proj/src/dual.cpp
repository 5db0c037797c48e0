#include "abdual/dual.hpp"

#include <algorithm>
#include <map>

namespace abdual {
namespace {

// Positive atoms keep their name; explicitly negated ones get a leading underscore,
// which no source atom can start with.
std::string mangle(const ObjectiveLiteral& o) { return (o.negated ? "_" : "") + o.atom; }

Literal not_atom(const std::string& name) { return not_(atom(name)); }

struct HeadIndex {
  std::vector<ObjectiveLiteral> order;  // heads by first appearance
  std::map<ObjectiveLiteral, std::vector<const Rule*>> rules;
};

HeadIndex index_heads(const Program& p) {
  HeadIndex ix;
  for (const auto& r : p.rules) {
    if (r.head.naf) continue;
    auto [it, fresh] = ix.rules.try_emplace(r.head.objective);
    if (fresh) ix.order.push_back(r.head.objective);
    it->second.push_back(&r);
  }
  return ix;
}

bool has_fact(const std::vector<const Rule*>& rs) {
  return std::any_of(rs.begin(), rs.end(), [](const Rule* r) { return r->body.empty(); });
}

DualProgram with_source(const Program& p) {
  DualProgram d;
  for (const auto& r : p.rules)
    d.add(r, r.head == pos(atom(sym::kQuery)) ? RuleOrigin::Query : RuleOrigin::Source);
  return d;
}

// not(O). for every rule-less O in objective_literals(p) that is not abducible.
void add_ruleless(DualProgram& d, const Program& p, const HeadIndex& ix, const ObjectiveSet& abducibles) {
  for (const auto& o : p.objective_literals())
    if (!ix.rules.count(o) && !abducibles.count(o)) d.add({not_(o), {}}, RuleOrigin::Folding);
}

void add_coherency(DualProgram& d, const Program& p, const ObjectiveSet& abducibles) {
  ObjectiveSet os = p.objective_literals();
  os.insert(abducibles.begin(), abducibles.end());
  for (const auto& o : os)
    if (!is_reserved_symbol(o.atom)) d.add({not_(o), {pos(conj_e(o))}}, RuleOrigin::Coherency);
}

}  // namespace

const char* to_string(RuleOrigin o) {
  switch (o) {
    case RuleOrigin::Source: return "source";
    case RuleOrigin::Query: return "query";
    case RuleOrigin::Folding: return "folding";
    case RuleOrigin::Coherency: return "coherency";
  }
  return "?";
}

void DualProgram::add(Rule r, RuleOrigin o) {
  program.rules.push_back(std::move(r));
  origin.push_back(o);
}

std::string fold_a_name(std::size_t i, const ObjectiveLiteral& o) {
  return sym::kFoldA + std::to_string(i) + "_" + mangle(o);
}

std::string fold_b_name(std::size_t i, const ObjectiveLiteral& o) {
  return sym::kFoldB + std::to_string(i) + "_" + mangle(o);
}

DualProgram dual_fold(const Program& p, const ObjectiveSet& abducibles) {
  DualProgram d = with_source(p);
  HeadIndex ix = index_heads(p);
  for (const auto& o : ix.order) {
    const auto& rs = ix.rules.at(o);
    if (has_fact(rs)) continue;
    const std::size_t beta = rs.size();
    d.add({not_(o), {not_atom(fold_a_name(1, o))}}, RuleOrigin::Folding);
    for (std::size_t i = 1; i <= beta; ++i) {
      Rule chain{not_atom(fold_a_name(i, o)), {not_atom(fold_b_name(i, o))}};
      if (i < beta) chain.body.push_back(not_atom(fold_a_name(i + 1, o)));
      d.add(std::move(chain), RuleOrigin::Folding);
    }
    for (std::size_t i = 1; i <= beta; ++i)
      for (const auto& l : rs[i - 1]->body) d.add({not_atom(fold_b_name(i, o)), {conj_d(l)}}, RuleOrigin::Folding);
  }
  add_ruleless(d, p, ix, abducibles);
  add_coherency(d, p, abducibles);
  return d;
}

DualProgram dual_unfold(const Program& p, const ObjectiveSet& abducibles) {
  DualProgram d = with_source(p);
  HeadIndex ix = index_heads(p);
  for (const auto& o : ix.order) {
    const auto& rs = ix.rules.at(o);
    if (has_fact(rs)) continue;
    std::vector<std::vector<Literal>> bodies{{}};
    for (const Rule* r : rs) {
      std::vector<std::vector<Literal>> next;
      for (const auto& partial : bodies)
        for (const auto& l : r->body) {
          auto b = partial;
          Literal c = conj_d(l);
          if (std::find(b.begin(), b.end(), c) == b.end()) b.push_back(c);
          if (std::find(next.begin(), next.end(), b) == next.end()) next.push_back(std::move(b));
        }
      bodies = std::move(next);
    }
    for (auto& b : bodies) d.add({not_(o), std::move(b)}, RuleOrigin::Folding);
  }
  add_ruleless(d, p, ix, abducibles);
  add_coherency(d, p, abducibles);
  return d;
}

Program attach_query(const AbductiveFramework& fw, const std::optional<Literal>& q) {
  Program p = fw.with_integrity();
  Rule query{pos(atom(sym::kQuery)), {}};
  if (q) {
    if (is_reserved_symbol(q->objective.atom)) throw ReservedSymbolError("query uses reserved symbol: " + q->objective.atom);
    query.body.push_back(*q);
  }
  query.body.push_back(not_(atom(sym::kBottom)));
  p.rules.push_back(std::move(query));
  return p;
}

SizeCheck dual_size_check(const Program& p, const ObjectiveSet& abducibles) {
  SizeCheck c;
  c.size_in = p.size();
  c.size_out = dual_fold(p, abducibles).size();
  c.bound = 9 * c.size_in + 2 * abducibles.size();
  // The strict inequality is vacuous for an empty program with no abducibles.
  c.bound_ok = c.size_out < c.bound || (c.size_in == 0 && abducibles.empty() && c.size_out == 0);
  return c;
}

}  // namespace abdual
