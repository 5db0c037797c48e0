#include <doctest.h>

#include <algorithm>

#include "abdual/gsm.hpp"
#include "abdual/oracle.hpp"
#include "abdual/parser.hpp"
#include "support.hpp"

using namespace abdual;

namespace {

const char* kEven = "p :- not q.\nq :- not p.";

std::vector<Rule> sorted(std::vector<Rule> rs) {
  std::sort(rs.begin(), rs.end());
  return rs;
}

ObjectiveSet user_literals(const AbductiveFramework& fw) {
  ObjectiveSet out;
  for (const auto& o : fw.with_integrity().objective_literals())
    if (!is_reserved_symbol(o.atom)) out.insert(o);
  return out;
}

// Objective literals whose default negation occurs in a rule body of P ∪ I.
ObjectiveSet shadowed_literals(const AbductiveFramework& fw) {
  ObjectiveSet out;
  for (const auto& r : fw.with_integrity().rules)
    for (const auto& l : r.body)
      if (l.naf && !is_reserved_symbol(l.objective.atom)) out.insert(l.objective);
  return out;
}

// Models, restricted to the source language, of every scenario of the reduction that extends an
// engine answer; total mode drops models in which bottom is true.
std::vector<Interpretation> engine_models(const AbductiveFramework& fw, GsmMode mode) {
  AbductiveFramework reduced = gsm_framework(fw, mode);
  std::vector<ObjectiveSet> answers = run(reduced, std::nullopt).answers;
  ObjectiveSet lang = user_literals(fw);
  std::vector<Interpretation> out;
  for (const auto& sc : enumerate_scenarios(reduced)) {
    bool extends = std::any_of(answers.begin(), answers.end(), [&](const ObjectiveSet& c) {
      return std::includes(sc.abduced.begin(), sc.abduced.end(), c.begin(), c.end());
    });
    if (!extends) continue;
    if (mode == GsmMode::Total && sc.model.t.count(atom(sym::kBottom))) continue;
    Interpretation r = restrict(sc.model, lang);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const Interpretation& a, const Interpretation& b) {
    return std::tie(a.t, a.f) < std::tie(b.t, b.f);
  });
  return out;
}

std::vector<Interpretation> sorted(std::vector<Interpretation> is) {
  std::sort(is.begin(), is.end(),
            [](const Interpretation& a, const Interpretation& b) { return std::tie(a.t, a.f) < std::tie(b.t, b.f); });
  return is;
}

Interpretation model(std::initializer_list<ObjectiveLiteral> t, std::initializer_list<ObjectiveLiteral> f) {
  return {ObjectiveSet(t), ObjectiveSet(f)};
}

}  // namespace

TEST_CASE("shadow rules rewrite default-negated body literals") {
  AbductiveFramework fw = parse_framework(kEven);
  ShadowNames names(fw);
  CHECK(shadow(fw.program, names).rules == parse_program("p :- not abd_q.\nq :- not abd_p.").rules);
  AbductiveFramework cb = parse_framework("c :- not b.\nb :- a.");
  CHECK(shadow(cb.program, ShadowNames(cb)).rules == parse_program("c :- not abd_b.\nb :- a.").rules);
  AbductiveFramework positive = parse_framework("a :- b, -c.");
  CHECK(shadow(positive.program, ShadowNames(positive)).rules == positive.program.rules);
}

TEST_CASE("shadow names avoid collisions and encode explicit negation") {
  AbductiveFramework fw = parse_framework("abd_p :- not p.\np :- not -p.");
  ShadowNames names(fw);
  CHECK(names.abd.at(atom("p")) == "abd_p_1");
  CHECK(names.abd.at(neg("p")) == "abd__p");
  CHECK(names.defined.at(neg("p")) == "defined__p");
}

TEST_CASE("shadow constraints") {
  AbductiveFramework fw = parse_framework(kEven);
  ShadowNames names(fw);
  Program shadowed = shadow(fw.program, names);
  CHECK(sorted(shadow_constraints(shadowed, names)) ==
        sorted(parse_program(":- p, not abd_p.\n:- q, not abd_q.\n:- not p, abd_p.\n:- not q, abd_q.").rules));
  AbductiveFramework positive = parse_framework("a :- b.");
  ShadowNames pn(positive);
  CHECK(shadow_constraints(shadow(positive.program, pn), pn).empty());
  AbductiveFramework one = parse_framework("c :- not b.");
  ShadowNames on(one);
  CHECK(shadow_constraints(shadow(one.program, on), on).size() == 2);
}

TEST_CASE("consistency constraints") {
  AbductiveFramework fw = parse_framework("p.");
  ShadowNames names(fw);
  CHECK(sorted(consistency_constraints(fw.program, shadow(fw.program, names), names)) ==
        sorted(parse_program(":- p, not p.\n:- -p, not -p.\n:- p, -p.").rules));
  AbductiveFramework empty;
  ShadowNames en(empty);
  CHECK(consistency_constraints(empty.program, empty.program, en).empty());
  AbductiveFramework even = parse_framework(kEven);
  ShadowNames evn(even);
  std::vector<Rule> c = consistency_constraints(even.program, shadow(even.program, evn), evn);
  for (const auto& r : parse_program(":- p, not p.\n:- q, -q.\n:- q, not abd_q.").rules)
    CHECK(std::count(c.begin(), c.end(), r) == 1);
}

TEST_CASE("totality rules") {
  AbductiveFramework fw = parse_framework("p.");
  std::vector<Rule> t = totality_rules(fw.program, ShadowNames(fw));
  CHECK(sorted(t) == sorted(parse_program(":- not defined_p.\ndefined_p :- p.\ndefined_p :- not p.\n"
                                          ":- not defined__p.\ndefined__p :- -p.\ndefined__p :- not -p.")
                                .rules));
  AbductiveFramework empty;
  CHECK(totality_rules(empty.program, ShadowNames(empty)).empty());
}

TEST_CASE("even loop through the reduction") {
  // Frozen from the brute-force solutions of the reduced framework.
  AbductiveFramework fw = parse_framework(kEven);
  for (GsmMode mode : {GsmMode::Partial, GsmMode::Total}) {
    AbductiveFramework reduced = gsm_framework(fw, mode);
    std::vector<ObjectiveSet> oracle = brute_force_solutions(reduced, std::nullopt).minimal;
    std::vector<GsmSolution> sols = gsm_solve(fw, std::nullopt, mode);
    std::vector<ObjectiveSet> contexts;
    for (const auto& s : sols) contexts.push_back(s.context);
    CHECK(contexts == oracle);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].context == ObjectiveSet{atom("abd_p"), neg("abd_q")});
    CHECK(sols[0].model == model({atom("p")}, {neg("p"), atom("q"), neg("q")}));
    CHECK(sols[1].context == ObjectiveSet{neg("abd_p"), atom("abd_q")});
    CHECK(sols[1].model == model({atom("q")}, {atom("p"), neg("p"), neg("q")}));
  }
}

TEST_CASE("a stratified program has one stable model") {
  AbductiveFramework fw = parse_framework("a :- not b.");
  std::vector<GsmSolution> sols = gsm_solve(fw, std::nullopt, GsmMode::Total);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].model == model({atom("a")}, {neg("a"), atom("b"), neg("b")}));
  std::vector<Interpretation> oracle = testing::brute_force_partial_stable(fw, true);
  CHECK(oracle == std::vector<Interpretation>{sols[0].model});
}

TEST_CASE("total mode rejects contradictory models") {
  AbductiveFramework fw = parse_framework("p :- not q.\nq :- not p.\n-p.");
  std::vector<GsmSolution> sols = gsm_solve(fw, std::nullopt, GsmMode::Total);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].model == model({neg("p"), atom("q")}, {atom("p"), neg("q")}));
  CHECK(testing::brute_force_partial_stable(fw, true) == std::vector<Interpretation>{sols[0].model});
}

TEST_CASE("an odd loop has no stable model") {
  AbductiveFramework fw = parse_framework("a :- not a.");
  CHECK(gsm_solve(fw, std::nullopt, GsmMode::Partial).empty());
  CHECK(gsm_solve(fw, std::nullopt, GsmMode::Total).empty());
}

TEST_CASE("queries restrict the generalized stable models") {
  AbductiveFramework fw = parse_framework(kEven);
  std::vector<GsmSolution> sols = gsm_solve(fw, pos(atom("q")), GsmMode::Total);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].model.t.count(atom("q")));
}

TEST_CASE("partial mode models are partial stable and include every one classical on shadowed literals") {
  testing::Generator g(59);
  testing::RandomShape shape;
  shape.atoms = 3;
  shape.max_rules = 4;
  shape.max_body = 2;
  shape.max_integrity = 1;
  for (int k = 0; k < 300; ++k) {
    shape.abducible_pairs = g.uniform(0, 1);
    shape.explicit_negation = g.coin(0.3);
    AbductiveFramework fw = g.framework(shape);
    ObjectiveSet shadowed = shadowed_literals(fw);
    std::vector<Interpretation> all = testing::brute_force_partial_stable(fw, false);
    std::vector<Interpretation> found = engine_models(fw, GsmMode::Partial);
    for (const auto& m : found)
      CHECK_MESSAGE(std::find(all.begin(), all.end(), m) != all.end(), serialize(fw));
    for (const auto& i : all) {
      bool classical = std::all_of(shadowed.begin(), shadowed.end(),
                                   [&](const ObjectiveLiteral& o) { return i.t.count(o) != i.f.count(o); });
      if (classical) CHECK_MESSAGE(std::find(found.begin(), found.end(), i) != found.end(), serialize(fw));
    }
  }
}

TEST_CASE("total mode models are the consistent answer sets") {
  testing::Generator g(61);
  testing::RandomShape shape;
  shape.atoms = 3;
  shape.max_rules = 4;
  shape.max_body = 2;
  shape.max_integrity = 1;
  for (int k = 0; k < 300; ++k) {
    shape.abducible_pairs = g.uniform(0, 1);
    shape.explicit_negation = g.coin(0.3);
    AbductiveFramework fw = g.framework(shape);
    CHECK_MESSAGE(engine_models(fw, GsmMode::Total) == sorted(testing::brute_force_partial_stable(fw, true)),
                  serialize(fw));
  }
}

TEST_CASE("partial mode contains the well-founded model when it is two-valued on shadowed literals") {
  testing::Generator g(67);
  testing::RandomShape shape;
  shape.atoms = 3;
  shape.max_rules = 4;
  shape.max_body = 2;
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    AbductiveFramework fw = g.framework(shape);
    Interpretation w = restrict(wfs(fw.program), user_literals(fw));
    ObjectiveSet shadowed = shadowed_literals(fw);
    bool two_valued = std::all_of(shadowed.begin(), shadowed.end(),
                                  [&](const ObjectiveLiteral& o) { return w.t.count(o) || w.f.count(o); });
    if (!two_valued) continue;
    ++checked;
    std::vector<Interpretation> ms = engine_models(fw, GsmMode::Partial);
    CHECK_MESSAGE(std::find(ms.begin(), ms.end(), w) != ms.end(), serialize(fw));
  }
  CHECK(checked > 30);
}
