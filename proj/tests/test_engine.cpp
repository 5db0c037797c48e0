#include <doctest.h>

#include <algorithm>

#include "abdual/dual.hpp"
#include "abdual/engine.hpp"
#include "abdual/oracle.hpp"
#include "abdual/parser.hpp"
#include "support.hpp"

using namespace abdual;

namespace {

const char* kP1 = "p :- not q.\np :- not r.\nq :- not p.";
const char* kP2 = "s :- not p, not q, not r.\np :- not s, not r, q.\nq :- not p, r.\nr :- not q, p.";
const char* kP3 = "p :- not q*.\nq :- not p*.\nabducible p*.\nabducible q*.\n:- p, -p*.\n:- q, -q*.";

std::vector<std::optional<Literal>> all_queries(const AbductiveFramework& fw) {
  std::vector<std::optional<Literal>> out{std::nullopt};
  for (const auto& l : fw.with_integrity().literals())
    if (!is_reserved_symbol(l.objective.atom)) out.emplace_back(l);
  for (const auto& a : fw.abducibles) {
    out.emplace_back(pos(a));
    out.emplace_back(not_(a));
  }
  return out;
}

bool extends_some(const ObjectiveSet& s, const std::vector<ObjectiveSet>& sets) {
  return std::any_of(sets.begin(), sets.end(),
                     [&](const ObjectiveSet& c) { return std::includes(s.begin(), s.end(), c.begin(), c.end()); });
}

std::string describe(const AbductiveFramework& fw, const std::optional<Literal>& q) {
  return serialize(fw) + "query: " + (q ? to_string(*q) : std::string("(none)"));
}

}  // namespace

TEST_CASE("P1 has no solution for q") {
  AbductiveFramework fw = parse_framework(kP1);
  EvaluationResult r = run(fw, pos(atom("q")));
  CHECK(r.answers.empty());
  CHECK(r.induced.f.count(atom("q")));
  CHECK(r.operations <= r.bound);
}

TEST_CASE("P2 has one unconditional answer through co-unfounded set removal") {
  AbductiveFramework fw = parse_framework(kP2);
  EvaluationResult r = run(fw, pos(atom("s")));
  CHECK(r.answers == std::vector<ObjectiveSet>{{}});
  CHECK(r.count(Op::CoUnfoundedSetRemoval) >= 1);
  CHECK(r.induced.t.count(atom("s")));
  CHECK(r.operations <= r.bound);
}

TEST_CASE("P3 abduces -p* and q* for q") {
  AbductiveFramework fw = parse_framework(kP3);
  EvaluationResult r = run(fw, pos(atom("q")));
  CHECK(minimal_sets(r.answers) == std::vector<ObjectiveSet>{{neg("p*"), atom("q*")}});
  CHECK(r.count(Op::Abduction) >= 1);
  CHECK(r.operations <= r.bound);
}

TEST_CASE("a self-supporting negative literal becomes unconditional") {
  EvaluationResult r = run(parse_framework("a :- a."), not_(atom("a")));
  CHECK(r.answers == std::vector<ObjectiveSet>{{}});
  CHECK(r.count(Op::CoUnfoundedSetRemoval) >= 1);
}

TEST_CASE("inconsistent contexts are never combined") {
  // not bottom needs p* while the query already abduced -p*.
  AbductiveFramework fw = parse_framework("q :- -p*.\nabducible p*.\n:- not p*.");
  EvaluationResult r = run(fw, pos(atom("q")));
  CHECK(r.answers.empty());
  for (const auto& n : r.forest) CHECK(consistent_set(ObjectiveSet(n.context.begin(), n.context.end())));
}

TEST_CASE("forest dumps") {
  EvaluationResult r = run(parse_framework(kP1), pos(atom("q")));
  CHECK_FALSE(r.forest.empty());
  std::string text = forest_text(r);
  CHECK(text.find("query") != std::string::npos);
  std::string records = forest_records(r);
  CHECK(std::count(records.begin(), records.end(), '\n') == static_cast<long>(r.forest.size()));
}

TEST_CASE("step budget breach raises a bug assertion") {
  EngineOptions opts;
  opts.step_budget = 3;
  CHECK_THROWS_AS(run(parse_framework(kP2), pos(atom("s")), opts), BugAssertionError);
}

TEST_CASE("operation bound") {
  CHECK(operation_bound(0, 0, 10) == 20);
  CHECK(operation_bound(4, 2, 10) == (1 + 4 + 6) * 20);
  CHECK(operation_bound(4, 4, 1) == 16 * 2);
  CHECK(operation_bound(200, 200, 1000) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("engine answers agree with brute-force solutions on random frameworks") {
  testing::Generator g(41);
  testing::RandomShape shape;
  shape.abducible_pairs = 3;
  shape.max_integrity = 2;
  int evaluations = 0;
  for (int k = 0; k < 300; ++k) {
    shape.abducible_pairs = g.uniform(0, 3);
    AbductiveFramework fw = g.framework(shape);
    std::vector<ScenarioModel> scenarios = enumerate_scenarios(fw);
    for (const auto& q : all_queries(fw)) {
      ++evaluations;
      EvaluationResult r = run(fw, q);
      SolutionSet s = solutions_from(scenarios, q);
      CHECK(r.operations <= r.bound);
      // Every answer is itself a solution and every solution extends an answer.
      for (const auto& c : r.answers)
        CHECK_MESSAGE(std::find(s.all.begin(), s.all.end(), c) != s.all.end(), describe(fw, q));
      for (const auto& b : s.all) CHECK_MESSAGE(extends_some(b, r.answers), describe(fw, q));
      CHECK_MESSAGE(minimal_sets(r.answers) == s.minimal, describe(fw, q));
    }
  }
  CHECK(evaluations > 3000);
}

TEST_CASE("unfolded evaluation has the same minimal answers as folded evaluation") {
  testing::Generator g(43);
  testing::RandomShape shape;
  shape.abducible_pairs = 2;
  shape.max_integrity = 1;
  EngineOptions unfolded;
  unfolded.unfolded = true;
  for (int k = 0; k < 100; ++k) {
    AbductiveFramework fw = g.framework(shape);
    for (const auto& q : all_queries(fw))
      CHECK_MESSAGE(minimal_sets(run(fw, q).answers) == minimal_sets(run(fw, q, unfolded).answers), describe(fw, q));
  }
}

TEST_CASE("scheduling order does not change answers") {
  testing::Generator g(47);
  testing::RandomShape shape;
  shape.abducible_pairs = 2;
  shape.max_integrity = 2;
  for (int k = 0; k < 150; ++k) {
    AbductiveFramework fw = g.framework(shape);
    for (const auto& q : all_queries(fw)) {
      std::vector<ObjectiveSet> fifo = run(fw, q).answers;
      for (std::uint64_t seed : {1u, 7u, 99u}) {
        EngineOptions opts;
        opts.seed = seed;
        CHECK_MESSAGE(run(fw, q, opts).answers == fifo, describe(fw, q));
      }
    }
  }
}

TEST_CASE("induced interpretation is below the well-founded model") {
  testing::Generator g(53);
  for (int k = 0; k < 300; ++k) {
    AbductiveFramework fw = g.framework({});
    for (const auto& q : all_queries(fw)) {
      EvaluationResult r = run(fw, q);
      Program attached = attach_query(fw, q);
      Interpretation w = wfs(attached);
      CHECK_MESSAGE(info_leq(restrict(r.induced, attached.objective_literals()), w), describe(fw, q));
      bool query_true = w.t.count(atom(sym::kQuery)) > 0;
      CHECK_MESSAGE(query_true == (r.answers == std::vector<ObjectiveSet>{{}}), describe(fw, q));
    }
  }
}
