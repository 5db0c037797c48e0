#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abdual/core.hpp"
#include "abdual/dual.hpp"

namespace abdual {

// An internal invariant failed: the operation bound or the step budget was exceeded.
struct BugAssertionError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Op {
  Initial,
  NewSubgoal,
  ProgramClauseResolution,
  AnswerClauseResolution,
  Delaying,
  Simplification,
  CoUnfoundedSetRemoval,
  Abduction,
};
inline constexpr std::size_t kOpKinds = 8;

const char* to_string(Op op);

struct EngineOptions {
  // 0 processes the agenda in FIFO order; any other value picks agenda entries pseudo-randomly.
  std::uint64_t seed = 0;
  // Maximum number of operations; 0 derives it from the operation bound with every abducible in context.
  std::size_t step_budget = 0;
  bool unfolded = false;
};

struct ForestNode {
  int id = 0;
  int parent = -1;  // -1 for tree roots
  Literal tree;     // root goal of the tree holding the node
  bool failure = false;
  std::vector<ObjectiveLiteral> context;
  std::vector<Literal> delays;
  std::vector<Literal> goals;
  Op op = Op::Initial;
  bool answer = false;  // regular leaf with empty goal list
};

struct ConditionalAnswer {
  ObjectiveSet context;
  std::vector<Literal> delays;
};

struct EvaluationResult {
  std::vector<ObjectiveSet> answers;  // unconditional query contexts, sorted, unique
  std::vector<ConditionalAnswer> conditional;
  std::size_t operations = 0;
  std::array<std::size_t, kOpKinds> op_counts{};
  std::size_t max_context = 0;
  std::size_t dual_size = 0;
  std::size_t bound = 0;  // M x 2 x dual_size for the observed maximal context
  std::vector<ForestNode> forest;
  Interpretation induced;  // induced interpretation of the final forest

  std::size_t count(Op op) const { return op_counts[static_cast<std::size_t>(op)]; }
};

// Sum over i <= max_context of C(abducibles, i), times 2 x dual_size; saturates instead of overflowing.
std::size_t operation_bound(std::size_t abducibles, std::size_t max_context, std::size_t dual_size);

// Evaluates goal over an already dualized program until the forest is final.
EvaluationResult evaluate(const DualProgram& dp, const ObjectiveSet& abducibles, const Literal& goal,
                          const EngineOptions& opts = {});

// Dualizes P ∪ I ∪ {query :- q, not bottom} and evaluates query.
EvaluationResult run(const AbductiveFramework& fw, const std::optional<Literal>& q, const EngineOptions& opts = {});

std::string forest_text(const EvaluationResult& r);
// One JSON object per line, one line per node.
std::string forest_records(const EvaluationResult& r);

}  // namespace abdual
