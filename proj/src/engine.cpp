#include "abdual/engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

namespace abdual {
namespace {

using Ids = std::vector<int>;

bool subset(const Ids& a, const Ids& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Ids merged(const Ids& a, const Ids& b) {
  Ids out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Ids with(const Ids& a, int x) { return merged(a, Ids{x}); }

Ids without(const Ids& a, int x) {
  Ids out;
  for (int y : a)
    if (y != x) out.push_back(y);
  return out;
}

struct Node {
  int parent = -1;
  int tree = -1;
  bool root = false;
  bool failure = false;
  Ids context;  // sorted abducible ids
  Ids delays;   // sorted literal ids
  Ids goals;    // in selection order
  Op op = Op::Initial;
  int children = 0;
  bool failed = false;  // has a failure child
  std::size_t cursor = 0;  // next entry of the selected literal's answer log
  bool expanded = false;
  bool consumer = false;
  bool waiter = false;
};

struct Tree {
  int literal = -1;
  int root = -1;
  bool complete = false;
  bool empty_unconditional = false;
  Ids nodes;
  Ids answer_log;  // every node that became an answer, in creation order
  std::set<std::tuple<Ids, Ids, Ids>> keys;
};

class Engine {
 public:
  Engine(const DualProgram& dp, const ObjectiveSet& abducibles, const EngineOptions& opts)
      : opts_(opts), rng_(opts.seed), dual_size_(dp.size()), abducible_count_(abducibles.size()) {
    for (const auto& a : abducibles) abducible_[intern(pos(a))] = true;
    for (const auto& r : dp.program.rules) {
      int h = intern(r.head);
      Ids body;
      for (const auto& l : r.body) body.push_back(intern(l));
      rules_[h].push_back(std::move(body));
    }
    budget_ = opts.step_budget ? opts.step_budget : operation_bound(abducible_count_, abducible_count_, dual_size_);
  }

  EvaluationResult evaluate(const Literal& goal) {
    int g = intern(goal);
    query_tree_ = new_tree(g, false);
    for (;;) {
      saturate();
      for (auto& t : trees_) t.complete = true;
      if (fail_delays()) continue;
      if (remove_co_unfounded()) continue;
      break;
    }
    return result();
  }

 private:
  int intern(const Literal& l) {
    auto [it, fresh] = ids_.try_emplace(l, static_cast<int>(lits_.size()));
    if (fresh) {
      lits_.push_back(l);
      abducible_.push_back(false);
      tree_of_.push_back(-1);
      rules_.emplace_back();
      consumers_.emplace_back();
      waiters_.emplace_back();
      conj_.push_back(-1);
      if (!is_reserved_symbol(l.objective.atom) && !l.naf) {
        int c = intern(pos(conj_e(l.objective)));
        conj_[it->second] = c;
        conj_[c] = it->second;
      }
    }
    return it->second;
  }

  bool consistent(const Ids& a, const Ids& b) const {
    for (int x : a)
      if (conj_[x] >= 0 && std::binary_search(b.begin(), b.end(), conj_[x])) return false;
    return true;
  }

  bool objective_abducible(int lit) const {
    const Literal& l = lits_[lit];
    if (!l.naf) return abducible_[lit];
    auto it = ids_.find(pos(l.objective));
    return it != ids_.end() && abducible_[it->second];
  }

  bool is_answer(int n) const {
    const Node& x = nodes_[n];
    return !x.failure && !x.root && x.goals.empty() && x.children == 0;
  }

  void count(Op op) {
    ++ops_;
    ++op_counts_[static_cast<std::size_t>(op)];
    if (ops_ > budget_) throw BugAssertionError("operation count exceeded the step budget of " + std::to_string(budget_));
  }

  int new_tree(int lit, bool counted) {
    if (counted) count(Op::NewSubgoal);
    int t = static_cast<int>(trees_.size());
    trees_.push_back({});
    trees_[t].literal = lit;
    tree_of_[lit] = t;
    Node root;
    root.tree = t;
    root.root = true;
    root.goals = {lit};
    root.op = counted ? Op::NewSubgoal : Op::Initial;
    int id = add_node(std::move(root));
    trees_[t].root = id;
    return t;
  }

  int add_node(Node n) {
    int id = static_cast<int>(nodes_.size());
    trees_[n.tree].nodes.push_back(id);
    nodes_.push_back(std::move(n));
    agenda_.push_back(id);
    return id;
  }

  // Adds a regular child unless a structurally equal node already exists in the tree.
  bool child(int parent, Op op, Ids context, Ids delays, Ids goals) {
    Tree& t = trees_[nodes_[parent].tree];
    if (!t.keys.emplace(context, delays, goals).second) return false;
    count(op);
    Node n;
    n.parent = parent;
    n.tree = nodes_[parent].tree;
    n.context = std::move(context);
    n.delays = std::move(delays);
    n.goals = std::move(goals);
    n.op = op;
    ++nodes_[parent].children;
    add_node(std::move(n));
    return true;
  }

  void fail(int parent) {
    count(Op::Simplification);
    Node n;
    n.parent = parent;
    n.tree = nodes_[parent].tree;
    n.failure = true;
    n.op = Op::Simplification;
    ++nodes_[parent].children;
    nodes_[parent].failed = true;
    int id = static_cast<int>(nodes_.size());
    trees_[n.tree].nodes.push_back(id);
    nodes_.push_back(std::move(n));
  }

  int pop(std::deque<int>& q) {
    std::size_t k = 0;
    if (opts_.seed != 0) k = std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(rng_);
    int n = q[k];
    q.erase(q.begin() + static_cast<std::ptrdiff_t>(k));
    return n;
  }

  void saturate() {
    for (;;) {
      if (!agenda_.empty()) {
        process(pop(agenda_));
      } else if (!delay_agenda_.empty()) {
        delay(pop(delay_agenda_));
      } else {
        return;
      }
    }
  }

  void process(int n) {
    if (nodes_[n].failure) return;
    if (nodes_[n].root) {
      if (nodes_[n].expanded) return;
      nodes_[n].expanded = true;
      int lit = nodes_[n].goals[0];
      for (const Ids& body : rules_[lit]) child(n, Op::ProgramClauseResolution, {}, {}, body);
      return;
    }
    if (nodes_[n].goals.empty()) {
      answer(n);
      return;
    }
    int sel = nodes_[n].goals[0];
    Ids rest(nodes_[n].goals.begin() + 1, nodes_[n].goals.end());
    if (abducible_[sel]) {
      if (!nodes_[n].expanded && consistent(Ids{sel}, nodes_[n].context)) {
        nodes_[n].expanded = true;
        child(n, Op::Abduction, with(nodes_[n].context, sel), nodes_[n].delays, rest);
      }
      return;
    }
    if (tree_of_[sel] < 0) new_tree(sel, true);
    if (!nodes_[n].consumer) {
      nodes_[n].consumer = true;
      consumers_[sel].push_back(n);
      if (lits_[sel].naf && !objective_abducible(sel)) delay_agenda_.push_back(n);
    }
    const Tree& t = trees_[tree_of_[sel]];
    while (nodes_[n].cursor < t.answer_log.size()) {
      int a = t.answer_log[nodes_[n].cursor++];
      if (!is_answer(a) || !consistent(nodes_[a].context, nodes_[n].context)) continue;
      Ids delays = nodes_[a].delays.empty() ? nodes_[n].delays : with(nodes_[n].delays, sel);
      child(n, Op::AnswerClauseResolution, merged(nodes_[n].context, nodes_[a].context), std::move(delays), rest);
    }
  }

  void delay(int n) {
    int sel = nodes_[n].goals[0];
    if (trees_[tree_of_[sel]].empty_unconditional) return;
    Ids rest(nodes_[n].goals.begin() + 1, nodes_[n].goals.end());
    child(n, Op::Delaying, nodes_[n].context, with(nodes_[n].delays, sel), rest);
  }

  void answer(int n) {
    Node& x = nodes_[n];
    Tree& t = trees_[x.tree];
    if (!x.expanded) {
      x.expanded = true;
      t.answer_log.push_back(n);
      for (int c : consumers_[t.literal]) agenda_.push_back(c);
      if (x.delays.empty()) {
        if (x.context.empty()) t.empty_unconditional = t.complete = true;
        for (int w : waiters_[t.literal]) agenda_.push_back(w);
      }
    }
    if (nodes_[n].delays.empty() || nodes_[n].failed) return;
    if (!nodes_[n].waiter) {
      nodes_[n].waiter = true;
      for (int d : nodes_[n].delays) waiters_[d].push_back(n);
    }
    simplify(n);
  }

  // Success branch: remove a delay literal that has an unconditional answer with a consistent context.
  void simplify(int n) {
    const Ids delays = nodes_[n].delays;
    for (int d : delays) {
      const Tree& t = trees_[tree_of_[d]];
      for (std::size_t k = 0; k < t.answer_log.size(); ++k) {
        int a = t.answer_log[k];
        if (!nodes_[a].delays.empty() || !is_answer(a)) continue;
        if (!consistent(nodes_[a].context, nodes_[n].context)) continue;
        child(n, Op::Simplification, merged(nodes_[n].context, nodes_[a].context), without(delays, d), {});
      }
    }
  }

  // Trees of positive literals that are supported: incomplete, or with an answer whose positive
  // delay literals are all supported.
  std::vector<bool> supported() const {
    std::vector<bool> sup(trees_.size(), false);
    for (std::size_t t = 0; t < trees_.size(); ++t) sup[t] = !trees_[t].complete;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t t = 0; t < trees_.size(); ++t) {
        if (sup[t]) continue;
        for (int a : trees_[t].answer_log) {
          if (!is_answer(a)) continue;
          bool ok = std::all_of(nodes_[a].delays.begin(), nodes_[a].delays.end(),
                                [&](int d) { return lits_[d].naf || sup[tree_of_[d]]; });
          if (ok) {
            sup[t] = changed = true;
            break;
          }
        }
      }
    }
    return sup;
  }

  bool has_consistent_answer(int tree, const Ids& context) const {
    for (int a : trees_[tree].answer_log)
      if (is_answer(a) && consistent(nodes_[a].context, context)) return true;
    return false;
  }

  // Failure branch of simplification, including non-supported positive delay literals.
  bool fail_delays() {
    bool any = false;
    for (bool progress = true; progress;) {
      progress = false;
      std::vector<bool> sup = supported();
      for (auto& t : trees_) {
        for (int a : Ids(t.answer_log)) {
          if (!is_answer(a) || nodes_[a].delays.empty()) continue;
          for (int d : nodes_[a].delays) {
            int td = tree_of_[d];
            bool dead = (trees_[td].complete && !has_consistent_answer(td, nodes_[a].context)) ||
                        (!lits_[d].naf && !sup[td]);
            if (dead) {
              fail(a);
              any = progress = true;
              break;
            }
          }
        }
      }
    }
    return any;
  }

  // Answers of complete negative trees whose delays are all negative literals of complete trees.
  Ids co_unfounded_pool() const {
    Ids pool;
    for (const auto& t : trees_) {
      if (!t.complete || !lits_[t.literal].naf) continue;
      for (int a : t.answer_log) {
        if (!is_answer(a) || nodes_[a].delays.empty()) continue;
        const Ids& ds = nodes_[a].delays;
        if (std::all_of(ds.begin(), ds.end(), [&](int d) { return lits_[d].naf && trees_[tree_of_[d]].complete; }))
          pool.push_back(a);
      }
    }
    return pool;
  }

  // Consistent unions of pool contexts, smallest first.
  std::vector<Ids> candidate_contexts(const Ids& pool) const {
    std::set<Ids> cands;
    for (int a : pool) {
      const Ids& c = nodes_[a].context;
      std::vector<Ids> grown{c};
      for (const Ids& x : cands)
        if (consistent(x, c)) grown.push_back(merged(x, c));
      cands.insert(grown.begin(), grown.end());
    }
    std::vector<Ids> out(cands.begin(), cands.end());
    std::stable_sort(out.begin(), out.end(), [](const Ids& a, const Ids& b) { return a.size() < b.size(); });
    return out;
  }

  // Largest subset of pool within context c in which every delay literal has a member answer.
  Ids co_unfounded_within(const Ids& pool, const Ids& c) const {
    Ids alive;
    for (int a : pool)
      if (subset(nodes_[a].context, c)) alive.push_back(a);
    for (bool changed = true; changed;) {
      changed = false;
      std::set<int> answered;
      for (int a : alive) answered.insert(trees_[nodes_[a].tree].literal);
      std::erase_if(alive, [&](int a) {
        bool drop = std::any_of(nodes_[a].delays.begin(), nodes_[a].delays.end(), [&](int d) { return !answered.count(d); });
        changed |= drop;
        return drop;
      });
    }
    return alive;
  }

  // Each answer in a co-unfounded set gets an unconditional child for every minimal context union.
  bool remove_co_unfounded() {
    Ids pool = co_unfounded_pool();
    std::map<int, std::vector<Ids>> unions;
    for (const Ids& c : candidate_contexts(pool)) {
      for (int a : co_unfounded_within(pool, c)) {
        auto& found = unions[a];
        if (std::none_of(found.begin(), found.end(), [&](const Ids& f) { return subset(f, c); })) found.push_back(c);
      }
    }
    bool any = false;
    for (auto& [a, us] : unions)
      for (auto& u : us) any |= child(a, Op::CoUnfoundedSetRemoval, std::move(u), {}, {});
    return any;
  }

  std::vector<ObjectiveLiteral> objectives(const Ids& ids) const {
    std::vector<ObjectiveLiteral> out;
    for (int i : ids) out.push_back(lits_[i].objective);
    return out;
  }

  std::vector<Literal> literals(const Ids& ids) const {
    std::vector<Literal> out;
    for (int i : ids) out.push_back(lits_[i]);
    return out;
  }

  EvaluationResult result() const {
    EvaluationResult r;
    r.operations = ops_;
    for (std::size_t k = 0; k < kOpKinds; ++k) r.op_counts[k] = op_counts_[k];
    r.dual_size = dual_size_;
    std::set<ObjectiveSet> answers;
    std::set<std::pair<ObjectiveSet, std::vector<Literal>>> conditional;
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      const Node& x = nodes_[id];
      r.max_context = std::max(r.max_context, x.context.size());
      ForestNode f;
      f.id = static_cast<int>(id);
      f.parent = x.parent;
      f.tree = lits_[trees_[x.tree].literal];
      f.failure = x.failure;
      f.context = objectives(x.context);
      f.delays = literals(x.delays);
      f.goals = literals(x.goals);
      f.op = x.op;
      f.answer = is_answer(static_cast<int>(id));
      if (f.answer && x.tree == query_tree_) {
        ObjectiveSet ctx(f.context.begin(), f.context.end());
        if (x.delays.empty())
          answers.insert(ctx);
        else
          conditional.emplace(ctx, f.delays);
      }
      r.forest.push_back(std::move(f));
    }
    r.answers.assign(answers.begin(), answers.end());
    for (const auto& [c, d] : conditional) r.conditional.push_back({c, d});
    for (const auto& t : trees_) {
      const Literal& l = lits_[t.literal];
      bool answerless = std::none_of(t.answer_log.begin(), t.answer_log.end(), [&](int a) { return is_answer(a); });
      if (t.empty_unconditional) (l.naf ? r.induced.f : r.induced.t).insert(l.objective);
      if (t.complete && answerless && !l.naf) r.induced.f.insert(l.objective);
    }
    r.bound = operation_bound(abducible_count_, r.max_context, dual_size_);
    if (r.operations > r.bound)
      throw BugAssertionError("operation count " + std::to_string(r.operations) + " exceeds the bound " +
                              std::to_string(r.bound));
    return r;
  }

  EngineOptions opts_;
  std::mt19937_64 rng_;
  std::size_t dual_size_;
  std::size_t abducible_count_;
  std::size_t budget_ = 0;
  std::size_t ops_ = 0;
  std::array<std::size_t, kOpKinds> op_counts_{};

  std::map<Literal, int> ids_;
  std::vector<Literal> lits_;
  std::vector<bool> abducible_;
  std::vector<int> conj_;  // explicit conjugate of positive literals, -1 otherwise
  std::vector<int> tree_of_;
  std::vector<std::vector<Ids>> rules_;
  std::vector<Ids> consumers_;
  std::vector<Ids> waiters_;

  std::vector<Node> nodes_;
  std::vector<Tree> trees_;
  int query_tree_ = -1;
  std::deque<int> agenda_;
  std::deque<int> delay_agenda_;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
  return out;
}

template <typename T>
std::vector<std::string> strings(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace

const char* to_string(Op op) {
  switch (op) {
    case Op::Initial: return "initial";
    case Op::NewSubgoal: return "new-subgoal";
    case Op::ProgramClauseResolution: return "program-clause-resolution";
    case Op::AnswerClauseResolution: return "answer-clause-resolution";
    case Op::Delaying: return "delaying";
    case Op::Simplification: return "simplification";
    case Op::CoUnfoundedSetRemoval: return "co-unfounded-set-removal";
    case Op::Abduction: return "abduction";
  }
  return "?";
}

std::size_t operation_bound(std::size_t abducibles, std::size_t max_context, std::size_t dual_size) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  auto mul = [](std::size_t a, std::size_t b) { return a && b > kMax / a ? kMax : a * b; };
  std::size_t m = 0;
  std::size_t binom = 1;
  for (std::size_t i = 0; i <= std::min(max_context, abducibles); ++i) {
    if (i > 0) binom = mul(binom, abducibles - i + 1) / i;
    m = m > kMax - binom ? kMax : m + binom;
  }
  return mul(mul(m, 2), dual_size);
}

EvaluationResult evaluate(const DualProgram& dp, const ObjectiveSet& abducibles, const Literal& goal,
                          const EngineOptions& opts) {
  return Engine(dp, abducibles, opts).evaluate(goal);
}

EvaluationResult run(const AbductiveFramework& fw, const std::optional<Literal>& q, const EngineOptions& opts) {
  Program p = attach_query(fw, q);
  DualProgram dp = opts.unfolded ? dual_unfold(p, fw.abducibles) : dual_fold(p, fw.abducibles);
  return evaluate(dp, fw.abducibles, pos(atom(sym::kQuery)), opts);
}

std::string forest_text(const EvaluationResult& r) {
  std::vector<std::vector<int>> kids(r.forest.size());
  std::vector<int> roots;
  for (const auto& n : r.forest) (n.parent < 0 ? roots : kids[n.parent]).push_back(n.id);
  std::string out;
  std::function<void(int, int)> show = [&](int id, int depth) {
    const ForestNode& n = r.forest[id];
    out += std::string(2 * depth, ' ') + std::to_string(n.id) + ": ";
    if (n.failure) {
      out += "fail";
    } else {
      out += "<" + to_string(n.tree) + ", {" + join(strings(n.context), ", ") + "}> :- " +
             join(strings(n.delays), ", ") + " | " + join(strings(n.goals), ", ");
    }
    out += "  [" + std::string(to_string(n.op)) + (n.answer ? ", answer" : "") + "]\n";
    for (int k : kids[id]) show(k, depth + 1);
  };
  for (int root : roots) show(root, 0);
  return out;
}

std::string forest_records(const EvaluationResult& r) {
  std::string out;
  for (const auto& n : r.forest) {
    nlohmann::json j;
    j["id"] = n.id;
    j["parent"] = n.parent;
    j["tree"] = to_string(n.tree);
    j["failure"] = n.failure;
    j["context"] = strings(n.context);
    j["delays"] = strings(n.delays);
    j["goals"] = strings(n.goals);
    j["op"] = to_string(n.op);
    j["answer"] = n.answer;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace abdual
