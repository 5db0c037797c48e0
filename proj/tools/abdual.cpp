#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abdual/core.hpp"
#include "abdual/corpus.hpp"
#include "abdual/dual.hpp"
#include "abdual/engine.hpp"
#include "abdual/gsm.hpp"
#include "abdual/oracle.hpp"
#include "abdual/parser.hpp"

using namespace abdual;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string input = "-";
  std::string query;
  bool minimal = false;
  std::string mode = "partial";
  bool debug_forest = false;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t max_abducibles = 20;
  std::size_t step_budget = 0;
  bool unfold = false;

  bool machine() const { return format == "machine"; }
  EngineOptions engine() const { return {seed, step_budget, unfold}; }
  std::optional<Literal> parsed_query() const {
    if (query.empty()) return std::nullopt;
    return parse_query(query);
  }
};

std::string read_input(const std::string& path) {
  if (path != "-") return read_text_file(path);
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

std::vector<std::string> names(const ObjectiveSet& s) {
  std::vector<std::string> out;
  for (const auto& o : s) out.push_back(to_string(o));
  return out;
}

std::string braces(const ObjectiveSet& s) {
  std::string out = "{";
  for (const auto& o : s) out += (out.size() > 1 ? ", " : "") + to_string(o);
  return out + "}";
}

ObjectiveSet user_language(const AbductiveFramework& fw) {
  ObjectiveSet out;
  for (const auto& o : fw.with_integrity().objective_literals())
    if (!is_reserved_symbol(o.atom)) out.insert(o);
  return out;
}

void dump_forest(const RunConfig& cfg, const EvaluationResult& r) {
  if (cfg.debug_forest) std::cerr << (cfg.machine() ? forest_records(r) : forest_text(r));
}

int print_contexts(const RunConfig& cfg, const std::vector<ObjectiveSet>& contexts) {
  for (const auto& c : contexts) {
    if (cfg.machine())
      std::cout << json{{"kind", "solution"}, {"context", names(c)}}.dump() << "\n";
    else
      std::cout << braces(c) << "\n";
  }
  return contexts.empty() ? 1 : 0;
}

int cmd_dualize(const RunConfig& cfg) {
  AbductiveFramework fw = parse_framework(read_input(cfg.input));
  std::optional<Literal> q = cfg.parsed_query();
  Program p = q ? attach_query(fw, q) : fw.with_integrity();
  DualProgram dp = cfg.unfold ? dual_unfold(p, fw.abducibles) : dual_fold(p, fw.abducibles);
  for (std::size_t i = 0; i < dp.program.rules.size(); ++i) {
    std::string text = serialize(dp.program.rules[i]);
    if (cfg.machine())
      std::cout << json{{"kind", "rule"}, {"origin", to_string(dp.origin[i])}, {"text", text}}.dump() << "\n";
    else
      std::cout << text << "\n";
  }
  return 0;
}

int cmd_wfs(const RunConfig& cfg) {
  AbductiveFramework fw = parse_framework(read_input(cfg.input));
  Interpretation m = scenario_model(fw, {});
  ObjectiveSet lang = user_language(fw);
  ObjectiveSet t, f, u;
  for (const auto& o : lang) {
    if (m.t.count(o)) t.insert(o);
    if (m.f.count(o)) f.insert(o);
    if (!m.t.count(o) && !m.f.count(o)) u.insert(o);
  }
  bool para = !m.consistent() || !m.coherent();
  if (cfg.machine()) {
    std::cout << json{{"kind", "model"},         {"true", names(t)},        {"false", names(f)},
                      {"undefined", names(u)}, {"paraconsistent", para}}.dump()
              << "\n";
  } else {
    std::cout << "model: " << to_string(restrict(m, lang)) << "\n";
    std::cout << "true: " << braces(t) << "\n";
    std::cout << "false: " << braces(f) << "\n";
    std::cout << "undefined: " << braces(u) << "\n";
    std::cout << "paraconsistent: " << (para ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_solve(const RunConfig& cfg) {
  AbductiveFramework fw = parse_framework(read_input(cfg.input));
  EvaluationResult r = run(fw, cfg.parsed_query(), cfg.engine());
  dump_forest(cfg, r);
  return print_contexts(cfg, cfg.minimal ? minimal_sets(r.answers) : r.answers);
}

int cmd_oracle_solve(const RunConfig& cfg) {
  AbductiveFramework fw = parse_framework(read_input(cfg.input));
  SolutionSet s = brute_force_solutions(fw, cfg.parsed_query(), cfg.max_abducibles);
  return print_contexts(cfg, cfg.minimal ? s.minimal : s.all);
}

int cmd_gsm(const RunConfig& cfg) {
  AbductiveFramework fw = parse_framework(read_input(cfg.input));
  GsmMode mode = cfg.mode == "total" ? GsmMode::Total : GsmMode::Partial;
  std::vector<GsmSolution> sols = gsm_solve(fw, cfg.parsed_query(), mode, cfg.engine());
  for (const auto& s : sols) {
    if (cfg.machine())
      std::cout << json{{"kind", "gsm"}, {"context", names(s.context)}, {"true", names(s.model.t)},
                        {"false", names(s.model.f)}}.dump()
                << "\n";
    else
      std::cout << braces(s.context) << " " << to_string(s.model) << "\n";
  }
  return sols.empty() ? 1 : 0;
}

// Engine minimal answers against brute-force minimal solutions for one query.
bool check_one(const RunConfig& cfg, const std::string& name, const AbductiveFramework& fw,
               const std::vector<ScenarioModel>& scenarios, const std::optional<Literal>& q) {
  std::vector<ObjectiveSet> engine = minimal_sets(run(fw, q, cfg.engine()).answers);
  std::vector<ObjectiveSet> oracle = solutions_from(scenarios, q).minimal;
  bool ok = engine == oracle;
  std::string query = q ? to_string(*q) : "";
  if (cfg.machine()) {
    json e = json::array(), o = json::array();
    for (const auto& c : engine) e.push_back(names(c));
    for (const auto& c : oracle) o.push_back(names(c));
    std::cout << json{{"kind", "check"}, {"entry", name},  {"query", query},
                      {"status", ok ? "ok" : "diff"}, {"engine", e}, {"oracle", o}}.dump()
              << "\n";
  } else if (!ok) {
    std::cout << "diff " << name << " query " << (q ? query : "(none)") << "\n";
    for (const auto& c : engine) std::cout << "  engine " << braces(c) << "\n";
    for (const auto& c : oracle) std::cout << "  oracle " << braces(c) << "\n";
  }
  return ok;
}

bool check_entry(const RunConfig& cfg, const std::string& name, const AbductiveFramework& fw,
                 const std::optional<Literal>& q) {
  std::vector<ScenarioModel> scenarios = enumerate_scenarios(fw, cfg.max_abducibles);
  bool ok = check_one(cfg, name, fw, scenarios, std::nullopt);
  if (q) ok = check_one(cfg, name, fw, scenarios, q) && ok;
  for (const auto& l : fw.with_integrity().literals())
    if (!is_reserved_symbol(l.objective.atom)) ok = check_one(cfg, name, fw, scenarios, l) && ok;
  if (!wfs_dual_equiv_check(fw.program) || !wfs_dual_equiv_check(fw.program, true)) {
    ok = false;
    if (!cfg.machine()) std::cout << "diff " << name << " wfs differs from the dual fixpoint\n";
  }
  if (ok && !cfg.machine()) std::cout << "ok " << name << "\n";
  return ok;
}

int cmd_check(const RunConfig& cfg) {
  bool ok = true;
  if (cfg.input.empty()) {
    for (const auto& e : load_corpus()) ok = check_entry(cfg, e.name, e.framework, e.query) && ok;
  } else {
    std::optional<Literal> q = cfg.parsed_query();
    ok = check_entry(cfg, cfg.input, parse_framework(read_input(cfg.input)), q);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abductive solutions over extended logic programs via dual programs and a tabled engine"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", cfg.input, "Framework file, - for stdin");
    if (input_required) in->required();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Scheduler seed; 0 is FIFO");
    sub->add_option("--step-budget", cfg.step_budget, "Maximum number of engine operations");
    sub->add_flag("--unfold", cfg.unfold, "Use the unfolded dual");
  };

  auto* dualize = app.add_subcommand("dualize", "Print the dual program");
  add_common(dualize, true);
  dualize->add_option("--query", cfg.query, "Attach query :- q, not bottom");
  dualize->add_flag("--unfold", cfg.unfold, "Print the unfolded dual");

  auto* wfs_cmd = app.add_subcommand("wfs", "Print the well-founded model with abducibles undefined");
  add_common(wfs_cmd, true);

  auto* solve = app.add_subcommand("solve", "Abductive solutions computed by the tabled engine");
  add_common(solve, true);
  solve->add_option("--query", cfg.query, "Query literal")->required();
  solve->add_flag("--minimal", cfg.minimal, "Print only subset-minimal contexts");
  solve->add_flag("--debug-forest", cfg.debug_forest, "Dump the final forest to stderr");
  add_engine(solve);

  auto* oracle = app.add_subcommand("oracle-solve", "Abductive solutions by brute-force enumeration");
  add_common(oracle, true);
  oracle->add_option("--query", cfg.query, "Query literal")->required();
  oracle->add_flag("--minimal", cfg.minimal, "Print only subset-minimal solutions");
  oracle->add_option("--max-abducibles", cfg.max_abducibles, "Refuse larger abducible sets");

  auto* gsm = app.add_subcommand("gsm", "Generalized stable models through shadow rules");
  add_common(gsm, true);
  gsm->add_option("--query", cfg.query, "Query literal; without it every consistent scenario qualifies");
  gsm->add_option("--mode", cfg.mode, "partial or total")->check(CLI::IsMember({"partial", "total"}));
  add_engine(gsm);

  auto* check = app.add_subcommand("check", "Compare engine and oracle; without input runs the bundled corpus");
  cfg.input.clear();
  add_common(check, false);
  check->add_option("--query", cfg.query, "Extra query literal");
  check->add_option("--max-abducibles", cfg.max_abducibles, "Refuse larger abducible sets");
  add_engine(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!check->parsed() && cfg.input.empty()) cfg.input = "-";
  try {
    if (dualize->parsed()) return cmd_dualize(cfg);
    if (wfs_cmd->parsed()) return cmd_wfs(cfg);
    if (solve->parsed()) return cmd_solve(cfg);
    if (oracle->parsed()) return cmd_oracle_solve(cfg);
    if (gsm->parsed()) return cmd_gsm(cfg);
    return cmd_check(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << (cfg.input.empty() ? "" : cfg.input + ": ") << e.what() << "\n";
    return 2;
  }
}
