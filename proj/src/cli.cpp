#include "rlmc/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "rlmc/formula.hpp"
#include "rlmc/fuzz.hpp"
#include "rlmc/imperfect.hpp"
#include "rlmc/model.hpp"
#include "rlmc/oracle.hpp"
#include "rlmc/parser.hpp"
#include "rlmc/perfect.hpp"
#include "rlmc/ral.hpp"

namespace rlmc {

namespace {

constexpr int kSatisfied = 0;
constexpr int kEmpty = 1;
constexpr int kUserError = 2;
constexpr int kIoError = 3;
constexpr int kRefusal = 4;

// nullopt means the exit code in `code` applies.
std::optional<GameModel> load_model_file(const std::string& path,
                                         std::ostream& out, std::ostream& err,
                                         int& code) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot read model file: " << path << "\n";
    code = kIoError;
    return std::nullopt;
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    err << path << ": " << e.what() << "\n";
    code = kIoError;
    return std::nullopt;
  }
  LoadResult lr;
  try {
    lr = load_model(doc);
  } catch (const ModelFormatError& e) {
    err << path << ": " << e.what() << "\n";
    code = kIoError;
    return std::nullopt;
  }
  std::vector<std::string> diags = lr.diagnostics;
  if (diags.empty()) {
    for (auto& d : validate_model(lr.model)) diags.push_back(std::move(d));
  }
  if (!diags.empty()) {
    for (const auto& d : diags) out << d << "\n";
    code = kUserError;
    return std::nullopt;
  }
  return lr.model;
}

// --formula accepts literal text or @path to a file holding the text.
std::optional<std::string> resolve_formula_text(const std::string& arg,
                                                std::ostream& err, int& code) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) {
    err << "cannot read formula file: " << arg.substr(1) << "\n";
    code = kIoError;
    return std::nullopt;
  }
  std::ostringstream text;
  text << in.rdbuf();
  std::string s = text.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::vector<std::string> sorted_names(const GameModel& m, const StateSet& set) {
  std::vector<std::string> names;
  for (int s : set) names.push_back(m.states[s]);
  std::sort(names.begin(), names.end());
  return names;
}

nlohmann::json render_document(const GameModel& m, const std::string& engine,
                               const FormulaPtr& f, const LabelMap* labels,
                               const StateSet& satisfying, int max_depth,
                               long long nodes_expanded) {
  nlohmann::json doc;
  doc["engine"] = engine;
  doc["formula"] = to_text(f);
  if (labels != nullptr) {
    nlohmann::json per = nlohmann::json::object();
    for (const auto& text : labels->order)
      per[text] = sorted_names(m, labels->of(text));
    doc["per_subformula"] = per;
  }
  doc["satisfying_states"] = sorted_names(m, satisfying);
  doc["stats"]["max_depth"] = max_depth;
  doc["stats"]["nodes_expanded"] = nodes_expanded;
  return doc;
}

void print_result(std::ostream& out, const GameModel& m, bool machine,
                  const nlohmann::json& doc, const StateSet& satisfying) {
  if (machine) {
    out << doc.dump(2) << "\n";
    return;
  }
  out << "formula: " << doc["formula"].get<std::string>() << "\n";
  out << "engine: " << doc["engine"].get<std::string>() << "\n";
  if (satisfying.empty()) {
    out << "satisfied nowhere\n";
  } else {
    out << "satisfied at:";
    for (const auto& name : sorted_names(m, satisfying)) out << " " << name;
    out << "\n";
  }
}

struct CheckArgs {
  std::string model_path;
  std::string formula_arg;
  std::string engine = "perfect";
  std::string endowment_text;
  bool machine = false;
};

// Shared front half of check/oracle: load, parse, validate, family checks.
struct PreparedQuery {
  GameModel model;
  FormulaPtr formula;
  AgentVectors endowment;  // ral engines only
};

std::optional<PreparedQuery> prepare_query(const CheckArgs& args,
                                           std::ostream& out,
                                           std::ostream& err, int& code) {
  auto model = load_model_file(args.model_path, out, err, code);
  if (!model) return std::nullopt;
  auto text = resolve_formula_text(args.formula_arg, err, code);
  if (!text) return std::nullopt;

  PreparedQuery q;
  q.model = std::move(*model);
  try {
    q.formula = parse_formula(*text);
  } catch (const ParseError& e) {
    err << "formula: " << e.what() << "\n";
    code = kUserError;
    return std::nullopt;
  }
  const auto problems = validate_formula(q.formula, q.model);
  if (!problems.empty()) {
    for (const auto& p : problems) err << p << "\n";
    code = kUserError;
    return std::nullopt;
  }

  const Family family = family_of(q.formula);
  const bool ral_engine = args.engine == "ral";
  if (ral_engine && family == Family::ResourceBound) {
    err << "bound-carrying formulas need the perfect or imperfect engine\n";
    code = kUserError;
    return std::nullopt;
  }
  if (!ral_engine && family == Family::Endowment) {
    err << "endowment-carrying formulas need the ral engine\n";
    code = kUserError;
    return std::nullopt;
  }
  if (ral_engine && args.endowment_text.empty()) {
    err << "the ral engine requires --endowment\n";
    code = kUserError;
    return std::nullopt;
  }
  if (!ral_engine && !args.endowment_text.empty()) {
    err << "--endowment applies only to the ral engine\n";
    code = kUserError;
    return std::nullopt;
  }
  if (ral_engine) {
    std::map<std::string, ResourceVector> endw;
    try {
      endw = parse_endowment(args.endowment_text);
    } catch (const ParseError& e) {
      err << "endowment: " << e.what() << "\n";
      code = kUserError;
      return std::nullopt;
    }
    for (const auto& [name, vec] : endw) {
      if (q.model.agent_index(name) < 0) {
        err << "endowment: unknown agent " << name << "\n";
        code = kUserError;
        return std::nullopt;
      }
      if (static_cast<int>(vec.size()) != q.model.resource_count()) {
        err << "endowment: wrong arity for agent " << name << "\n";
        code = kUserError;
        return std::nullopt;
      }
    }
    for (const auto& name : q.model.agents) {
      if (!endw.count(name)) {
        err << "endowment: missing agent " << name << "\n";
        code = kUserError;
        return std::nullopt;
      }
    }
    q.endowment = full_endowment(q.model, endw);
  }
  return q;
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  int code = kUserError;
  auto q = prepare_query(args, out, err, code);
  if (!q) return code;

  EngineStats stats;
  StateSet satisfying;
  std::optional<LabelMap> labels;
  if (args.engine == "perfect") {
    labels = label_states(q->model, q->formula, stats);
    satisfying = labels->root();
  } else if (args.engine == "imperfect") {
    labels = label_states_uniform(q->model, q->formula, stats);
    satisfying = labels->root();
  } else {
    satisfying = ral_check(q->model, q->formula, q->endowment, stats);
  }
  const auto doc =
      render_document(q->model, args.engine, q->formula,
                      labels ? &*labels : nullptr, satisfying, stats.max_depth,
                      stats.nodes_expanded);
  print_result(out, q->model, args.machine, doc, satisfying);
  return satisfying.empty() ? kEmpty : kSatisfied;
}

int cmd_oracle(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  int code = kUserError;
  auto q = prepare_query(args, out, err, code);
  if (!q) return code;

  OracleStats stats;
  StateSet satisfying;
  try {
    if (args.engine == "perfect") {
      satisfying = oracle_states(q->model, q->formula, stats);
    } else if (args.engine == "imperfect") {
      satisfying = oracle_states_uniform(q->model, q->formula, stats);
    } else {
      satisfying = oracle_states_ral(q->model, q->formula, q->endowment,
                                     stats);
    }
  } catch (const OracleTooLarge& e) {
    err << e.what() << "\n";
    return kRefusal;
  }
  const auto doc = render_document(q->model, "oracle-" + args.engine,
                                   q->formula, nullptr, satisfying,
                                   stats.max_depth, stats.trees_enumerated);
  print_result(out, q->model, args.machine, doc, satisfying);
  return satisfying.empty() ? kEmpty : kSatisfied;
}

int cmd_validate(const std::string& path, std::ostream& out,
                 std::ostream& err) {
  int code = kSatisfied;
  auto model = load_model_file(path, out, err, code);
  if (!model) return code;
  return kSatisfied;
}

struct FuzzArgs {
  FuzzConfig cfg;
  std::string manifest_path;
};

int cmd_fuzz(const FuzzArgs& args, std::ostream& out, std::ostream& err) {
  if (args.cfg.count < 1) {
    err << "--count must be at least 1\n";
    return kUserError;
  }
  const FuzzReport report = run_fuzz(args.cfg);
  if (!args.manifest_path.empty()) {
    std::ofstream mf(args.manifest_path);
    if (!mf) {
      err << "cannot write manifest: " << args.manifest_path << "\n";
      return kIoError;
    }
    for (const auto& line : report.manifest) mf << line << "\n";
  }
  out << "instances: " << report.instances << "\n";
  out << "comparisons: " << report.comparisons << "\n";
  out << "oracle refusals: " << report.refusals << "\n";
  out << "depth cap violations: " << report.depth_cap_violations << "\n";
  out << "closed cap violations: " << report.closed_cap_violations << "\n";
  out << "degenerate violations: " << report.degenerate_violations << "\n";
  out << "disagreements: " << report.disagreements.size() << "\n";
  for (const auto& d : report.disagreements) {
    out << "  seed " << d.seed << " [" << d.kind << "] " << d.formula << ": "
        << d.lhs << " vs " << d.rhs << "\n";
  }
  return report.clean() ? kSatisfied : kEmpty;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"model checker for resource-bounded coalition logics"};
  app.require_subcommand(1);

  std::string validate_path;
  CLI::App* validate =
      app.add_subcommand("validate", "check a model file for problems");
  validate->add_option("model", validate_path, "model JSON file")->required();

  CheckArgs check_args;
  CLI::App* check =
      app.add_subcommand("check", "label states with a checking engine");
  check->add_option("--model", check_args.model_path, "model JSON file")
      ->required();
  check->add_option("--formula", check_args.formula_arg,
                    "formula text, or @path to a file")
      ->required();
  check->add_option("--engine", check_args.engine,
                    "perfect, imperfect, or ral")
      ->check(CLI::IsMember({"perfect", "imperfect", "ral"}));
  check->add_option("--endowment", check_args.endowment_text,
                    "initial endowment, ral engine only");
  check->add_flag("--json", check_args.machine, "machine-readable output");

  CheckArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "label states with the brute-force reference evaluator");
  oracle->add_option("--model", oracle_args.model_path, "model JSON file")
      ->required();
  oracle->add_option("--formula", oracle_args.formula_arg,
                     "formula text, or @path to a file")
      ->required();
  oracle->add_option("--engine", oracle_args.engine,
                     "perfect, imperfect, or ral")
      ->check(CLI::IsMember({"perfect", "imperfect", "ral"}));
  oracle->add_option("--endowment", oracle_args.endowment_text,
                     "initial endowment, ral engine only");
  oracle->add_flag("--json", oracle_args.machine, "machine-readable output");

  FuzzArgs fuzz_args;
  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "differential-test the engines against the oracle");
  fuzz->add_option("--seed", fuzz_args.cfg.params.seed, "base seed");
  fuzz->add_option("--count", fuzz_args.cfg.count, "number of instances");
  fuzz->add_option("--max-states", fuzz_args.cfg.params.max_states,
                   "state count limit");
  fuzz->add_option("--max-agents", fuzz_args.cfg.params.max_agents,
                   "agent count limit");
  fuzz->add_option("--max-actions", fuzz_args.cfg.params.max_actions_per_agent,
                   "actions per agent limit");
  fuzz->add_option("--max-resources", fuzz_args.cfg.params.max_resources,
                   "resource count limit");
  fuzz->add_option("--max-cost", fuzz_args.cfg.params.max_cost_magnitude,
                   "cost magnitude limit");
  fuzz->add_option("--max-bound", fuzz_args.cfg.params.max_bound,
                   "bound entry limit");
  fuzz->add_option("--manifest", fuzz_args.manifest_path,
                   "write one TSV line per instance to this file");
  fuzz->add_flag("--break-release-runout",
                 [&](size_t) { fuzz_args.cfg.perfect.release_runout = false; },
                 "fault injection for the mutation test")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSatisfied;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUserError;
  }

  try {
    if (app.got_subcommand(validate))
      return cmd_validate(validate_path, out, err);
    if (app.got_subcommand(check)) return cmd_check(check_args, out, err);
    if (app.got_subcommand(oracle)) return cmd_oracle(oracle_args, out, err);
    return cmd_fuzz(fuzz_args, out, err);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUserError;
  }
}

}  // namespace rlmc
