#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "rlmc/cli.hpp"
#include "rlmc/model.hpp"

using namespace rlmc;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"rlmc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Files are written to the test's working directory and removed on teardown.
struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string model_text(const GameModel& m) { return model_to_json(m).dump(2); }

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("validate is silent on a well-formed model") {
  TempFile f("cli_good.json", model_text(fixtures::two_state()));
  RunResult r = run({"validate", f.path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.empty());
}

TEST_CASE("validate distinguishes unreadable, ill-shaped and invalid input") {
  CHECK(run({"validate", "no_such_file.json"}).code == 3);

  TempFile bad_json("cli_bad.json", "{ this is not json");
  CHECK(run({"validate", bad_json.path}).code == 3);

  nlohmann::json doc = model_to_json(fixtures::two_state());
  doc["surprise"] = 1;
  TempFile bad_shape("cli_shape.json", doc.dump());
  CHECK(run({"validate", bad_shape.path}).code == 3);

  nlohmann::json weak = model_to_json(fixtures::two_state());
  weak["costs"]["s0"]["go"] = {0};
  weak["costs"]["s1"]["stay"] = {2};
  TempFile invalid("cli_invalid.json", weak.dump());
  RunResult r = run({"validate", invalid.path});
  CHECK(r.code == 2);
  CHECK(r.out.find("diminishing component must be <= -1") != std::string::npos);
  CHECK(count_lines(r.out) == 2);
}

TEST_CASE("check labels states and reports them sorted") {
  TempFile f("cli_check.json", model_text(fixtures::two_state()));

  RunResult hit = run({"check", "--model", f.path, "--formula",
                       "<{1}:[1=(2)]> (q U p)"});
  CHECK(hit.code == 0);
  CHECK(hit.out.find("satisfied at: s0 s1") != std::string::npos);

  RunResult miss = run({"check", "--model", f.path, "--formula",
                        "<{1}:[1=(0)]> X p"});
  CHECK(miss.code == 1);
  CHECK(miss.out.find("satisfied nowhere") != std::string::npos);
}

TEST_CASE("machine output carries the full document") {
  TempFile f("cli_json.json", model_text(fixtures::two_state()));

  RunResult r = run({"check", "--model", f.path, "--formula",
                     "<{1}:[1=(2)]> (q U p)", "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("engine") == "perfect");
  CHECK(doc.at("formula") == "<{1}:[1=(2)]> (q U p)");
  CHECK(doc.at("satisfying_states") == nlohmann::json({"s0", "s1"}));
  CHECK(doc.at("per_subformula").size() == 3);
  CHECK(doc.at("per_subformula").at("p") == nlohmann::json({"s1"}));
  CHECK(doc.at("stats").contains("max_depth"));
  CHECK(doc.at("stats").contains("nodes_expanded"));

  RunResult u = run({"check", "--model", f.path, "--formula",
                     "<{1}:[1=(2)]> (q U p)", "--engine", "imperfect",
                     "--json"});
  CHECK(nlohmann::json::parse(u.out).at("engine") == "imperfect");

  RunResult rl = run({"check", "--model", f.path, "--formula",
                      "<{1}|{} down> X p", "--engine", "ral", "--endowment",
                      "[1=(1)]", "--json"});
  REQUIRE(rl.code == 0);
  nlohmann::json rdoc = nlohmann::json::parse(rl.out);
  CHECK(rdoc.at("engine") == "ral");
  CHECK(!rdoc.contains("per_subformula"));
}

TEST_CASE("formulas can come from a file") {
  TempFile m("cli_at.json", model_text(fixtures::two_state()));
  TempFile f("cli_formula.txt", "<{1}:[1=(2)]> (q U p)\n");

  RunResult r = run({"check", "--model", m.path, "--formula", "@" + f.path,
                     "--json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("formula") == "<{1}:[1=(2)]> (q U p)");
  CHECK(run({"check", "--model", m.path, "--formula", "@nowhere.txt"}).code == 3);
}

TEST_CASE("user errors exit with code 2") {
  TempFile f("cli_err.json", model_text(fixtures::two_state()));
  auto code = [&](const std::vector<std::string>& extra) {
    std::vector<std::string> args{"check", "--model", f.path};
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args).code;
  };

  CHECK(code({"--formula", "p &&"}) == 2);
  CHECK(code({"--formula", "r"}) == 2);
  CHECK(code({"--formula", "<{7}:[7=(1)]> X p"}) == 2);
  CHECK(code({"--formula", "<{1}:[1=(1,1)]> X p"}) == 2);
  CHECK(code({"--formula", "<{1}|{} down> X p", "--engine", "ral"}) == 2);
  CHECK(code({"--formula", "<{1}:[1=(1)]> X p", "--engine", "ral",
              "--endowment", "[1=(1)]"}) == 2);
  CHECK(code({"--formula", "<{1}|{} down> X p"}) == 2);
  CHECK(code({"--formula", "<{1}:[1=(1)]> X p", "--endowment", "[1=(1)]"}) == 2);
  CHECK(code({"--formula", "<{1}|{} down> X p", "--engine", "ral",
              "--endowment", "[9=(1)]"}) == 2);
  CHECK(code({"--formula", "<{1}|{} down> X p", "--engine", "ral",
              "--endowment", "[1=(1,2)]"}) == 2);
  CHECK(code({"--formula", "<{1}|{} down> X p", "--engine", "ral",
              "--endowment", "[1=(1"}) == 2);
  CHECK(code({"--formula", "p", "--engine", "quantum"}) == 2);
  CHECK(run({"conjure"}).code == 2);

  RunResult parse_err = run({"check", "--model", f.path, "--formula", "p &&"});
  CHECK(parse_err.err.find("formula: ") != std::string::npos);
}

TEST_CASE("the reference evaluator mirrors check and refuses big queries") {
  TempFile f("cli_oracle.json", model_text(fixtures::two_state()));

  RunResult r = run({"oracle", "--model", f.path, "--formula",
                     "<{1}:[1=(2)]> (q U p)", "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("engine") == "oracle-perfect");
  CHECK(doc.at("satisfying_states") == nlohmann::json({"s0", "s1"}));
  CHECK(!doc.contains("per_subformula"));

  TempFile micro("cli_micro.json", model_text(fixtures::micro_two_choice()));
  RunResult refuse = run({"oracle", "--model", micro.path, "--formula",
                          "<{1}:[1=(23)]> (true U false)"});
  CHECK(refuse.code == 4);
  CHECK(refuse.err.find("enumeration guard") != std::string::npos);

  RunResult ral = run({"oracle", "--model", f.path, "--formula",
                       "<{1}|{} down> X p", "--engine", "ral", "--endowment",
                       "[1=(1)]", "--json"});
  REQUIRE(ral.code == 0);
  CHECK(nlohmann::json::parse(ral.out).at("engine") == "oracle-ral");
}

TEST_CASE("fuzz summarizes a clean differential run") {
  RunResult r = run({"fuzz", "--count", "25", "--seed", "11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("instances: 25") != std::string::npos);
  CHECK(r.out.find("disagreements: 0") != std::string::npos);

  CHECK(run({"fuzz", "--count", "0"}).code == 2);
}

TEST_CASE("fuzz writes one manifest line per instance") {
  const std::string path = "cli_manifest.tsv";
  RunResult r = run({"fuzz", "--count", "3", "--seed", "2", "--manifest", path});
  CHECK(r.code == 0);

  std::ifstream in(path);
  REQUIRE(in.good());
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(line.find('\t') != std::string::npos);
  }
  CHECK(lines == 3);
  std::remove(path.c_str());
}

TEST_CASE("an injected release fault is caught by the harness") {
  RunResult r = run({"fuzz", "--count", "20", "--seed", "1",
                     "--break-release-runout"});
  CHECK(r.code == 1);
  CHECK(r.out.find("disagreements: 0") == std::string::npos);
}

TEST_CASE("machine output is byte-identical across runs") {
  TempFile f("cli_det.json", model_text(fixtures::until_split()));
  const std::vector<std::string> args{"check",    "--model",
                                      f.path,     "--formula",
                                      "<{1}:[1=(2)]> (q U p)", "--json"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);

  const std::vector<std::string> oargs{"oracle",   "--model",
                                       f.path,     "--formula",
                                       "<{1}:[1=(2)]> (q U p)", "--json"};
  CHECK(run(oargs).out == run(oargs).out);
}

TEST_CASE("help is available and exits cleanly") {
  RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check") != std::string::npos);
}
