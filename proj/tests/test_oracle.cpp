#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "rlmc/formula.hpp"
#include "rlmc/fuzz.hpp"
#include "rlmc/model.hpp"
#include "rlmc/oracle.hpp"
#include "rlmc/parser.hpp"

using namespace rlmc;

TEST_CASE("tree enumeration counts match the history product") {
  GameModel m = fixtures::micro_two_choice();

  // Two self-loop actions of cost one: with budget b the domain is the b+1
  // nested histories and every tree assigns one of two actions to each.
  // A false verdict forces the full enumeration.
  OracleStats s2;
  CHECK(!holds_semantics(m, 0, parse_formula("<{1}:[1=(2)]> (true U false)"), s2));
  CHECK(s2.trees_enumerated == 8);
  CHECK(s2.max_depth == 3);

  OracleStats s4;
  CHECK(!holds_semantics(m, 0, parse_formula("<{1}:[1=(4)]> (true U false)"), s4));
  CHECK(s4.trees_enumerated == 32);
  CHECK(s4.max_depth == 5);

  OracleStats s0;
  CHECK(!holds_semantics(m, 0, parse_formula("<{1}:[1=(0)]> (true U false)"), s0));
  CHECK(s0.trees_enumerated == 2);
  CHECK(s0.max_depth == 1);
}

TEST_CASE("a satisfied query stops at the first winning tree") {
  GameModel m = fixtures::micro_two_choice();
  OracleStats stats;
  CHECK(holds_semantics(m, 0, parse_formula("<{1}:[1=(2)]> (true U p)"), stats));
  CHECK(stats.trees_enumerated == 1);
}

TEST_CASE("oversized enumerations are refused with an estimate") {
  GameModel m = fixtures::micro_two_choice();
  OracleStats stats;
  try {
    holds_semantics(m, 0, parse_formula("<{1}:[1=(23)]> (true U false)"), stats);
    FAIL("expected a refusal");
  } catch (const OracleTooLarge& e) {
    CHECK(e.estimate == (1LL << 24));
    CHECK(std::string(e.what()).find("enumeration guard") != std::string::npos);
  }
  CHECK(stats.trees_enumerated == 0);
}

TEST_CASE("zero-budget laws hold in the semantics") {
  for (unsigned long long seed = 1; seed <= 25; ++seed) {
    GenParams p;
    p.seed = seed;
    GameModel m = random_model(p);
    std::map<std::string, ResourceVector> zero;
    zero["1"] = ResourceVector(m.resource_count(), 0);

    OracleStats stats;
    for (int s = 0; s < m.state_count(); ++s) {
      CHECK(!holds_semantics(m, s, f_next({"1"}, zero, f_true()), stats));
      CHECK(holds_semantics(m, s, f_release({"1"}, zero, f_prop("p"), f_prop("q")),
                            stats) == (m.propositions.at("q").count(s) != 0));
    }
  }
}

TEST_CASE("identity partitions collapse the uniform semantics") {
  GameModel m = fixtures::two_state();
  const char* texts[] = {"<{1}:[1=(2)]> (q U p)", "<{1}:[1=(1)]> X p",
                         "<{1}:[1=(2)]> (p R q)", "<{1}:[1=(0)]> X q"};
  for (const char* text : texts) {
    FormulaPtr f = parse_formula(text);
    for (int s = 0; s < m.state_count(); ++s) {
      OracleStats s1, s2;
      CHECK(holds_semantics(m, s, f, s1) == holds_semantics_uniform(m, s, f, s2));
    }
  }
}

TEST_CASE("generated models are deterministic per seed") {
  GenParams p;
  p.seed = 5;
  std::string once = model_to_json(random_model(p)).dump();
  std::string twice = model_to_json(random_model(p)).dump();
  CHECK(once == twice);

  p.seed = 6;
  CHECK(model_to_json(random_model(p)).dump() != once);
}

TEST_CASE("generated models are valid and class-uniform") {
  bool saw_multi_resource = false;
  bool saw_production = false;
  bool saw_merged_class = false;
  for (unsigned long long seed = 1; seed <= 150; ++seed) {
    GenParams p;
    p.seed = seed;
    GameModel m = random_model(p);
    CHECK(validate_model(m).empty());

    if (m.resource_count() >= 2) saw_multi_resource = true;
    for (int s = 0; s < m.state_count(); ++s)
      for (const auto& cost : m.cost[s])
        if (cost)
          for (int x : *cost)
            if (x > 0) saw_production = true;

    for (int a = 0; a < m.agent_count(); ++a)
      for (int s1 = 0; s1 < m.state_count(); ++s1)
        for (int s2 = s1 + 1; s2 < m.state_count(); ++s2)
          if (m.same_class(a, s1, s2)) {
            saw_merged_class = true;
            CHECK(m.avail[s1][a] == m.avail[s2][a]);
          }
  }
  CHECK(saw_multi_resource);
  CHECK(saw_production);
  CHECK(saw_merged_class);
}

TEST_CASE("the generator honors parameter limits") {
  for (unsigned long long seed = 1; seed <= 40; ++seed) {
    GenParams p;
    p.seed = seed;
    p.max_states = 2;
    p.max_resources = 1;
    p.max_cost_magnitude = 1;
    GameModel m = random_model(p);
    CHECK(validate_model(m).empty());
    CHECK(m.state_count() <= 2);
    CHECK(m.resource_count() == 1);
    for (int s = 0; s < m.state_count(); ++s)
      for (const auto& cost : m.cost[s])
        if (cost) CHECK((*cost)[0] == -1);
  }
}

TEST_CASE("oracle verdicts are independent of the state visiting order") {
  GameModel m = fixtures::until_split();
  FormulaPtr f = parse_formula("<{1}:[1=(2)]> (q U p)");

  OracleStats shared;
  StateSet all = oracle_states(m, f, shared);
  for (int s = 0; s < m.state_count(); ++s) {
    OracleStats fresh;
    CHECK(holds_semantics(m, s, f, fresh) == (all.count(s) != 0));
  }
}

TEST_CASE("the endowment oracle tracks opponents") {
  GameModel m = fixtures::lockstep();
  OracleStats stats;
  FormulaPtr blocked = parse_formula("<{1}|{2} eta=[1=(5),2=(0)]> X true");
  CHECK(!holds_semantics_ral(m, 0, {{5}, {0}}, blocked, stats));

  FormulaPtr open = parse_formula("<{1}|{2} eta=[1=(5),2=(5)]> X true");
  CHECK(holds_semantics_ral(m, 0, {{5}, {5}}, open, stats));
}
