#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "rlmc/model.hpp"
#include "rlmc/oracle.hpp"
#include "rlmc/resource_vector.hpp"

using namespace rlmc;

namespace {

bool has_diag(const std::vector<std::string>& diags, const std::string& needle) {
  return std::any_of(diags.begin(), diags.end(), [&](const std::string& d) {
    return d.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("vector operations") {
  ResourceVector a{1, 0, 3}, b{2, 0, 3};
  CHECK(vec_leq(a, b));
  CHECK(!vec_leq(b, a));
  CHECK(vec_leq(a, a));
  CHECK(vec_lt(a, b));
  CHECK(!vec_lt(a, a));
  CHECK(vec_add(a, b) == ResourceVector{3, 0, 6});
  CHECK(vec_sub(b, a) == ResourceVector{1, 0, 0});
  CHECK(vec_nonneg(a));
  CHECK(!vec_nonneg(ResourceVector{1, -1}));
  CHECK(vec_to_string(a) == "(1,0,3)");
  CHECK(vec_to_string(ResourceVector{5}) == "(5)");
}

TEST_CASE("vector order properties") {
  std::mt19937_64 rng(7);
  auto rand_vec = [&] {
    ResourceVector v(3);
    for (int& x : v) x = static_cast<int>(rng() % 5);
    return v;
  };
  for (int i = 0; i < 200; ++i) {
    ResourceVector x = rand_vec(), y = rand_vec(), z = rand_vec();
    if (vec_leq(x, y) && vec_leq(y, z)) CHECK(vec_leq(x, z));
    CHECK(vec_sub(vec_add(x, y), y) == x);
    CHECK(vec_leq(x, vec_add(x, y)));
    if (vec_lt(x, y)) CHECK(!vec_lt(y, x));
  }
}

TEST_CASE("cost decomposition splits signs") {
  GameModel m;
  m.agents = {"1"};
  m.resources = {"r1", "r2", "r3"};
  m.states = {"s"};
  m.actions = {"a"};
  m.propositions["p"] = {};
  m.propositions["q"] = {};
  m.avail = {{{0}}};
  m.cost.assign(1, std::vector<std::optional<ResourceVector>>(1));
  m.cost[0][0] = ResourceVector{-1, 2, -3};
  m.transition.assign(1, {});
  m.transition[0][{0}] = 0;
  m.indist = {{0}};

  auto [cons, prod] = decompose_cost(m, 0, 0);
  CHECK(cons == ResourceVector{1, 0, 3});
  CHECK(prod == ResourceVector{0, 2, 0});
  CHECK(vec_sub(prod, cons) == ResourceVector{-1, 2, -3});
  CHECK(validate_model(m).empty());
}

TEST_CASE("joint actions and outcomes on the two-state model") {
  GameModel m = fixtures::two_state();
  CHECK(validate_model(m).empty());

  auto acts = joint_actions(m, 0, {0});
  REQUIRE(acts.size() == 2);
  CHECK(acts[0].acts == std::vector<int>{0});
  CHECK(acts[1].acts == std::vector<int>{1});
  CHECK(joint_actions(m, 1, {0}).size() == 1);
  CHECK_THROWS_WITH_AS(joint_actions(m, 0, {}), "empty coalition rejected",
                       std::invalid_argument);

  JointAction go{{0}, {0}}, stay{{0}, {1}};
  CHECK(outcomes(m, 0, go) == StateSet{1});
  CHECK(outcomes(m, 0, stay) == StateSet{0});
  CHECK_THROWS_WITH_AS(outcomes(m, 1, go), "action unavailable",
                       std::invalid_argument);

  CHECK(action_consumption(m, 0, go) == AgentVectors{{1}});
  CHECK(affordable(m, 0, go, {{1}}));
  CHECK(!affordable(m, 0, go, {{0}}));
}

TEST_CASE("full profiles extend a coalition choice over everyone else") {
  GameModel m = fixtures::lockstep();
  auto all = full_profiles(m, 0, JointAction{});
  REQUIRE(all.size() == 1);
  CHECK(all[0] == std::vector<int>{0, 1});

  JointAction only_first{{0}, {0}};
  auto ext = full_profiles(m, 0, only_first);
  REQUIRE(ext.size() == 1);
  CHECK(ext[0] == std::vector<int>{0, 1});

  GameModel t = fixtures::two_state();
  CHECK(full_profiles(t, 0, JointAction{}).size() == 2);
  JointAction bad{{0}, {0}};
  CHECK_THROWS_AS(full_profiles(t, 1, bad), std::invalid_argument);
}

TEST_CASE("pre images on the two-state model") {
  GameModel m = fixtures::two_state();
  CHECK(pre(m, {0}, {1}, {{1}}) == StateSet{0, 1});
  CHECK(pre(m, {0}, {0}, {{1}}) == StateSet{0});
  CHECK(pre(m, {0}, {0, 1}, {{1}}) == StateSet{0, 1});
  CHECK(pre(m, {0}, {1}, {{0}}).empty());
  CHECK(pre(m, {0}, {}, {{3}}).empty());
}

TEST_CASE("pre is monotone in target and budget") {
  for (unsigned long long seed = 1; seed <= 40; ++seed) {
    GenParams p;
    p.seed = seed;
    GameModel m = random_model(p);
    std::mt19937_64 rng(seed * 31 + 7);
    std::vector<int> coalition;
    for (int a = 0; a < m.agent_count(); ++a)
      if (coalition.empty() || rng() % 2) coalition.push_back(a);

    StateSet small;
    for (int s = 0; s < m.state_count(); ++s)
      if (rng() % 2) small.insert(s);
    StateSet big = small;
    for (int s = 0; s < m.state_count(); ++s)
      if (rng() % 2) big.insert(s);

    AgentVectors lo(coalition.size()), hi;
    for (auto& v : lo) {
      v.assign(m.resource_count(), 0);
      for (int& x : v) x = static_cast<int>(rng() % 3);
    }
    hi = lo;
    for (auto& v : hi)
      for (int& x : v) x += static_cast<int>(rng() % 2);

    StateSet base = pre(m, coalition, small, lo);
    for (int s : base) {
      CHECK(pre(m, coalition, big, lo).count(s));
      CHECK(pre(m, coalition, small, hi).count(s));
    }
  }
}

TEST_CASE("all fixtures pass validation") {
  CHECK(validate_model(fixtures::two_state()).empty());
  CHECK(validate_model(fixtures::release_flip()).empty());
  CHECK(validate_model(fixtures::indist_pair()).empty());
  CHECK(validate_model(fixtures::indist_pair_aligned()).empty());
  CHECK(validate_model(fixtures::until_split()).empty());
  CHECK(validate_model(fixtures::ral_chain()).empty());
  CHECK(validate_model(fixtures::lockstep()).empty());
  CHECK(validate_model(fixtures::micro_two_choice()).empty());
}

TEST_CASE("validation reports broken invariants") {
  SUBCASE("non-diminishing first component") {
    GameModel m = fixtures::two_state();
    m.cost[0][0] = ResourceVector{0};
    CHECK(has_diag(validate_model(m), "diminishing component must be <= -1"));
  }
  SUBCASE("missing cost") {
    GameModel m = fixtures::two_state();
    m.cost[0][0].reset();
    CHECK(has_diag(validate_model(m), "missing cost"));
  }
  SUBCASE("cost arity") {
    GameModel m = fixtures::two_state();
    m.cost[0][0] = ResourceVector{-1, 1};
    CHECK(has_diag(validate_model(m), "cost arity mismatch"));
  }
  SUBCASE("empty action set") {
    GameModel m = fixtures::two_state();
    m.avail[1][0].clear();
    CHECK(has_diag(validate_model(m), "empty action set"));
  }
  SUBCASE("missing transition") {
    GameModel m = fixtures::two_state();
    m.transition[0].erase(std::vector<int>{0});
    CHECK(has_diag(validate_model(m), "missing transition"));
  }
  SUBCASE("transition off the joint products") {
    GameModel m = fixtures::two_state();
    m.transition[1][{0}] = 0;
    CHECK(has_diag(validate_model(m), "unavailable joint action"));
  }
}

TEST_CASE("json round trip preserves the model") {
  for (unsigned long long seed = 1; seed <= 60; ++seed) {
    GenParams p;
    p.seed = seed;
    GameModel m = random_model(p);
    CHECK(validate_model(m).empty());

    nlohmann::json doc = model_to_json(m);
    LoadResult back = load_model(doc);
    CHECK(back.diagnostics.empty());
    CHECK(model_to_json(back.model) == doc);
  }
}

TEST_CASE("fixture matches the shipped two-state file") {
  nlohmann::json doc = model_to_json(fixtures::two_state());
  CHECK(doc.at("states") == nlohmann::json({"s0", "s1"}));
  CHECK(doc.at("transitions").at("s0").at("go") == "s1");
  LoadResult back = load_model(doc);
  CHECK(back.diagnostics.empty());
  CHECK(model_to_json(back.model) == doc);
}

TEST_CASE("shape violations throw, reference problems collect") {
  nlohmann::json doc = model_to_json(fixtures::two_state());
  SUBCASE("unknown key") {
    doc["extra"] = 1;
    CHECK_THROWS_AS(load_model(doc), ModelFormatError);
  }
  SUBCASE("missing key") {
    doc.erase("costs");
    CHECK_THROWS_AS(load_model(doc), ModelFormatError);
  }
  SUBCASE("wrong type") {
    doc["states"] = 5;
    CHECK_THROWS_AS(load_model(doc), ModelFormatError);
  }
  SUBCASE("unknown state in a proposition") {
    doc["propositions"]["p"].push_back("nowhere");
    LoadResult res = load_model(doc);
    CHECK(has_diag(res.diagnostics, "unknown state nowhere"));
  }
  SUBCASE("unknown action in a transition") {
    doc["transitions"]["s0"]["jump"] = "s1";
    LoadResult res = load_model(doc);
    CHECK(has_diag(res.diagnostics, "unknown action jump"));
  }
}

TEST_CASE("indistinguishability defaults to identity") {
  GameModel m = fixtures::two_state();
  CHECK(!m.same_class(0, 0, 1));
  CHECK(m.same_class(0, 1, 1));

  GameModel i = fixtures::indist_pair();
  CHECK(i.same_class(0, 0, 1));
  CHECK(!i.same_class(0, 0, 2));
  CHECK(!i.same_class(0, 2, 3));
}
