#pragma once

// Hand-built game structures shared by the test binaries. All of them pass
// validate_model; tests assert that once in test_model.cpp.

#include <optional>
#include <vector>

#include "rlmc/model.hpp"

namespace rlmc::fixtures {

// Two states, one agent. go: s0 -> s1, stay: self loop. p only at s1,
// q everywhere. Same structure as models/two_state.json.
inline GameModel two_state() {
  GameModel m;
  m.agents = {"1"};
  m.resources = {"r1"};
  m.states = {"s0", "s1"};
  m.actions = {"go", "stay"};
  m.propositions["p"] = {1};
  m.propositions["q"] = {0, 1};
  m.avail = {{{0, 1}}, {{1}}};
  m.cost.assign(2, std::vector<std::optional<ResourceVector>>(2));
  m.cost[0][0] = ResourceVector{-1};
  m.cost[0][1] = ResourceVector{-1};
  m.cost[1][1] = ResourceVector{-1};
  m.transition.assign(2, {});
  m.transition[0][{0}] = 1;
  m.transition[0][{1}] = 0;
  m.transition[1][{1}] = 1;
  m.indist = {{0, 1}};
  return m;
}

// One agent, one action. The s0 step costs 2 units and leads to the only
// p-free state. Witness that Release verdicts can flip from true to false
// when the budget grows: with budget (1) the step is unaffordable, so
// stopping at s0 satisfies false R p; with budget (2) the step is forced
// and p fails at s1.
inline GameModel release_flip() {
  GameModel m;
  m.agents = {"1"};
  m.resources = {"r1"};
  m.states = {"s0", "s1"};
  m.actions = {"a"};
  m.propositions["p"] = {0};
  m.propositions["q"] = {0, 1};
  m.avail = {{{0}}, {{0}}};
  m.cost.assign(2, std::vector<std::optional<ResourceVector>>(1));
  m.cost[0][0] = ResourceVector{-2};
  m.cost[1][0] = ResourceVector{-1};
  m.transition.assign(2, {});
  m.transition[0][{0}] = 1;
  m.transition[1][{0}] = 1;
  m.indist = {{0, 1}};
  return m;
}

// One agent that cannot tell s0 from s0x. alpha reaches the p-state from s0
// but the p-free state from s0x; beta is the mirror image. Perfectly
// informed, X p is winnable from both; a uniform strategy must play the
// same action at both and loses from one of them.
inline GameModel indist_pair() {
  GameModel m;
  m.agents = {"1"};
  m.resources = {"r1"};
  m.states = {"s0", "s0x", "sp", "sn"};
  m.actions = {"alpha", "beta", "stay"};
  m.propositions["p"] = {2};
  m.propositions["q"] = {0, 1, 2, 3};
  m.avail = {{{0, 1}}, {{0, 1}}, {{2}}, {{2}}};
  m.cost.assign(4, std::vector<std::optional<ResourceVector>>(3));
  for (int s : {0, 1}) {
    m.cost[s][0] = ResourceVector{-1};
    m.cost[s][1] = ResourceVector{-1};
  }
  m.cost[2][2] = ResourceVector{-1};
  m.cost[3][2] = ResourceVector{-1};
  m.transition.assign(4, {});
  m.transition[0][{0}] = 2;
  m.transition[0][{1}] = 3;
  m.transition[1][{0}] = 3;
  m.transition[1][{1}] = 2;
  m.transition[2][{2}] = 2;
  m.transition[3][{2}] = 3;
  m.indist = {{0, 0, 1, 2}};
  return m;
}

// Same structure, but alpha reaches the p-state from s0x as well, so one
// uniform action works from both confused states.
inline GameModel indist_pair_aligned() {
  GameModel m = indist_pair();
  m.transition[1][{0}] = 2;
  return m;
}

// Two-step variant: the conflict only appears on the second step. From the
// confused roots a and b, go leads to the confused middle states c1 and c2,
// where the winning action differs (l from c1, r from c2, target w carries
// p). Perfectly informed both roots win q U p; uniformly neither does.
inline GameModel until_split() {
  GameModel m;
  m.agents = {"1"};
  m.resources = {"r1"};
  m.states = {"a", "b", "c1", "c2", "w", "x"};
  m.actions = {"go", "l", "r", "stay"};
  m.propositions["p"] = {4};
  m.propositions["q"] = {0, 1, 2, 3};
  m.avail = {{{0}}, {{0}}, {{1, 2}}, {{1, 2}}, {{3}}, {{3}}};
  m.cost.assign(6, std::vector<std::optional<ResourceVector>>(4));
  m.cost[0][0] = ResourceVector{-1};
  m.cost[1][0] = ResourceVector{-1};
  for (int s : {2, 3}) {
    m.cost[s][1] = ResourceVector{-1};
    m.cost[s][2] = ResourceVector{-1};
  }
  m.cost[4][3] = ResourceVector{-1};
  m.cost[5][3] = ResourceVector{-1};
  m.transition.assign(6, {});
  m.transition[0][{0}] = 2;
  m.transition[1][{0}] = 3;
  m.transition[2][{1}] = 4;
  m.transition[2][{2}] = 5;
  m.transition[3][{1}] = 5;
  m.transition[3][{2}] = 4;
  m.transition[4][{3}] = 4;
  m.transition[5][{3}] = 5;
  m.indist = {{0, 0, 1, 1, 2, 3}};
  return m;
}

// Three-state chain ending in a self loop, p at the end. Two nested down
// modalities must share one initial endowment: two units reach s2, one
// does not.
inline GameModel ral_chain() {
  GameModel m;
  m.agents = {"1"};
  m.resources = {"r1"};
  m.states = {"s0", "s1", "s2"};
  m.actions = {"a"};
  m.propositions["p"] = {2};
  m.propositions["q"] = {0, 1, 2};
  m.avail = {{{0}}, {{0}}, {{0}}};
  m.cost.assign(3, std::vector<std::optional<ResourceVector>>(1));
  for (int s : {0, 1, 2}) m.cost[s][0] = ResourceVector{-1};
  m.transition.assign(3, {});
  m.transition[0][{0}] = 1;
  m.transition[1][{0}] = 2;
  m.transition[2][{0}] = 2;
  m.indist = {{0, 1, 2}};
  return m;
}

// One state, two agents, one action each. Whenever either side's endowment
// cannot pay for its only action, no joint step is admissible and every
// computation ends at the root immediately.
inline GameModel lockstep() {
  GameModel m;
  m.agents = {"1", "2"};
  m.resources = {"r1"};
  m.states = {"s0"};
  m.actions = {"a", "b"};
  m.propositions["p"] = {};
  m.propositions["q"] = {0};
  m.avail = {{{0}, {1}}};
  m.cost.assign(1, std::vector<std::optional<ResourceVector>>(2));
  m.cost[0][0] = ResourceVector{-1};
  m.cost[0][1] = ResourceVector{-1};
  m.transition.assign(1, {});
  m.transition[0][{0, 1}] = 0;
  m.indist = {{0}, {0}};
  return m;
}

// One state, one agent, two self-loop actions of cost one. The smallest
// structure where strategy trees branch: with budget (2) the tree domain is
// the three histories of length 1..3 and there are exactly 2^3 trees.
inline GameModel micro_two_choice() {
  GameModel m;
  m.agents = {"1"};
  m.resources = {"r1"};
  m.states = {"s"};
  m.actions = {"x", "y"};
  m.propositions["p"] = {0};
  m.propositions["q"] = {};
  m.avail = {{{0, 1}}};
  m.cost.assign(1, std::vector<std::optional<ResourceVector>>(2));
  m.cost[0][0] = ResourceVector{-1};
  m.cost[0][1] = ResourceVector{-1};
  m.transition.assign(1, {});
  m.transition[0][{0}] = 0;
  m.transition[0][{1}] = 0;
  m.indist = {{0}};
  return m;
}

}  // namespace rlmc::fixtures
