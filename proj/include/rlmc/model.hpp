#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlmc/resource_vector.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rlmc {

using StateSet = std::set<int>;

// Per-agent resource endowment, indexed by agent. Used both for the budgets
// a coalition carries during search (indexed by coalition position) and for
// full endowments over all agents.
using AgentVectors = std::vector<ResourceVector>;

// Action choice by a coalition: `agents` holds agent indices in ascending
// order, `acts[i]` is the action id chosen by `agents[i]`.
struct JointAction {
  std::vector<int> agents;
  std::vector<int> acts;

  bool operator==(const JointAction&) const = default;
};

// Concurrent game structure with resource costs. Every state offers at least
// one action per agent, every available action has a cost whose first
// component is <= -1, and the transition function is total exactly on the
// full joint-action products. Indistinguishability is a per-agent partition
// of states (identity when the model has no `indist` section).
struct GameModel {
  std::vector<std::string> agents;
  std::vector<std::string> resources;  // index 0 is the diminishing resource
  std::vector<std::string> states;
  std::vector<std::string> actions;  // global alphabet, first-occurrence order

  // proposition name -> states where it holds (sorted by state index)
  std::map<std::string, StateSet> propositions;

  // avail[s][a]: action ids available to agent a at state s, declared order
  std::vector<std::vector<std::vector<int>>> avail;

  // cost[s][act]: resource delta, present iff act is available to someone at s
  std::vector<std::vector<std::optional<ResourceVector>>> cost;

  // transition[s]: full joint action (one act per agent, agent order) -> state
  std::vector<std::map<std::vector<int>, int>> transition;

  // indist[a][s]: equivalence-class id of state s for agent a
  std::vector<std::vector<int>> indist;

  int resource_count() const { return static_cast<int>(resources.size()); }
  int agent_count() const { return static_cast<int>(agents.size()); }
  int state_count() const { return static_cast<int>(states.size()); }

  // -1 when the name is unknown.
  int state_index(const std::string& name) const;
  int agent_index(const std::string& name) const;
  int action_index(const std::string& name) const;

  bool same_class(int agent, int s1, int s2) const {
    return indist[agent][s1] == indist[agent][s2];
  }
};

// A model file that cannot be mapped onto the GameModel shape at all
// (bad JSON types, missing or unknown top-level keys).
struct ModelFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadResult {
  GameModel model;
  // Reference problems found while resolving names (undeclared states,
  // agents, actions, overlapping indist blocks, ...). The model is only
  // meaningful when this list and validate_model() are both empty.
  std::vector<std::string> diagnostics;
};

// Throws ModelFormatError on shape violations; collects content problems
// as diagnostics.
LoadResult load_model(const nlohmann::json& doc);

// Canonical serialization; load_model(model_to_json(m)) reproduces m.
nlohmann::json model_to_json(const GameModel& m);

// Invariant checks on a built model: non-empty action sets, costs present
// with diminishing first component, transitions total exactly on the joint
// products. One diagnostic per violation.
std::vector<std::string> validate_model(const GameModel& m);

// Splits a cost vector into consumption (absolute negative parts) and
// production (positive parts); cost = production - consumption.
// Throws std::invalid_argument("unknown action cost") when the pair is
// undefined.
std::pair<ResourceVector, ResourceVector> decompose_cost(const GameModel& m,
                                                         int state, int action);

// All joint actions of the coalition at `state`, lexicographic over the
// declared per-agent action order. Coalition agent indices must be valid;
// throws std::invalid_argument("empty coalition rejected") on an empty one.
std::vector<JointAction> joint_actions(const GameModel& m, int state,
                                       const std::vector<int>& coalition);

// States reachable when the coalition fixes `sigma` and the remaining agents
// choose anything. Throws std::invalid_argument("action unavailable") when
// sigma is not available at `state`.
StateSet outcomes(const GameModel& m, int state, const JointAction& sigma);

// All full joint-action tuples (one action per agent, declared agent order)
// extending the coalition choice `sigma`, lexicographic over the declared
// per-agent action order.
std::vector<std::vector<int>> full_profiles(const GameModel& m, int state,
                                            const JointAction& sigma);

// States where the coalition has an action affordable under `budget`
// (per member, pointwise) with all outcomes inside `target`.
StateSet pre(const GameModel& m, const std::vector<int>& coalition,
             const StateSet& target, const AgentVectors& budget);

// Per-member consumption of a coalition action, aligned with sigma.agents.
AgentVectors action_consumption(const GameModel& m, int state,
                                const JointAction& sigma);

// cons(sigma) <= budget per coalition member.
bool affordable(const GameModel& m, int state, const JointAction& sigma,
                const AgentVectors& budget);

}  // namespace rlmc
