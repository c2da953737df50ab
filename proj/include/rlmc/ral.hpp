#pragma once

#include <memory>
#include <vector>

#include "rlmc/formula.hpp"
#include "rlmc/model.hpp"
#include "rlmc/search_node.hpp"

namespace rlmc {

// Search node for the endowment-carrying engine. Unlike the bound-carrying
// engines, avail tracks every agent in the model: proponents and opponents
// spend and regain resources, all other agents stay frozen at their entry
// value.
struct RalNode {
  int state = -1;
  std::shared_ptr<const RalNode> parent;
  // Full joint action (one entry per agent, declared order) taken to reach
  // this node. Empty at a search root.
  std::vector<int> incoming;
  AgentVectors avail;
  // Agent indices, sorted. Opponents may overlap proponents; resource
  // updates apply once per agent in the union.
  std::vector<int> proponents;
  std::vector<int> opponents;
  int depth = 1;  // history length in states
};

using RalNodePtr = std::shared_ptr<const RalNode>;

RalNodePtr ral_root(int state, AgentVectors avail, std::vector<int> proponents,
                    std::vector<int> opponents);

// Child reached by the full profile `acts`; avail is updated for every agent
// in proponents ∪ opponents and frozen elsewhere.
RalNodePtr ral_child(const GameModel& m, const RalNodePtr& parent,
                     const std::vector<int>& acts);

// Truth of `f` at the node's state with the node's available endowment.
// Modalities restart the resource tracking: down mode reuses the node's
// avail, fresh mode replaces it with the formula's endowment.
bool ral_strategy(const GameModel& m, const RalNodePtr& node,
                  const FormulaPtr& f, EngineStats& stats);

// States satisfying `f` under initial endowment `endowment` (one vector per
// agent, declared order).
StateSet ral_check(const GameModel& m, const FormulaPtr& f,
                   const AgentVectors& endowment, EngineStats& stats);

}  // namespace rlmc
