#pragma once

#include <memory>
#include <vector>

#include "rlmc/model.hpp"

namespace rlmc {

// One node of a strategy-search tree: a state, the resources the coalition
// still holds there, and the path that led here (parent chain). `incoming`
// records the coalition action taken from the parent, aligned with the
// coalition used by the search; it is empty at a root.
struct SearchNode {
  int state = 0;
  std::shared_ptr<const SearchNode> parent;
  std::vector<int> incoming;
  AgentVectors avail;
  int depth = 1;  // history length in states
};

using SearchNodePtr = std::shared_ptr<const SearchNode>;
using NodeList = std::vector<SearchNodePtr>;

SearchNodePtr root_node(int state, AgentVectors budget);

// Successor after the coalition plays `sigma` from `parent`: avail is
// charged consumption and credited production per member. The result can
// carry negative availability when sigma is unaffordable; such nodes are
// only ever stored as run-out witnesses, never expanded.
SearchNodePtr child_node(const GameModel& m, const SearchNodePtr& parent,
                         const JointAction& sigma, int state);

// States from the root to this node, oldest first.
std::vector<int> history_states(const SearchNodePtr& n);

// Node at 1-based position `pos` of the node's history (pos <= depth).
SearchNodePtr node_at(const SearchNodePtr& n, int pos);

// Counters shared by the three checking engines. max_depth is the longest
// node history expanded by any search of the query; the cap counters record
// how often an engine exceeded a bound it is supposed to respect (always
// zero unless the implementation is broken).
struct EngineStats {
  long long nodes_expanded = 0;
  int max_depth = 0;
  long long depth_cap_violations = 0;
  long long closed_cap_violations = 0;
  long long max_closed_size = 0;

  void visit(int depth, int cap) {
    ++nodes_expanded;
    if (depth > max_depth) max_depth = depth;
    if (depth > cap) ++depth_cap_violations;
  }
};

}  // namespace rlmc
