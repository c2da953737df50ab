#include "rlmc/search_node.hpp"

#include <algorithm>
#include <cassert>

namespace rlmc {

SearchNodePtr root_node(int state, AgentVectors budget) {
  auto n = std::make_shared<SearchNode>();
  n->state = state;
  n->avail = std::move(budget);
  n->depth = 1;
  return n;
}

SearchNodePtr child_node(const GameModel& m, const SearchNodePtr& parent,
                         const JointAction& sigma, int state) {
  assert(parent);
  auto n = std::make_shared<SearchNode>();
  n->state = state;
  n->parent = parent;
  n->incoming = sigma.acts;
  n->avail.resize(sigma.agents.size());
  for (size_t i = 0; i < sigma.agents.size(); ++i) {
    auto [cons, prod] = decompose_cost(m, parent->state, sigma.acts[i]);
    n->avail[i] = vec_add(vec_sub(parent->avail[i], cons), prod);
  }
  n->depth = parent->depth + 1;
  return n;
}

std::vector<int> history_states(const SearchNodePtr& n) {
  std::vector<int> states;
  for (const SearchNode* cur = n.get(); cur; cur = cur->parent.get())
    states.push_back(cur->state);
  std::reverse(states.begin(), states.end());
  return states;
}

SearchNodePtr node_at(const SearchNodePtr& n, int pos) {
  assert(pos >= 1 && pos <= n->depth);
  SearchNodePtr cur = n;
  while (cur->depth > pos) cur = cur->parent;
  return cur;
}

}  // namespace rlmc
