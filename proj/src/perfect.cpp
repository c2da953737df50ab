#include "rlmc/perfect.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <stdexcept>

namespace rlmc {

int depth_cap(const AgentVectors& budget) {
  int cap = INT_MAX;
  for (const ResourceVector& b : budget) cap = std::min(cap, b[0]);
  return cap + 1;
}

bool until_strategy(const GameModel& m, const std::vector<int>& coalition,
                    const SearchNodePtr& node, const StateSet& phi,
                    const StateSet& psi, int cap, EngineStats& stats) {
  stats.visit(node->depth, cap);
  if (psi.count(node->state)) return true;
  if (!phi.count(node->state)) return false;
  for (const JointAction& sigma : joint_actions(m, node->state, coalition)) {
    if (!affordable(m, node->state, sigma, node->avail)) continue;
    bool all = true;
    for (int next : outcomes(m, node->state, sigma)) {
      if (!until_strategy(m, coalition, child_node(m, node, sigma, next), phi, psi,
                          cap, stats)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool release_strategy(const GameModel& m, const std::vector<int>& coalition,
                      const SearchNodePtr& node, const StateSet& phi,
                      const StateSet& psi, int cap, EngineStats& stats,
                      const PerfectOptions& opts) {
  stats.visit(node->depth, cap);
  const bool holds_psi = psi.count(node->state) > 0;
  if (holds_psi && phi.count(node->state)) return true;
  if (holds_psi && opts.release_runout) {
    // The coalition may deliberately prescribe an action it cannot pay for;
    // the run ends here with the maintained condition intact.
    for (const JointAction& sigma : joint_actions(m, node->state, coalition))
      if (!affordable(m, node->state, sigma, node->avail)) return true;
  }
  if (!holds_psi) return false;
  for (const JointAction& sigma : joint_actions(m, node->state, coalition)) {
    if (!affordable(m, node->state, sigma, node->avail)) continue;
    bool all = true;
    for (int next : outcomes(m, node->state, sigma)) {
      if (!release_strategy(m, coalition, child_node(m, node, sigma, next), phi, psi,
                            cap, stats, opts)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

LabelMap label_states(const GameModel& m, const FormulaPtr& root, EngineStats& stats,
                      const PerfectOptions& opts) {
  LabelMap labels;
  StateSet all;
  for (int s = 0; s < m.state_count(); ++s) all.insert(s);

  for (const FormulaPtr& f : subformulas(root)) {
    const std::string text = to_text(f);
    StateSet set;
    switch (f->kind) {
      case FormulaKind::True:
        set = all;
        break;
      case FormulaKind::False:
        break;
      case FormulaKind::Prop: {
        auto it = m.propositions.find(f->prop);
        if (it == m.propositions.end())
          throw std::invalid_argument("unknown proposition " + f->prop);
        set = it->second;
        break;
      }
      case FormulaKind::Not: {
        const StateSet& sub = labels.of(to_text(f->children[0]));
        std::set_difference(all.begin(), all.end(), sub.begin(), sub.end(),
                            std::inserter(set, set.end()));
        break;
      }
      case FormulaKind::And: {
        const StateSet& lhs = labels.of(to_text(f->children[0]));
        const StateSet& rhs = labels.of(to_text(f->children[1]));
        std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                              std::inserter(set, set.end()));
        break;
      }
      case FormulaKind::Or: {
        const StateSet& lhs = labels.of(to_text(f->children[0]));
        const StateSet& rhs = labels.of(to_text(f->children[1]));
        std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                       std::inserter(set, set.end()));
        break;
      }
      case FormulaKind::Next: {
        std::vector<int> coalition = coalition_indices(m, f->coalition);
        AgentVectors budget = aligned_budget(m, f->bound, coalition);
        const StateSet& sub = labels.of(to_text(f->children[0]));
        set = pre(m, coalition, sub, budget);
        stats.nodes_expanded += m.state_count();
        stats.max_depth = std::max(stats.max_depth, 1);
        break;
      }
      case FormulaKind::Until:
      case FormulaKind::Release: {
        std::vector<int> coalition = coalition_indices(m, f->coalition);
        AgentVectors budget = aligned_budget(m, f->bound, coalition);
        const StateSet& phi = labels.of(to_text(f->children[0]));
        const StateSet& psi = labels.of(to_text(f->children[1]));
        const int cap = depth_cap(budget);
        for (int s = 0; s < m.state_count(); ++s) {
          bool ok = f->kind == FormulaKind::Until
                        ? until_strategy(m, coalition, root_node(s, budget), phi, psi,
                                         cap, stats)
                        : release_strategy(m, coalition, root_node(s, budget), phi,
                                           psi, cap, stats, opts);
          if (ok) set.insert(s);
        }
        break;
      }
      case FormulaKind::RalNext:
      case FormulaKind::RalUntil:
      case FormulaKind::RalRelease:
        throw std::invalid_argument(
            "endowment-carrying modalities require the ral engine");
    }
    labels.order.push_back(text);
    labels.sets.emplace(text, std::move(set));
  }
  return labels;
}

}  // namespace rlmc
