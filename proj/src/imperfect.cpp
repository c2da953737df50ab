#include "rlmc/imperfect.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

namespace rlmc {

namespace {

// A committed branch constrains later choices: whenever the current history
// is indistinguishable (to some coalition member) from an equally long
// prefix of a closed branch, that member must repeat the action the closed
// branch took next.
bool uniform_compatible(const GameModel& m, const std::vector<int>& coalition,
                        const SearchNodePtr& n, const JointAction& sigma,
                        const NodeList& closed) {
  const std::vector<int> h = history_states(n);
  const int len = static_cast<int>(h.size());
  for (const SearchNodePtr& c : closed) {
    if (c->depth < len + 1) continue;
    const std::vector<int> hc = history_states(c);
    const SearchNodePtr follow = node_at(c, len + 1);
    for (size_t i = 0; i < coalition.size(); ++i) {
      bool match = true;
      for (int p = 0; p < len && match; ++p)
        match = m.same_class(coalition[i], h[p], hc[p]);
      if (match && follow->incoming[i] != sigma.acts[i]) return false;
    }
  }
  return true;
}

NodeList tail(const NodeList& open) {
  return NodeList(open.begin() + 1, open.end());
}

NodeList with(NodeList closed, SearchNodePtr n, long long closed_cap,
              EngineStats& stats) {
  closed.push_back(std::move(n));
  auto size = static_cast<long long>(closed.size());
  if (size > stats.max_closed_size) stats.max_closed_size = size;
  if (size > closed_cap) ++stats.closed_cap_violations;
  return closed;
}

NodeList prepend(NodeList items, const NodeList& rest) {
  items.insert(items.end(), rest.begin(), rest.end());
  return items;
}

}  // namespace

bool seq_indist(const GameModel& m, const std::vector<int>& states1,
                const std::vector<int>& states2, int agent) {
  if (states1.size() != states2.size()) return false;
  for (size_t i = 0; i < states1.size(); ++i)
    if (!m.same_class(agent, states1[i], states2[i])) return false;
  return true;
}

NodeList initial_roots(const GameModel& m, const std::vector<int>& coalition,
                       int state, const AgentVectors& budget) {
  NodeList roots;
  for (int s = 0; s < m.state_count(); ++s)
    for (int a : coalition)
      if (m.same_class(a, s, state)) {
        roots.push_back(root_node(s, budget));
        break;
      }
  return roots;
}

long long closed_size_cap(int state_count, int cap_depth) {
  if (cap_depth >= 62) return LLONG_MAX;
  long long total = 0, level = 1;
  for (int len = 1; len <= cap_depth + 1; ++len) {
    if (level > LLONG_MAX / (state_count + 1)) return LLONG_MAX;
    level *= state_count;
    total += level;
  }
  return total;
}

std::optional<NodeList> next_search(const GameModel& m,
                                    const std::vector<int>& coalition, NodeList open,
                                    NodeList closed, const StateSet& phi, int cap,
                                    long long closed_cap, EngineStats& stats) {
  if (open.empty()) return closed;
  const SearchNodePtr n = open.front();
  stats.visit(n->depth, cap);
  for (const JointAction& sigma : joint_actions(m, n->state, coalition)) {
    if (!affordable(m, n->state, sigma, n->avail)) continue;
    StateSet out = outcomes(m, n->state, sigma);
    if (!std::includes(phi.begin(), phi.end(), out.begin(), out.end())) continue;
    if (!uniform_compatible(m, coalition, n, sigma, closed)) continue;
    auto res = next_search(m, coalition, tail(open),
                           with(closed, child_node(m, n, sigma, *out.begin()),
                                closed_cap, stats),
                           phi, cap, closed_cap, stats);
    if (res) return res;
  }
  return std::nullopt;
}

std::optional<NodeList> until_search(const GameModel& m,
                                     const std::vector<int>& coalition, NodeList open,
                                     NodeList closed, const StateSet& phi,
                                     const StateSet& psi, int cap,
                                     long long closed_cap, EngineStats& stats) {
  if (open.empty()) return closed;
  const SearchNodePtr n = open.front();
  stats.visit(n->depth, cap);
  if (psi.count(n->state))
    return until_search(m, coalition, tail(open), with(closed, n, closed_cap, stats),
                        phi, psi, cap, closed_cap, stats);
  if (!phi.count(n->state)) return std::nullopt;
  for (const JointAction& sigma : joint_actions(m, n->state, coalition)) {
    if (!affordable(m, n->state, sigma, n->avail)) continue;
    if (!uniform_compatible(m, coalition, n, sigma, closed)) continue;
    NodeList children;
    for (int next : outcomes(m, n->state, sigma))
      children.push_back(child_node(m, n, sigma, next));
    auto res = until_search(m, coalition, prepend(std::move(children), tail(open)),
                            closed, phi, psi, cap, closed_cap, stats);
    if (res) return res;
  }
  return std::nullopt;
}

std::optional<NodeList> release_search(const GameModel& m,
                                       const std::vector<int>& coalition,
                                       NodeList open, NodeList closed,
                                       const StateSet& phi, const StateSet& psi,
                                       int cap, long long closed_cap,
                                       EngineStats& stats) {
  if (open.empty()) return closed;
  const SearchNodePtr n = open.front();
  stats.visit(n->depth, cap);
  const bool holds_psi = psi.count(n->state) > 0;
  if (holds_psi && phi.count(n->state))
    return release_search(m, coalition, tail(open),
                          with(closed, n, closed_cap, stats), phi, psi, cap,
                          closed_cap, stats);
  if (!holds_psi) return std::nullopt;
  for (const JointAction& sigma : joint_actions(m, n->state, coalition)) {
    if (!uniform_compatible(m, coalition, n, sigma, closed)) continue;
    if (!affordable(m, n->state, sigma, n->avail)) {
      // Run out deliberately: commit the unaffordable choice as a witness so
      // later branches stay uniform with it, and keep the branch successful.
      StateSet out = outcomes(m, n->state, sigma);
      auto res = release_search(m, coalition, tail(open),
                                with(closed, child_node(m, n, sigma, *out.begin()),
                                     closed_cap, stats),
                                phi, psi, cap, closed_cap, stats);
      if (res) return res;
    } else {
      NodeList children;
      for (int next : outcomes(m, n->state, sigma))
        children.push_back(child_node(m, n, sigma, next));
      auto res = release_search(m, coalition, prepend(std::move(children), tail(open)),
                                closed, phi, psi, cap, closed_cap, stats);
      if (res) return res;
    }
  }
  return std::nullopt;
}

LabelMap label_states_uniform(const GameModel& m, const FormulaPtr& root,
                              EngineStats& stats) {
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
      case FormulaKind::Next:
      case FormulaKind::Until:
      case FormulaKind::Release: {
        std::vector<int> coalition = coalition_indices(m, f->coalition);
        AgentVectors budget = aligned_budget(m, f->bound, coalition);
        const int cap = depth_cap(budget);
        const long long ccap = closed_size_cap(m.state_count(), cap);
        // States sharing the same root set share the same search.
        std::map<std::vector<int>, bool> memo;
        for (int s = 0; s < m.state_count(); ++s) {
          NodeList roots = initial_roots(m, coalition, s, budget);
          std::vector<int> key;
          for (const SearchNodePtr& r : roots) key.push_back(r->state);
          auto it = memo.find(key);
          if (it == memo.end()) {
            bool ok = false;
            if (f->kind == FormulaKind::Next) {
              const StateSet& sub = labels.of(to_text(f->children[0]));
              ok = next_search(m, coalition, roots, {}, sub, cap, ccap, stats)
                       .has_value();
            } else {
              const StateSet& phi = labels.of(to_text(f->children[0]));
              const StateSet& psi = labels.of(to_text(f->children[1]));
              ok = f->kind == FormulaKind::Until
                       ? until_search(m, coalition, roots, {}, phi, psi, cap, ccap,
                                      stats)
                             .has_value()
                       : release_search(m, coalition, roots, {}, phi, psi, cap, ccap,
                                        stats)
                             .has_value();
            }
            it = memo.emplace(std::move(key), ok).first;
          }
          if (it->second) set.insert(s);
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
