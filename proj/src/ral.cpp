#include "rlmc/ral.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <stdexcept>

namespace rlmc {

namespace {

// Proponent / opponent indices of the outermost operator, empty for
// non-modal formulas. Fresh search roots carry these so that audits can see
// which agents' resources the upcoming search may touch.
std::vector<int> proponents_of(const GameModel& m, const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::RalNext:
    case FormulaKind::RalUntil:
    case FormulaKind::RalRelease:
      return coalition_indices(m, f->coalition);
    default:
      return {};
  }
}

std::vector<int> opponents_of(const GameModel& m, const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::RalNext:
    case FormulaKind::RalUntil:
    case FormulaKind::RalRelease:
      return coalition_indices(m, f->opponents);
    default:
      return {};
  }
}

class RalEngine {
 public:
  RalEngine(const GameModel& m, EngineStats& stats) : m_(m), stats_(stats) {}

  bool strategy(const RalNodePtr& n, const FormulaPtr& f) {
    switch (f->kind) {
      case FormulaKind::True:
        return true;
      case FormulaKind::False:
        return false;
      case FormulaKind::Prop:
        return m_.propositions.at(f->prop).count(n->state) > 0;
      case FormulaKind::Not:
        return !strategy(reroot(n, f->children[0]), f->children[0]);
      case FormulaKind::And:
        return strategy(reroot(n, f->children[0]), f->children[0]) &&
               strategy(reroot(n, f->children[1]), f->children[1]);
      case FormulaKind::Or:
        return strategy(reroot(n, f->children[0]), f->children[0]) ||
               strategy(reroot(n, f->children[1]), f->children[1]);
      case FormulaKind::RalNext:
      case FormulaKind::RalUntil:
      case FormulaKind::RalRelease:
        return modality(n, f);
      default:
        throw std::invalid_argument(
            "bound-carrying modalities require the perfect or imperfect "
            "engine");
    }
  }

 private:
  // Fresh root at the node's state with the node's current avail; resource
  // tracking restarts there for the subformula's own coalitions.
  RalNodePtr reroot(const RalNodePtr& n, const FormulaPtr& f) const {
    return ral_root(n->state, n->avail, proponents_of(m_, f),
                    opponents_of(m_, f));
  }

  bool modality(const RalNodePtr& n, const FormulaPtr& f) {
    const std::vector<int> pro = coalition_indices(m_, f->coalition);
    const std::vector<int> opp = coalition_indices(m_, f->opponents);
    AgentVectors avail =
        f->mode == RalMode::Down ? n->avail : full_endowment(m_, f->endowment);
    RalNodePtr root = ral_root(n->state, std::move(avail), pro, opp);

    // Every action spends at least one unit of the first resource, so no
    // member of the union can act more often than its first-resource stock.
    int cap = INT_MAX;
    std::vector<int> touched = pro;
    touched.insert(touched.end(), opp.begin(), opp.end());
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int a : touched) cap = std::min(cap, root->avail[a][0]);
    if (cap == INT_MAX) cap = 0;
    cap += 1;

    switch (f->kind) {
      case FormulaKind::RalNext:
        return ral_next(root, f, cap);
      case FormulaKind::RalUntil:
        return ral_until(root, f, cap);
      default:
        return ral_release(root, f, cap);
    }
  }

  bool pro_affordable(const RalNodePtr& n, const JointAction& sigma) const {
    for (size_t i = 0; i < sigma.agents.size(); ++i) {
      ResourceVector cons =
          decompose_cost(m_, n->state, sigma.acts[i]).first;
      if (!vec_leq(cons, n->avail[sigma.agents[i]])) return false;
    }
    return true;
  }

  // Full profiles extending sigma in which every opponent can afford its own
  // action. Proponent affordability is checked separately before this.
  std::vector<std::vector<int>> viable_profiles(const RalNodePtr& n,
                                                const JointAction& sigma) {
    std::vector<std::vector<int>> viable;
    for (const auto& tuple : full_profiles(m_, n->state, sigma)) {
      bool ok = true;
      for (int b : n->opponents) {
        ResourceVector cons = decompose_cost(m_, n->state, tuple[b]).first;
        if (!vec_leq(cons, n->avail[b])) {
          ok = false;
          break;
        }
      }
      if (ok) viable.push_back(tuple);
    }
    return viable;
  }

  bool ral_next(const RalNodePtr& n, const FormulaPtr& f, int cap) {
    stats_.visit(n->depth, cap);
    const FormulaPtr& phi = f->children[0];
    for (const auto& sigma : joint_actions(m_, n->state, n->proponents)) {
      if (!pro_affordable(n, sigma)) continue;
      auto profiles = viable_profiles(n, sigma);
      if (profiles.empty()) continue;  // no admissible computation extends it
      bool all = true;
      for (const auto& tuple : profiles) {
        RalNodePtr child = ral_child(m_, n, tuple);
        stats_.visit(child->depth, cap);
        if (!strategy(reroot(child, phi), phi)) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }

  bool ral_until(const RalNodePtr& n, const FormulaPtr& f, int cap) {
    stats_.visit(n->depth, cap);
    const FormulaPtr& phi = f->children[0];
    const FormulaPtr& psi = f->children[1];
    if (strategy(reroot(n, psi), psi)) return true;
    if (!strategy(reroot(n, phi), phi)) return false;
    for (const auto& sigma : joint_actions(m_, n->state, n->proponents)) {
      if (!pro_affordable(n, sigma)) continue;
      auto profiles = viable_profiles(n, sigma);
      if (profiles.empty()) continue;  // the run ends before reaching psi
      bool all = true;
      for (const auto& tuple : profiles) {
        if (!ral_until(ral_child(m_, n, tuple), f, cap)) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }

  bool ral_release(const RalNodePtr& n, const FormulaPtr& f, int cap) {
    stats_.visit(n->depth, cap);
    const FormulaPtr& phi = f->children[0];
    const FormulaPtr& psi = f->children[1];
    if (!strategy(reroot(n, psi), psi)) return false;
    if (strategy(reroot(n, phi), phi)) return true;
    // psi holds here; if some proponent choice is unaffordable the coalition
    // may deliberately run out, ending the computation while psi holds.
    auto choices = joint_actions(m_, n->state, n->proponents);
    for (const auto& sigma : choices) {
      if (!pro_affordable(n, sigma)) return true;
    }
    for (const auto& sigma : choices) {
      auto profiles = viable_profiles(n, sigma);
      // No opponent completion is affordable: the computation ends while psi
      // holds, which satisfies release.
      if (profiles.empty()) return true;
      bool all = true;
      for (const auto& tuple : profiles) {
        if (!ral_release(ral_child(m_, n, tuple), f, cap)) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }

  const GameModel& m_;
  EngineStats& stats_;
};

}  // namespace

RalNodePtr ral_root(int state, AgentVectors avail, std::vector<int> proponents,
                    std::vector<int> opponents) {
  auto n = std::make_shared<RalNode>();
  n->state = state;
  n->avail = std::move(avail);
  n->proponents = std::move(proponents);
  n->opponents = std::move(opponents);
  n->depth = 1;
  return n;
}

RalNodePtr ral_child(const GameModel& m, const RalNodePtr& parent,
                     const std::vector<int>& acts) {
  assert(static_cast<int>(acts.size()) == m.agent_count());
  auto n = std::make_shared<RalNode>();
  n->state = m.transition[parent->state].at(acts);
  n->parent = parent;
  n->incoming = acts;
  n->avail = parent->avail;
  n->proponents = parent->proponents;
  n->opponents = parent->opponents;
  n->depth = parent->depth + 1;
  std::vector<int> touched = parent->proponents;
  touched.insert(touched.end(), parent->opponents.begin(),
                 parent->opponents.end());
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (int a : touched) {
    auto [cons, prod] = decompose_cost(m, parent->state, acts[a]);
    n->avail[a] = vec_add(vec_sub(n->avail[a], cons), prod);
  }
  return n;
}

bool ral_strategy(const GameModel& m, const RalNodePtr& node,
                  const FormulaPtr& f, EngineStats& stats) {
  return RalEngine(m, stats).strategy(node, f);
}

StateSet ral_check(const GameModel& m, const FormulaPtr& f,
                   const AgentVectors& endowment, EngineStats& stats) {
  assert(static_cast<int>(endowment.size()) == m.agent_count());
  StateSet out;
  RalEngine engine(m, stats);
  for (int s = 0; s < m.state_count(); ++s) {
    RalNodePtr root =
        ral_root(s, endowment, proponents_of(m, f), opponents_of(m, f));
    if (engine.strategy(root, f)) out.insert(s);
  }
  return out;
}

}  // namespace rlmc
