#include "rlmc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rlmc/imperfect.hpp"

namespace rlmc {

OracleTooLarge::OracleTooLarge(long long estimate_)
    : std::runtime_error("oracle refusal: about " + std::to_string(estimate_) +
                         " strategy candidates exceed the enumeration guard"),
      estimate(estimate_) {}

namespace {

constexpr long long kSat = std::numeric_limits<long long>::max() / 2;

long long sat_add(long long a, long long b) {
  return (a >= kSat - b) ? kSat : a + b;
}

long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return (a >= kSat / b) ? kSat : a * b;
}

// Strategy assignment: every history reachable under the tree (leaves
// included) maps to the coalition's action ids there.
using Assign = std::map<std::vector<int>, std::vector<int>>;

// ----- perfect information, with an optional uniformity constraint -----

class TreeOracle {
 public:
  TreeOracle(const GameModel& m, bool uniform, OracleStats& stats)
      : m_(m), uniform_(uniform), stats_(stats) {}

  bool holds(int s, const FormulaPtr& f) {
    const auto key = std::make_pair(s, f.get());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool v = false;
    switch (f->kind) {
      case FormulaKind::True:
        v = true;
        break;
      case FormulaKind::False:
        v = false;
        break;
      case FormulaKind::Prop:
        v = m_.propositions.at(f->prop).count(s) > 0;
        break;
      case FormulaKind::Not:
        v = !holds(s, f->children[0]);
        break;
      case FormulaKind::And:
        v = holds(s, f->children[0]) && holds(s, f->children[1]);
        break;
      case FormulaKind::Or:
        v = holds(s, f->children[0]) || holds(s, f->children[1]);
        break;
      case FormulaKind::Next:
      case FormulaKind::Until:
      case FormulaKind::Release:
        v = modality(s, f);
        break;
      default:
        throw std::invalid_argument(
            "endowment-carrying modalities require the ral oracle");
    }
    memo_.emplace(key, v);
    return v;
  }

 private:
  struct Entry {
    std::vector<int> hist;
    AgentVectors avail;  // aligned to the coalition
  };

  struct Ctx {
    const Formula* f = nullptr;
    std::vector<int> coalition;
    std::vector<Entry> roots;
  };

  bool modality(int s, const FormulaPtr& f) {
    Ctx ctx;
    ctx.f = f.get();
    ctx.coalition = coalition_indices(m_, f->coalition);
    const AgentVectors budget = aligned_budget(m_, f->bound, ctx.coalition);
    // Strong uniformity: the same tree must win from every state some
    // member confuses with s. Perfect information: only from s.
    std::vector<int> roots;
    if (uniform_) {
      for (int t = 0; t < m_.state_count(); ++t) {
        for (int a : ctx.coalition) {
          if (m_.same_class(a, t, s)) {
            roots.push_back(t);
            break;
          }
        }
      }
    } else {
      roots.push_back(s);
    }

    count_memo_.clear();
    long long estimate = 1;
    for (int r : roots)
      estimate = sat_mul(estimate, count_trees(r, budget, ctx.coalition));
    if (estimate > kOracleGuard) throw OracleTooLarge(estimate);

    std::deque<Entry> pending;
    for (int r : roots) {
      Entry e{{r}, budget};
      ctx.roots.push_back(e);
      pending.push_back(std::move(e));
    }
    Assign assign;
    return enumerate(pending, assign, ctx);
  }

  // Exact number of strategy trees rooted at (s, avail): every D_A choice at
  // every reachable history counts, unaffordable ones as childless leaves.
  long long count_trees(int s, const AgentVectors& avail,
                        const std::vector<int>& coalition) {
    const auto key = std::make_pair(s, avail);
    if (auto it = count_memo_.find(key); it != count_memo_.end())
      return it->second;
    long long total = 0;
    for (const auto& sigma : joint_actions(m_, s, coalition)) {
      if (affordable(m_, s, sigma, avail)) {
        AgentVectors next = spend(s, sigma, avail);
        long long prod = 1;
        for (int t : outcomes(m_, s, sigma))
          prod = sat_mul(prod, count_trees(t, next, coalition));
        total = sat_add(total, prod);
      } else {
        total = sat_add(total, 1);
      }
    }
    count_memo_.emplace(key, total);
    return total;
  }

  AgentVectors spend(int s, const JointAction& sigma,
                     const AgentVectors& avail) const {
    AgentVectors next = avail;
    for (size_t i = 0; i < sigma.agents.size(); ++i) {
      auto [cons, prod] = decompose_cost(m_, s, sigma.acts[i]);
      next[i] = vec_add(vec_sub(next[i], cons), prod);
    }
    return next;
  }

  bool uniform_ok(const Assign& assign, const std::vector<int>& coalition,
                  const std::vector<int>& hist,
                  const std::vector<int>& acts) const {
    for (const auto& [h2, acts2] : assign) {
      if (h2.size() != hist.size()) continue;
      for (size_t i = 0; i < coalition.size(); ++i) {
        if (acts[i] == acts2[i]) continue;
        if (seq_indist(m_, hist, h2, coalition[i])) return false;
      }
    }
    return true;
  }

  bool enumerate(std::deque<Entry>& pending, Assign& assign, const Ctx& ctx) {
    if (pending.empty()) {
      ++stats_.trees_enumerated;
      return evaluate(assign, ctx);
    }
    Entry e = pending.front();
    pending.pop_front();
    stats_.max_depth =
        std::max(stats_.max_depth, static_cast<int>(e.hist.size()));
    const int s = e.hist.back();
    bool found = false;
    for (const auto& sigma : joint_actions(m_, s, ctx.coalition)) {
      if (uniform_ && !uniform_ok(assign, ctx.coalition, e.hist, sigma.acts))
        continue;
      assign[e.hist] = sigma.acts;
      size_t pushed = 0;
      if (affordable(m_, s, sigma, e.avail)) {
        AgentVectors next = spend(s, sigma, e.avail);
        for (int t : outcomes(m_, s, sigma)) {
          Entry child;
          child.hist = e.hist;
          child.hist.push_back(t);
          child.avail = next;
          pending.push_back(std::move(child));
          ++pushed;
        }
      }
      if (enumerate(pending, assign, ctx)) found = true;
      for (; pushed > 0; --pushed) pending.pop_back();
      assign.erase(e.hist);
      if (found) break;
    }
    pending.push_front(std::move(e));
    return found;
  }

  // Path conditions, fused over all maximal computations of the tree:
  // a branch ends where the assigned action became unaffordable.
  bool evaluate(const Assign& assign, const Ctx& ctx) {
    for (const auto& root : ctx.roots) {
      bool ok = false;
      switch (ctx.f->kind) {
        case FormulaKind::Next:
          ok = eval_next(assign, ctx, root);
          break;
        case FormulaKind::Until:
          ok = eval_until(assign, ctx, root.hist, root.avail);
          break;
        default:
          ok = eval_release(assign, ctx, root.hist, root.avail);
          break;
      }
      if (!ok) return false;
    }
    return true;
  }

  bool eval_next(const Assign& assign, const Ctx& ctx, const Entry& root) {
    const int s = root.hist.back();
    const JointAction sigma{ctx.coalition, assign.at(root.hist)};
    if (!affordable(m_, s, sigma, root.avail)) return false;
    for (int t : outcomes(m_, s, sigma))
      if (!holds(t, ctx.f->children[0])) return false;
    return true;
  }

  bool eval_until(const Assign& assign, const Ctx& ctx,
                  const std::vector<int>& hist, const AgentVectors& avail) {
    const int s = hist.back();
    if (holds(s, ctx.f->children[1])) return true;
    if (!holds(s, ctx.f->children[0])) return false;
    const JointAction sigma{ctx.coalition, assign.at(hist)};
    if (!affordable(m_, s, sigma, avail)) return false;  // ran out before psi
    const AgentVectors next = spend(s, sigma, avail);
    for (int t : outcomes(m_, s, sigma)) {
      std::vector<int> h2 = hist;
      h2.push_back(t);
      if (!eval_until(assign, ctx, h2, next)) return false;
    }
    return true;
  }

  bool eval_release(const Assign& assign, const Ctx& ctx,
                    const std::vector<int>& hist, const AgentVectors& avail) {
    const int s = hist.back();
    if (!holds(s, ctx.f->children[1])) return false;
    if (holds(s, ctx.f->children[0])) return true;
    const JointAction sigma{ctx.coalition, assign.at(hist)};
    if (!affordable(m_, s, sigma, avail)) return true;  // ends while psi holds
    const AgentVectors next = spend(s, sigma, avail);
    for (int t : outcomes(m_, s, sigma)) {
      std::vector<int> h2 = hist;
      h2.push_back(t);
      if (!eval_release(assign, ctx, h2, next)) return false;
    }
    return true;
  }

  const GameModel& m_;
  const bool uniform_;
  OracleStats& stats_;
  std::map<std::pair<int, const Formula*>, bool> memo_;
  std::map<std::pair<int, AgentVectors>, long long> count_memo_;
};

// ----- endowment-carrying family -----

class RalOracle {
 public:
  RalOracle(const GameModel& m, OracleStats& stats) : m_(m), stats_(stats) {}

  bool holds(int s, const AgentVectors& eta, const FormulaPtr& f) {
    const auto key = std::make_tuple(s, f.get(), eta);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool v = false;
    switch (f->kind) {
      case FormulaKind::True:
        v = true;
        break;
      case FormulaKind::False:
        v = false;
        break;
      case FormulaKind::Prop:
        v = m_.propositions.at(f->prop).count(s) > 0;
        break;
      case FormulaKind::Not:
        v = !holds(s, eta, f->children[0]);
        break;
      case FormulaKind::And:
        v = holds(s, eta, f->children[0]) && holds(s, eta, f->children[1]);
        break;
      case FormulaKind::Or:
        v = holds(s, eta, f->children[0]) || holds(s, eta, f->children[1]);
        break;
      case FormulaKind::RalNext:
      case FormulaKind::RalUntil:
      case FormulaKind::RalRelease:
        v = modality(s, eta, f);
        break;
      default:
        throw std::invalid_argument(
            "bound-carrying modalities require the perfect or imperfect "
            "oracle");
    }
    memo_.emplace(key, v);
    return v;
  }

 private:
  // One pending history with every distinct endowment vector it is
  // reachable under (opponent choices diverge endowments on equal states).
  struct Entry {
    std::vector<int> hist;
    std::vector<AgentVectors> avails;
  };

  struct Ctx {
    const Formula* f = nullptr;
    std::vector<int> pro, opp, touched;
    int root_state = -1;
    AgentVectors root_avail;
  };

  bool modality(int s, const AgentVectors& eta, const FormulaPtr& f) {
    Ctx ctx;
    ctx.f = f.get();
    ctx.pro = coalition_indices(m_, f->coalition);
    ctx.opp = coalition_indices(m_, f->opponents);
    ctx.touched = ctx.pro;
    ctx.touched.insert(ctx.touched.end(), ctx.opp.begin(), ctx.opp.end());
    std::sort(ctx.touched.begin(), ctx.touched.end());
    ctx.touched.erase(std::unique(ctx.touched.begin(), ctx.touched.end()),
                      ctx.touched.end());
    ctx.root_state = s;
    ctx.root_avail =
        f->mode == RalMode::Down ? eta : full_endowment(m_, f->endowment);

    count_memo_.clear();
    const long long estimate =
        count_trees(s, {ctx.root_avail}, ctx);
    if (estimate > kOracleGuard) throw OracleTooLarge(estimate);

    std::deque<Entry> pending;
    pending.push_back(Entry{{s}, {ctx.root_avail}});
    Assign assign;
    return enumerate(pending, assign, ctx);
  }

  bool pro_affordable(int s, const JointAction& sigma,
                      const AgentVectors& avail) const {
    for (size_t i = 0; i < sigma.agents.size(); ++i) {
      if (!vec_leq(decompose_cost(m_, s, sigma.acts[i]).first,
                   avail[sigma.agents[i]]))
        return false;
    }
    return true;
  }

  bool opp_affordable(int s, const std::vector<int>& tuple,
                      const AgentVectors& avail,
                      const std::vector<int>& opp) const {
    for (int b : opp) {
      if (!vec_leq(decompose_cost(m_, s, tuple[b]).first, avail[b]))
        return false;
    }
    return true;
  }

  AgentVectors spend(int s, const std::vector<int>& tuple,
                     const AgentVectors& avail,
                     const std::vector<int>& touched) const {
    AgentVectors next = avail;
    for (int a : touched) {
      auto [cons, prod] = decompose_cost(m_, s, tuple[a]);
      next[a] = vec_add(vec_sub(next[a], cons), prod);
    }
    return next;
  }

  // Children of (s, avails) under proponent choice sigma, grouped by next
  // state; each group carries the distinct endowments reaching it.
  std::map<int, std::vector<AgentVectors>> children(
      int s, const JointAction& sigma, const std::vector<AgentVectors>& avails,
      const Ctx& ctx) const {
    std::map<int, std::vector<AgentVectors>> groups;
    for (const AgentVectors& e : avails) {
      for (const auto& tuple : full_profiles(m_, s, sigma)) {
        if (!opp_affordable(s, tuple, e, ctx.opp)) continue;
        AgentVectors next = spend(s, tuple, e, ctx.touched);
        auto& list = groups[m_.transition[s].at(tuple)];
        if (std::find(list.begin(), list.end(), next) == list.end())
          list.push_back(std::move(next));
      }
    }
    return groups;
  }

  long long count_trees(int s, const std::vector<AgentVectors>& avails,
                        const Ctx& ctx) {
    const auto key = std::make_pair(s, avails);
    if (auto it = count_memo_.find(key); it != count_memo_.end())
      return it->second;
    long long total = 0;
    for (const auto& sigma : joint_actions(m_, s, ctx.pro)) {
      if (pro_affordable(s, sigma, avails.front())) {
        long long prod = 1;
        for (const auto& [t, sub] : children(s, sigma, avails, ctx))
          prod = sat_mul(prod, count_trees(t, sub, ctx));
        total = sat_add(total, prod);
      } else {
        total = sat_add(total, 1);
      }
    }
    count_memo_.emplace(key, total);
    return total;
  }

  bool enumerate(std::deque<Entry>& pending, Assign& assign, const Ctx& ctx) {
    if (pending.empty()) {
      ++stats_.trees_enumerated;
      return evaluate(assign, ctx);
    }
    Entry e = pending.front();
    pending.pop_front();
    stats_.max_depth =
        std::max(stats_.max_depth, static_cast<int>(e.hist.size()));
    const int s = e.hist.back();
    bool found = false;
    for (const auto& sigma : joint_actions(m_, s, ctx.pro)) {
      assign[e.hist] = sigma.acts;
      size_t pushed = 0;
      if (pro_affordable(s, sigma, e.avails.front())) {
        for (auto& [t, sub] : children(s, sigma, e.avails, ctx)) {
          Entry child;
          child.hist = e.hist;
          child.hist.push_back(t);
          child.avails = std::move(sub);
          pending.push_back(std::move(child));
          ++pushed;
        }
      }
      if (enumerate(pending, assign, ctx)) found = true;
      for (; pushed > 0; --pushed) pending.pop_back();
      assign.erase(e.hist);
      if (found) break;
    }
    pending.push_front(std::move(e));
    return found;
  }

  bool evaluate(const Assign& assign, const Ctx& ctx) {
    const std::vector<int> root{ctx.root_state};
    switch (ctx.f->kind) {
      case FormulaKind::RalNext:
        return eval_next(assign, ctx, root, ctx.root_avail);
      case FormulaKind::RalUntil:
        return eval_until(assign, ctx, root, ctx.root_avail);
      default:
        return eval_release(assign, ctx, root, ctx.root_avail);
    }
  }

  // Completions of sigma that every opponent can afford under e.
  std::vector<std::vector<int>> viable(int s, const JointAction& sigma,
                                       const AgentVectors& e,
                                       const Ctx& ctx) const {
    std::vector<std::vector<int>> out;
    for (const auto& tuple : full_profiles(m_, s, sigma)) {
      if (opp_affordable(s, tuple, e, ctx.opp)) out.push_back(tuple);
    }
    return out;
  }

  bool eval_next(const Assign& assign, const Ctx& ctx,
                 const std::vector<int>& hist, const AgentVectors& e) {
    const int s = hist.back();
    const JointAction sigma{ctx.pro, assign.at(hist)};
    if (!pro_affordable(s, sigma, e)) return false;
    const auto tuples = viable(s, sigma, e, ctx);
    if (tuples.empty()) return false;  // no computation has a second state
    for (const auto& tuple : tuples) {
      const int t = m_.transition[s].at(tuple);
      if (!holds(t, spend(s, tuple, e, ctx.touched), ctx.f->children[0]))
        return false;
    }
    return true;
  }

  bool eval_until(const Assign& assign, const Ctx& ctx,
                  const std::vector<int>& hist, const AgentVectors& e) {
    const int s = hist.back();
    if (holds(s, e, ctx.f->children[1])) return true;
    if (!holds(s, e, ctx.f->children[0])) return false;
    const JointAction sigma{ctx.pro, assign.at(hist)};
    if (!pro_affordable(s, sigma, e)) return false;
    const auto tuples = viable(s, sigma, e, ctx);
    if (tuples.empty()) return false;  // the run ends before reaching psi
    for (const auto& tuple : tuples) {
      std::vector<int> h2 = hist;
      h2.push_back(m_.transition[s].at(tuple));
      if (!eval_until(assign, ctx, h2, spend(s, tuple, e, ctx.touched)))
        return false;
    }
    return true;
  }

  bool eval_release(const Assign& assign, const Ctx& ctx,
                    const std::vector<int>& hist, const AgentVectors& e) {
    const int s = hist.back();
    if (!holds(s, e, ctx.f->children[1])) return false;
    if (holds(s, e, ctx.f->children[0])) return true;
    const JointAction sigma{ctx.pro, assign.at(hist)};
    if (!pro_affordable(s, sigma, e)) return true;  // ends while psi holds
    const auto tuples = viable(s, sigma, e, ctx);
    if (tuples.empty()) return true;  // likewise
    for (const auto& tuple : tuples) {
      std::vector<int> h2 = hist;
      h2.push_back(m_.transition[s].at(tuple));
      if (!eval_release(assign, ctx, h2, spend(s, tuple, e, ctx.touched)))
        return false;
    }
    return true;
  }

  const GameModel& m_;
  OracleStats& stats_;
  std::map<std::tuple<int, const Formula*, AgentVectors>, bool> memo_;
  std::map<std::pair<int, std::vector<AgentVectors>>, long long> count_memo_;
};

}  // namespace

bool holds_semantics(const GameModel& m, int state, const FormulaPtr& f,
                     OracleStats& stats) {
  return TreeOracle(m, false, stats).holds(state, f);
}

bool holds_semantics_uniform(const GameModel& m, int state,
                             const FormulaPtr& f, OracleStats& stats) {
  return TreeOracle(m, true, stats).holds(state, f);
}

bool holds_semantics_ral(const GameModel& m, int state,
                         const AgentVectors& endowment, const FormulaPtr& f,
                         OracleStats& stats) {
  return RalOracle(m, stats).holds(state, endowment, f);
}

StateSet oracle_states(const GameModel& m, const FormulaPtr& f,
                       OracleStats& stats) {
  StateSet out;
  TreeOracle oracle(m, false, stats);
  for (int s = 0; s < m.state_count(); ++s)
    if (oracle.holds(s, f)) out.insert(s);
  return out;
}

StateSet oracle_states_uniform(const GameModel& m, const FormulaPtr& f,
                               OracleStats& stats) {
  StateSet out;
  TreeOracle oracle(m, true, stats);
  for (int s = 0; s < m.state_count(); ++s)
    if (oracle.holds(s, f)) out.insert(s);
  return out;
}

StateSet oracle_states_ral(const GameModel& m, const FormulaPtr& f,
                           const AgentVectors& endowment, OracleStats& stats) {
  StateSet out;
  RalOracle oracle(m, stats);
  for (int s = 0; s < m.state_count(); ++s)
    if (oracle.holds(s, endowment, f)) out.insert(s);
  return out;
}

GameModel random_model(const GenParams& p) {
  std::mt19937_64 rng(p.seed);
  // Plain modulo keeps draw sequences identical across standard libraries.
  auto pick = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() %
                                 static_cast<unsigned long long>(hi - lo + 1));
  };

  GameModel m;
  const int ns = pick(1, p.max_states);
  const int na = pick(1, p.max_agents);
  const int nr = pick(1, p.max_resources);
  for (int a = 0; a < na; ++a) m.agents.push_back(std::to_string(a + 1));
  for (int r = 0; r < nr; ++r)
    m.resources.push_back("r" + std::to_string(r + 1));
  for (int s = 0; s < ns; ++s) m.states.push_back("s" + std::to_string(s));

  // Indistinguishability first: action sets are drawn once per class so an
  // agent always has the same choices at states it cannot tell apart, the
  // standard well-formedness condition for imperfect-information structures.
  // Coarsen sparingly: at most one merged pair per agent keeps the uniform
  // searches small while still exercising non-identity classes.
  m.indist.assign(na, std::vector<int>(ns));
  for (int a = 0; a < na; ++a)
    for (int s = 0; s < ns; ++s) m.indist[a][s] = s;
  if (pick(0, 1) == 1 && ns >= 2) {
    for (int a = 0; a < na; ++a) {
      if (pick(0, 1) == 0) continue;
      const int i = pick(0, ns - 1);
      const int j = (i + 1 + pick(0, ns - 2)) % ns;
      m.indist[a][std::max(i, j)] = std::min(i, j);
    }
  }

  // Pool choices are drawn as pool indices, then renumbered in order of
  // first appearance so ids match what a file round trip would produce.
  const int pool = p.max_actions_per_agent;
  std::vector<std::vector<std::vector<int>>> chosen(
      ns, std::vector<std::vector<int>>(na));
  for (int s = 0; s < ns; ++s) {
    for (int a = 0; a < na; ++a) {
      if (m.indist[a][s] != s) {
        chosen[s][a] = chosen[m.indist[a][s]][a];
        continue;
      }
      const int k = pick(1, pool);
      std::vector<int>& acts = chosen[s][a];
      while (static_cast<int>(acts.size()) < k) {
        const int x = pick(0, pool - 1);
        if (std::find(acts.begin(), acts.end(), x) == acts.end())
          acts.push_back(x);
      }
      std::sort(acts.begin(), acts.end());
    }
  }
  std::vector<int> pool_to_id(pool, -1);
  m.avail.assign(ns, std::vector<std::vector<int>>(na));
  for (int s = 0; s < ns; ++s) {
    for (int a = 0; a < na; ++a) {
      for (int x : chosen[s][a]) {
        if (pool_to_id[x] < 0) {
          pool_to_id[x] = static_cast<int>(m.actions.size());
          m.actions.push_back("a" + std::to_string(x));
        }
        m.avail[s][a].push_back(pool_to_id[x]);
      }
      std::sort(m.avail[s][a].begin(), m.avail[s][a].end());
    }
  }

  const int nact = static_cast<int>(m.actions.size());
  m.cost.assign(ns, std::vector<std::optional<ResourceVector>>(nact));
  int last_s = -1, last_act = -1;
  bool any_production = false;
  for (int s = 0; s < ns; ++s) {
    std::vector<bool> used(nact, false);
    for (int a = 0; a < na; ++a)
      for (int act : m.avail[s][a]) used[act] = true;
    for (int act = 0; act < nact; ++act) {
      if (!used[act]) continue;
      ResourceVector c(nr);
      c[0] = -pick(1, p.max_cost_magnitude);
      for (int r = 1; r < nr; ++r) {
        c[r] = pick(-p.max_cost_magnitude, p.max_cost_magnitude);
        if (c[r] > 0) any_production = true;
      }
      m.cost[s][act] = std::move(c);
      last_s = s;
      last_act = act;
    }
  }
  // Keep the production path exercised whenever a second resource exists.
  if (nr >= 2 && !any_production) (*m.cost[last_s][last_act])[1] = 1;

  m.transition.assign(ns, {});
  for (int s = 0; s < ns; ++s) {
    for (const auto& tuple : full_profiles(m, s, JointAction{}))
      m.transition[s][tuple] = pick(0, ns - 1);
  }

  for (const char* name : {"p", "q"}) {
    StateSet where;
    for (int s = 0; s < ns; ++s)
      if (pick(0, 1) == 1) where.insert(s);
    m.propositions[name] = std::move(where);
  }

  return m;
}

}  // namespace rlmc
