#include "rlmc/fuzz.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "rlmc/imperfect.hpp"
#include "rlmc/ral.hpp"

namespace rlmc {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() %
                               static_cast<unsigned long long>(hi - lo + 1));
}

// Small amounts dominate so searches stay shallow: weights 1:3:2:1 for
// 0,1,2,3, clipped to the configured maximum.
int small_amount(std::mt19937_64& rng, int max_bound) {
  static const int kWeighted[] = {0, 1, 1, 1, 2, 2, 3};
  const int v = kWeighted[pick(rng, 0, 6)];
  return std::min(v, max_bound);
}

ResourceVector small_vector(std::mt19937_64& rng, int nr, int max_bound) {
  ResourceVector v(nr);
  for (int r = 0; r < nr; ++r) v[r] = small_amount(rng, max_bound);
  return v;
}

std::vector<std::string> random_coalition(std::mt19937_64& rng,
                                          const GameModel& m,
                                          bool allow_empty) {
  std::vector<std::string> out;
  for (const auto& name : m.agents)
    if (pick(rng, 0, 1) == 1) out.push_back(name);
  if (out.empty() && !allow_empty)
    out.push_back(m.agents[pick(rng, 0, m.agent_count() - 1)]);
  return out;
}

FormulaPtr gen_any(std::mt19937_64& rng, const GameModel& m, int bool_depth,
                   int modal_budget, int max_bound, bool ral);

FormulaPtr gen_modal(std::mt19937_64& rng, const GameModel& m, int bool_depth,
                     int modal_budget, int max_bound, bool ral) {
  const std::vector<std::string> coal = random_coalition(rng, m, false);
  const int nr = m.resource_count();
  const int body = pick(rng, 0, 2);  // 0 next, 1 until, 2 release
  auto sub = [&] {
    return gen_any(rng, m, bool_depth, modal_budget, max_bound, ral);
  };
  if (!ral) {
    std::map<std::string, ResourceVector> bound;
    for (const auto& a : coal) bound[a] = small_vector(rng, nr, max_bound);
    if (body == 0) return f_next(coal, bound, sub());
    FormulaPtr lhs = sub(), rhs = sub();
    return body == 1 ? f_until(coal, bound, lhs, rhs)
                     : f_release(coal, bound, lhs, rhs);
  }
  const std::vector<std::string> opp = random_coalition(rng, m, true);
  const RalMode mode = pick(rng, 0, 1) == 0 ? RalMode::Down : RalMode::Fresh;
  std::map<std::string, ResourceVector> endw;
  if (mode == RalMode::Fresh) {
    for (const auto& a : m.agents) endw[a] = small_vector(rng, nr, max_bound);
  }
  if (body == 0) return f_ral_next(coal, opp, mode, endw, sub());
  FormulaPtr lhs = sub(), rhs = sub();
  return body == 1 ? f_ral_until(coal, opp, mode, endw, lhs, rhs)
                   : f_ral_release(coal, opp, mode, endw, lhs, rhs);
}

FormulaPtr gen_leaf(std::mt19937_64& rng) {
  switch (pick(rng, 0, 7)) {
    case 0:
      return f_true();
    case 1:
      return f_false();
    case 2:
    case 3:
    case 4:
      return f_prop("p");
    default:
      return f_prop("q");
  }
}

FormulaPtr gen_any(std::mt19937_64& rng, const GameModel& m, int bool_depth,
                   int modal_budget, int max_bound, bool ral) {
  if (bool_depth <= 0) return gen_leaf(rng);
  const int roll = pick(rng, 0, 7);
  if (roll >= 5 && modal_budget > 0)
    return gen_modal(rng, m, bool_depth - 1, modal_budget - 1, max_bound, ral);
  if (roll <= 2 || modal_budget <= 0) {
    switch (roll % 3) {
      case 0:
        return gen_leaf(rng);
      case 1:
        return f_not(gen_any(rng, m, bool_depth - 1, modal_budget, max_bound,
                             ral));
      default:
        return f_and(
            gen_any(rng, m, bool_depth - 1, modal_budget, max_bound, ral),
            gen_any(rng, m, bool_depth - 1, modal_budget, max_bound, ral));
    }
  }
  if (roll == 3)
    return f_or(gen_any(rng, m, bool_depth - 1, modal_budget, max_bound, ral),
                gen_any(rng, m, bool_depth - 1, modal_budget, max_bound, ral));
  return gen_leaf(rng);
}

std::string names(const GameModel& m, const StateSet& set) {
  std::string out = "{";
  bool first = true;
  for (int s : set) {
    if (!first) out += ",";
    out += m.states[s];
    first = false;
  }
  return out + "}";
}

AgentVectors zero_endowment(const GameModel& m) {
  return AgentVectors(m.agent_count(), ResourceVector(m.resource_count(), 0));
}

}  // namespace

FormulaPtr random_formula(std::mt19937_64& rng, const GameModel& m,
                          int modal_depth, int max_bound, bool ral) {
  return gen_modal(rng, m, 2, modal_depth - 1, max_bound, ral);
}

FormulaPtr rb_to_ral(const GameModel& m, const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::True:
      return f_true();
    case FormulaKind::False:
      return f_false();
    case FormulaKind::Prop:
      return f_prop(f->prop);
    case FormulaKind::Not:
      return f_not(rb_to_ral(m, f->children[0]));
    case FormulaKind::And:
      return f_and(rb_to_ral(m, f->children[0]), rb_to_ral(m, f->children[1]));
    case FormulaKind::Or:
      return f_or(rb_to_ral(m, f->children[0]), rb_to_ral(m, f->children[1]));
    case FormulaKind::Next:
    case FormulaKind::Until:
    case FormulaKind::Release: {
      std::map<std::string, ResourceVector> endw;
      for (const auto& name : m.agents) {
        auto it = f->bound.find(name);
        endw[name] = it != f->bound.end()
                         ? it->second
                         : ResourceVector(m.resource_count(), 0);
      }
      if (f->kind == FormulaKind::Next)
        return f_ral_next(f->coalition, {}, RalMode::Fresh, endw,
                          rb_to_ral(m, f->children[0]));
      FormulaPtr lhs = rb_to_ral(m, f->children[0]);
      FormulaPtr rhs = rb_to_ral(m, f->children[1]);
      return f->kind == FormulaKind::Until
                 ? f_ral_until(f->coalition, {}, RalMode::Fresh, endw, lhs,
                               rhs)
                 : f_ral_release(f->coalition, {}, RalMode::Fresh, endw, lhs,
                                 rhs);
    }
    default:
      throw std::invalid_argument(
          "only bound-carrying formulas have a fragment translation");
  }
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  FuzzReport report;
  for (int i = 0; i < cfg.count; ++i) {
    GenParams ip = cfg.params;
    ip.seed = cfg.params.seed + static_cast<unsigned long long>(i);
    const GameModel m = random_model(ip);
    GameModel mid = m;  // identity-indistinguishability twin
    for (auto& per_agent : mid.indist)
      for (int s = 0; s < mid.state_count(); ++s) per_agent[s] = s;

    std::mt19937_64 frng(ip.seed * 0x9e3779b97f4a7c15ULL + 1);
    const FormulaPtr frb = random_formula(frng, m, 2, cfg.params.max_bound,
                                          false);
    const FormulaPtr fral = random_formula(frng, m, 2, cfg.params.max_bound,
                                           true);
    const FormulaPtr frag = rb_to_ral(m, frb);
    const AgentVectors eta =
        [&] {
          AgentVectors e;
          for (int a = 0; a < m.agent_count(); ++a)
            e.push_back(small_vector(frng, m.resource_count(),
                                     cfg.params.max_bound));
          return e;
        }();
    const AgentVectors zeros = zero_endowment(m);

    EngineStats est;
    const StateSet perfect_rb =
        label_states(m, frb, est, cfg.perfect).root();
    const StateSet uniform_rb = label_states_uniform(m, frb, est).root();
    const StateSet uniform_id = label_states_uniform(mid, frb, est).root();
    const StateSet perfect_id =
        label_states(mid, frb, est, cfg.perfect).root();
    const StateSet ral_frag = ral_check(m, frag, zeros, est);
    const StateSet ral_gen = ral_check(m, fral, eta, est);

    auto oracle_try = [&](auto&& fn) -> std::optional<StateSet> {
      try {
        return fn();
      } catch (const OracleTooLarge&) {
        ++report.refusals;
        return std::nullopt;
      }
    };
    OracleStats ost;
    const auto o_rb = oracle_try([&] { return oracle_states(m, frb, ost); });
    const auto o_uni =
        oracle_try([&] { return oracle_states_uniform(m, frb, ost); });
    const auto o_frag =
        oracle_try([&] { return oracle_states_ral(m, frag, zeros, ost); });
    const auto o_gen =
        oracle_try([&] { return oracle_states_ral(m, fral, eta, ost); });

    auto compare = [&](const std::string& kind, const FormulaPtr& f,
                       const StateSet& lhs, const StateSet& rhs) {
      ++report.comparisons;
      if (lhs != rhs)
        report.disagreements.push_back({ip.seed, kind, to_text(f),
                                        names(m, lhs), names(m, rhs)});
    };
    if (o_rb) compare("perfect-vs-oracle", frb, perfect_rb, *o_rb);
    if (o_uni) compare("imperfect-vs-oracle", frb, uniform_rb, *o_uni);
    compare("identity-reduction", frb, uniform_id, perfect_id);
    compare("fragment-equivalence", frag, ral_frag, perfect_rb);
    if (o_frag) compare("ral-vs-oracle-fragment", frag, ral_frag, *o_frag);
    if (o_gen) compare("ral-vs-oracle", fral, ral_gen, *o_gen);

    // Zero-bound laws, asserted on every instance: no affordable first step
    // means Next never holds and Release degenerates to its right operand.
    {
      std::map<std::string, ResourceVector> zero_bound;
      for (const auto& a : frb->coalition)
        zero_bound[a] = ResourceVector(m.resource_count(), 0);
      const FormulaPtr dz_next =
          f_next(frb->coalition, zero_bound, f_prop("p"));
      const FormulaPtr dz_rel =
          f_release(frb->coalition, zero_bound, f_prop("p"), f_prop("q"));
      const StateSet got_next =
          label_states(m, dz_next, est, cfg.perfect).root();
      const StateSet got_rel =
          label_states(m, dz_rel, est, cfg.perfect).root();
      if (!got_next.empty()) {
        ++report.degenerate_violations;
        report.disagreements.push_back({ip.seed, "degenerate-next",
                                        to_text(dz_next), names(m, got_next),
                                        "{}"});
      }
      if (got_rel != m.propositions.at("q")) {
        ++report.degenerate_violations;
        report.disagreements.push_back(
            {ip.seed, "degenerate-release", to_text(dz_rel), names(m, got_rel),
             names(m, m.propositions.at("q"))});
      }
    }

    report.depth_cap_violations += est.depth_cap_violations;
    report.closed_cap_violations += est.closed_cap_violations;

    std::ostringstream line;
    line << ip.seed << '\t' << "states=" << m.state_count()
         << ",agents=" << m.agent_count()
         << ",resources=" << m.resource_count() << '\t' << to_text(frb)
         << '\t' << "perfect=" << names(m, perfect_rb)
         << "\timperfect=" << names(m, uniform_rb)
         << "\toracle=" << (o_rb ? names(m, *o_rb) : "refused")
         << "\toracle_imperfect=" << (o_uni ? names(m, *o_uni) : "refused")
         << '\t' << to_text(fral) << '\t' << "ral=" << names(m, ral_gen)
         << "\toracle_ral=" << (o_gen ? names(m, *o_gen) : "refused");
    report.manifest.push_back(line.str());
    ++report.instances;
  }
  return report;
}

}  // namespace rlmc
