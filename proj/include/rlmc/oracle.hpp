#pragma once

#include <stdexcept>

#include "rlmc/formula.hpp"
#include "rlmc/model.hpp"

namespace rlmc {

// Parameters for the seeded random-model generator. Identical params and
// seed always produce the identical model.
struct GenParams {
  unsigned long long seed = 1;
  int max_states = 4;
  int max_agents = 2;
  int max_actions_per_agent = 2;
  int max_resources = 2;
  int max_cost_magnitude = 2;
  int max_bound = 3;
};

// Deterministic random model: non-empty action sets, total transition
// function, first cost component in [-max_cost_magnitude, -1], other
// components in [-max_cost_magnitude, max_cost_magnitude], optional coarse
// indistinguishability partitions. Always passes validate_model cleanly.
GameModel random_model(const GenParams& p);

// Enumeration refusal threshold: queries whose strategy-tree count estimate
// exceeds this are rejected instead of running unbounded.
inline constexpr long long kOracleGuard = 10'000'000;

class OracleTooLarge : public std::runtime_error {
 public:
  explicit OracleTooLarge(long long estimate);
  long long estimate;
};

struct OracleStats {
  long long trees_enumerated = 0;
  int max_depth = 0;
};

// Ground-truth evaluators. Each modality is decided by enumerating every
// strategy tree over the resource-reachable histories and replaying all
// maximal computations of each tree against the path condition. Subformulas
// are decided by recursive re-evaluation, never by sharing engine labels.
bool holds_semantics(const GameModel& m, int state, const FormulaPtr& f,
                     OracleStats& stats);
bool holds_semantics_uniform(const GameModel& m, int state,
                             const FormulaPtr& f, OracleStats& stats);
bool holds_semantics_ral(const GameModel& m, int state,
                         const AgentVectors& endowment, const FormulaPtr& f,
                         OracleStats& stats);

// All states where f holds, per family. One memo is shared across the
// state loop; verdicts are independent of the visiting order.
StateSet oracle_states(const GameModel& m, const FormulaPtr& f,
                       OracleStats& stats);
StateSet oracle_states_uniform(const GameModel& m, const FormulaPtr& f,
                               OracleStats& stats);
StateSet oracle_states_ral(const GameModel& m, const FormulaPtr& f,
                           const AgentVectors& endowment, OracleStats& stats);

}  // namespace rlmc
