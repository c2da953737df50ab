#pragma once

#include <random>
#include <string>
#include <vector>

#include "rlmc/formula.hpp"
#include "rlmc/model.hpp"
#include "rlmc/oracle.hpp"
#include "rlmc/perfect.hpp"

namespace rlmc {

// Random state formula over m's agents and the propositions p/q. Modal
// nesting is capped by modal_depth, per-resource bound entries by max_bound
// with a bias toward small amounts. `ral` switches the modalities to the
// endowment-carrying family (random opponents, down or fresh mode).
FormulaPtr random_formula(std::mt19937_64& rng, const GameModel& m,
                          int modal_depth, int max_bound, bool ral);

// Bound-carrying formula rewritten into the endowment-carrying fragment it
// coincides with: every modality gets fresh endowments (bound entries for
// members, zeros elsewhere) and no opponents.
FormulaPtr rb_to_ral(const GameModel& m, const FormulaPtr& f);

struct FuzzConfig {
  GenParams params;  // params.seed is the base seed, instance i adds i
  int count = 100;
  PerfectOptions perfect;  // fault injection hook for the mutation test
};

struct Disagreement {
  unsigned long long seed = 0;
  std::string kind;
  std::string formula;
  std::string lhs;
  std::string rhs;
};

struct FuzzReport {
  int instances = 0;
  int comparisons = 0;
  int refusals = 0;  // oracle size refusals; those comparisons are skipped
  long long depth_cap_violations = 0;
  long long closed_cap_violations = 0;
  int degenerate_violations = 0;
  std::vector<Disagreement> disagreements;
  std::vector<std::string> manifest;  // one TSV line per instance

  bool clean() const { return disagreements.empty(); }
};

// Differential run: per instance, one random model (and its identity-
// indistinguishability twin) and random formulas, compared engine vs oracle,
// imperfect vs perfect on the twin, and endowment fragment vs perfect. The
// zero-bound degenerate laws are asserted on every instance.
FuzzReport run_fuzz(const FuzzConfig& cfg);

}  // namespace rlmc
