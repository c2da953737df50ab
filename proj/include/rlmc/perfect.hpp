#pragma once

#include <map>
#include <string>
#include <vector>

#include "rlmc/formula.hpp"
#include "rlmc/model.hpp"
#include "rlmc/search_node.hpp"

namespace rlmc {

// Satisfying states per subformula, keyed by canonical text. `order` lists
// the texts bottom-up (root last).
struct LabelMap {
  std::vector<std::string> order;
  std::map<std::string, StateSet> sets;

  const StateSet& of(const std::string& text) const { return sets.at(text); }
  const StateSet& root() const { return sets.at(order.back()); }
};

struct PerfectOptions {
  // Fault-injection point used by the differential harness to prove it
  // catches a broken Release run-out branch. Always true in real checking.
  bool release_runout = true;
};

// Bottom-up labelling under perfect information. The formula must be free of
// endowment-carrying modalities and valid for the model.
LabelMap label_states(const GameModel& m, const FormulaPtr& root, EngineStats& stats,
                      const PerfectOptions& opts = {});

// Strategy searches for a single modality, exposed for direct testing.
// `budget`/`phi`/`psi` are aligned with the coalition and the labelling of
// the operands; `cap` is the depth the search may not exceed.
bool until_strategy(const GameModel& m, const std::vector<int>& coalition,
                    const SearchNodePtr& node, const StateSet& phi,
                    const StateSet& psi, int cap, EngineStats& stats);

bool release_strategy(const GameModel& m, const std::vector<int>& coalition,
                      const SearchNodePtr& node, const StateSet& phi,
                      const StateSet& psi, int cap, EngineStats& stats,
                      const PerfectOptions& opts = {});

// Longest history a search rooted with `budget` may expand: the smallest
// first-resource budget across the coalition plus one.
int depth_cap(const AgentVectors& budget);

}  // namespace rlmc
