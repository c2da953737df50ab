#pragma once

#include <optional>

#include "rlmc/formula.hpp"
#include "rlmc/model.hpp"
#include "rlmc/perfect.hpp"
#include "rlmc/search_node.hpp"

namespace rlmc {

// Equal length and statewise indistinguishable for the agent.
bool seq_indist(const GameModel& m, const std::vector<int>& states1,
                const std::vector<int>& states2, int agent);

// Root nodes the uniform searches must win from when checking `state`: one
// per state some coalition member cannot tell apart from it, deduplicated,
// in declared state order (always contains `state` itself).
NodeList initial_roots(const GameModel& m, const std::vector<int>& coalition,
                       int state, const AgentVectors& budget);

// Depth-first searches over an open list of pending branches and a closed
// set of committed ones. Branch commitments travel only through the closed
// set, so backtracking discards them naturally; on success the final closed
// set is returned so callers can audit uniformity.
std::optional<NodeList> next_search(const GameModel& m,
                                    const std::vector<int>& coalition, NodeList open,
                                    NodeList closed, const StateSet& phi, int cap,
                                    long long closed_cap, EngineStats& stats);

std::optional<NodeList> until_search(const GameModel& m,
                                     const std::vector<int>& coalition, NodeList open,
                                     NodeList closed, const StateSet& phi,
                                     const StateSet& psi, int cap,
                                     long long closed_cap, EngineStats& stats);

std::optional<NodeList> release_search(const GameModel& m,
                                       const std::vector<int>& coalition,
                                       NodeList open, NodeList closed,
                                       const StateSet& phi, const StateSet& psi,
                                       int cap, long long closed_cap,
                                       EngineStats& stats);

// Largest closed set a search from `budget` can accumulate: one entry per
// distinct state sequence up to one step past the deepest expandable node.
long long closed_size_cap(int state_count, int cap_depth);

// Bottom-up labelling with strongly uniform strategies: a modality holds at
// a state only if one strategy works from every initial state some coalition
// member confuses with it.
LabelMap label_states_uniform(const GameModel& m, const FormulaPtr& root,
                              EngineStats& stats);

}  // namespace rlmc
