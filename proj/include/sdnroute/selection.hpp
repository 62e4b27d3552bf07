#pragma once

#include <cstdint>
#include <vector>

#include "sdnroute/model.hpp"
#include "sdnroute/path_computing.hpp"

namespace sdnroute {

enum class SelectionStrategy { Weight, MinHop, MinDelay, Random };

struct RankedCandidates {
    DemandId demand = -1;
    std::vector<std::pair<Path, double>> paths;  // (path, weight)
};

// w(p) = sum over path edges of 1 / residual(e).
// Throws ZeroResidualError on a saturated edge (contract violation: callers
// filter on bandwidth first, and band > 0 keeps surviving residuals positive).
double path_weight(const ResidualState& residual, const Path& path);

// Drops every path crossing an edge with residual < demand.band, weights the
// survivors, and sorts by weight ascending. Ties are resolved structurally by
// (hop, total delay, candidate position), so float rounding cannot change the
// output across platforms. exact_weights switches the weight comparison to
// exact rational arithmetic for verification runs.
RankedCandidates select_and_rank(const ResidualState& residual, const Demand& demand,
                                 const CandidateSet& candidates, bool exact_weights = false);

// Same bandwidth filter, alternative ranking: MinHop (ties: delay, position),
// MinDelay (ties: hop, position), or Random (seeded uniform shuffle).
RankedCandidates alt_select(const ResidualState& residual, const Demand& demand,
                            const CandidateSet& candidates, SelectionStrategy strategy,
                            std::uint64_t seed = 0);

// Exact comparison of sum(1/a_i) vs sum(1/b_i) for positive integers.
// Returns -1, 0, or 1.
int compare_reciprocal_sums(const std::vector<Bandwidth>& a, const std::vector<Bandwidth>& b);

const char* to_string(SelectionStrategy strategy);

}  // namespace sdnroute
