#pragma once

#include <string>
#include <vector>

#include "sdnroute/model.hpp"

namespace sdnroute {

// Priority rules for the demand-sorting phase. NoSorting keeps input order.
//   Rule1: (band, 1/hop_limit) descending lexicographic
//   Rule2: (1/hop_limit, band) descending lexicographic
//   Rule3: band / hop_limit descending
//   Rule4: hop_limit * band ascending
enum class SortRule { Rule1, Rule2, Rule3, Rule4, NoSorting };

// True iff a strictly precedes b under the rule. Exact rational comparison
// (cross-multiplication), no floating division. Equal keys compare false both
// ways; order_demands settles them by demand id.
bool rule_precedes(SortRule rule, const Demand& a, const Demand& b);

// Stable, deterministic permutation: sorted by the rule, ties by ascending
// demand id. NoSorting returns the input unchanged.
std::vector<Demand> order_demands(SortRule rule, const std::vector<Demand>& demands);

const char* to_string(SortRule rule);

}  // namespace sdnroute
