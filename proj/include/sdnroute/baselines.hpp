#pragma once

#include <optional>
#include <vector>

#include "sdnroute/model.hpp"
#include "sdnroute/solver.hpp"

namespace sdnroute {

enum class BaselineStrategy { MDA, WSP, SWP };

enum class PathObjective {
    MinDelay,        // minimum total delay among hop/delay-feasible paths
    WidestShortest,  // minimum hop first, then maximum bottleneck residual
    ShortestWidest,  // maximum bottleneck residual first, then minimum hop
};

// Exact single-demand search over edges with residual >= demand.band,
// restricted to simple paths with hop <= hop_limit and delay <= delay_limit.
// Implemented as hop-layered label sets (Pareto over delay/bottleneck) plus a
// greedy reconstruction that returns the lexicographically smallest optimal
// node sequence (parallel-edge ties: lowest edge id). Returns nullopt when no
// feasible path exists.
std::optional<Path> constrained_path(const ResidualState& residual, const Network& net,
                                     const Demand& demand, PathObjective objective);

// Single pass over demands in input order; commits the constrained_path
// result for each demand that has one. No iteration loop.
Solution sequential_solve(const Network& net, const std::vector<Demand>& demands,
                          BaselineStrategy strategy);

enum class PathWeightKind { Delay, Hop };

// Up to k loopless paths in non-decreasing total weight (Yen-style), ties by
// lexicographic node sequence among simultaneously available candidates.
// Enumeration stops once path weights exceed max_weight; callers that filter
// by a weight bound afterwards get identical results faster. excluded_edges,
// when given, masks edges out of the search (sized edge_count).
std::vector<Path> k_shortest_paths(const Network& net, NodeId src, NodeId dst, int k,
                                   PathWeightKind weight,
                                   std::int64_t max_weight = INT64_MAX,
                                   const std::vector<char>* excluded_edges = nullptr);

// The main loop with phase 1 swapped for k-shortest-path enumeration (k =
// config.k_paths) followed by the delay/hop feasibility filter.
SolveResult kspa_solve(const Network& net, const std::vector<Demand>& demands,
                       const SolverConfig& config, PathWeightKind weight);

const char* to_string(BaselineStrategy strategy);

}  // namespace sdnroute
