#pragma once

#include <cstdint>
#include <vector>

#include "sdnroute/model.hpp"
#include "sdnroute/ordering.hpp"
#include "sdnroute/path_computing.hpp"
#include "sdnroute/selection.hpp"

namespace sdnroute {

// Sorting rule choice for a solve run; All runs the loop once per rule and
// keeps the best-throughput solution (ties: lowest rule number).
enum class RuleChoice { Rule1, Rule2, Rule3, Rule4, NoSorting, All };

SortRule to_sort_rule(RuleChoice choice);  // throws on All
const char* to_string(RuleChoice choice);

struct SolverConfig {
    int k_paths = 128;                                         // candidate cap per demand
    RuleChoice rule = RuleChoice::All;
    SelectionStrategy selection = SelectionStrategy::Weight;
    int workers = 0;                                           // 0 = hardware concurrency
    std::uint64_t seed = 0;                                    // random selection strategy
    int max_iterations = 64;                                   // safety cap
    // Phase-1 searches skip edges whose residual cannot carry the demand, so
    // later iterations reroute around saturation. With this off the candidate
    // sets never change and iterations past the first cannot satisfy anyone.
    bool prune_saturated = true;
    bool exact_weights = false;  // rational weight comparison (verification runs)
};

struct IterationStats {
    int newly_satisfied = 0;
    Bandwidth cumulative_throughput = 0;
    double phase1_seconds = 0;
    double phase2_seconds = 0;
    double phase3_seconds = 0;
};

struct IterationTrace {
    std::vector<IterationStats> iterations;
    bool hit_iteration_cap = false;
};

struct PhaseTimes {
    double phase1 = 0;
    double phase2 = 0;
    double phase3 = 0;
    double total = 0;
};

struct SolveResult {
    Solution solution;
    IterationTrace trace;   // the winning run when rule == All
    SortRule rule_used = SortRule::Rule1;
    // Wall time across the whole call. With rule == All the shared first
    // iteration of phase 1 is counted once.
    PhaseTimes times;
    int iterations() const { return static_cast<int>(trace.iterations.size()); }
};

// Phase-1 candidate generator. compute() may be called concurrently with
// distinct worker indices against an immutable residual snapshot.
class CandidateSource {
public:
    virtual ~CandidateSource() = default;
    virtual void prepare(int workers) = 0;
    virtual CandidateSet compute(const Demand& demand, const ResidualState& snapshot, int worker) = 0;
};

// Bidirectional-BFS candidate source (the standard phase 1).
class BfsCandidateSource : public CandidateSource {
public:
    BfsCandidateSource(const Network& net, int k_paths, bool prune_saturated)
        : net_(net), k_paths_(k_paths), prune_(prune_saturated) {}
    void prepare(int workers) override { scratch_.resize(static_cast<std::size_t>(workers)); }
    CandidateSet compute(const Demand& demand, const ResidualState& snapshot, int worker) override {
        return compute_candidates(net_, demand, k_paths_, scratch_[static_cast<std::size_t>(worker)],
                                  prune_ ? &snapshot : nullptr);
    }

private:
    const Network& net_;
    int k_paths_;
    bool prune_;
    std::vector<CandidateScratch> scratch_;
};

// Subtracts demand.band along the path. Throws InsufficientResidualError if
// any edge cannot take it (the selector's bandwidth filter prevents this).
void commit_path(ResidualState& residual, const Demand& demand, const Path& path);

// The iterative three-phase loop. Per iteration: candidates for all
// unsatisfied demands against the iteration-start residual snapshot
// (parallel, merged in demand order), demand sorting, then sequential
// select-and-commit on the live residual. Stops when an iteration satisfies
// nothing (or the safety cap trips). rule == All reuses the first-iteration
// candidate sets across the four runs.
SolveResult solve(const Network& net, const std::vector<Demand>& demands, const SolverConfig& config);
SolveResult solve_with_source(const Network& net, const std::vector<Demand>& demands,
                              const SolverConfig& config, CandidateSource& source);

// Exhaustive tiny-instance oracle: enumerates every locally feasible simple
// path per demand, then every capacity-respecting assignment combination.
// Guarded: throws TooLargeError beyond max_total_paths enumerated paths (or
// the internal search budget). Deterministic tie-break: demands in id order,
// each demand's paths in (hop, delay, edge sequence) order, first maximum
// found wins.
Solution brute_force_optimum(const Network& net, const std::vector<Demand>& demands,
                             std::size_t max_total_paths = 10000);

}  // namespace sdnroute
