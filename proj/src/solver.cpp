#include "sdnroute/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "sdnroute/rng.hpp"

namespace sdnroute {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int resolve_workers(int configured) {
    if (configured > 0) return configured;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Computes candidates for every listed demand against one snapshot; results
// land in a position-indexed vector so the merge order is fixed regardless
// of the worker count.
void run_phase1(const std::vector<Demand>& demands, const std::vector<DemandId>& unsatisfied,
                const ResidualState& snapshot, CandidateSource& source, int workers,
                std::vector<CandidateSet>& out) {
    out.assign(unsatisfied.size(), CandidateSet{});
    if (unsatisfied.empty()) return;
    int used = std::min<int>(workers, static_cast<int>(unsatisfied.size()));
    if (used <= 1) {
        for (std::size_t i = 0; i < unsatisfied.size(); ++i)
            out[i] = source.compute(demands[static_cast<std::size_t>(unsatisfied[i])], snapshot, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&](int worker) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= unsatisfied.size()) return;
            out[i] = source.compute(demands[static_cast<std::size_t>(unsatisfied[i])], snapshot, worker);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(used - 1));
    for (int w = 1; w < used; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
}

struct RunOutcome {
    Solution solution;
    IterationTrace trace;
    PhaseTimes times;
};

RunOutcome run_loop(const Network& net, const std::vector<Demand>& demands,
                    const SolverConfig& config, SortRule rule, CandidateSource& source, int workers,
                    const std::vector<CandidateSet>* first_iteration, double first_iteration_seconds) {
    RunOutcome outcome;
    ResidualState residual(net);
    std::vector<DemandId> unsatisfied;
    unsatisfied.reserve(demands.size());
    for (const Demand& d : demands) unsatisfied.push_back(d.id);

    std::vector<CandidateSet> candidates;
    std::vector<const CandidateSet*> by_demand(demands.size(), nullptr);
    Bandwidth throughput = 0;

    for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
        IterationStats stats;
        auto t0 = Clock::now();

        const std::vector<CandidateSet>* iteration_candidates;
        if (iteration == 1 && first_iteration != nullptr) {
            iteration_candidates = first_iteration;
            stats.phase1_seconds = first_iteration_seconds;
        } else {
            run_phase1(demands, unsatisfied, residual, source, workers, candidates);
            iteration_candidates = &candidates;
            stats.phase1_seconds = seconds_since(t0);
        }
        for (std::size_t i = 0; i < unsatisfied.size(); ++i)
            by_demand[static_cast<std::size_t>(unsatisfied[i])] = &(*iteration_candidates)[i];

        auto t1 = Clock::now();
        std::vector<Demand> pending;
        pending.reserve(unsatisfied.size());
        for (DemandId d : unsatisfied) pending.push_back(demands[static_cast<std::size_t>(d)]);
        std::vector<Demand> ordered = order_demands(rule, pending);
        stats.phase2_seconds = seconds_since(t1);

        auto t2 = Clock::now();
        for (const Demand& demand : ordered) {
            const CandidateSet& cs = *by_demand[static_cast<std::size_t>(demand.id)];
            RankedCandidates ranked =
                config.selection == SelectionStrategy::Weight
                    ? select_and_rank(residual, demand, cs, config.exact_weights)
                    : alt_select(residual, demand, cs, config.selection,
                                 mix_seed(config.seed, mix_seed(static_cast<std::uint64_t>(demand.id),
                                                                static_cast<std::uint64_t>(iteration))));
            if (ranked.paths.empty()) continue;
            const Path& chosen = ranked.paths.front().first;
            commit_path(residual, demand, chosen);
            outcome.solution.assignment[demand.id] = chosen;
            throughput += demand.band;
            ++stats.newly_satisfied;
        }
        stats.phase3_seconds = seconds_since(t2);
        stats.cumulative_throughput = throughput;

        outcome.times.phase1 += iteration == 1 && first_iteration != nullptr ? 0.0 : stats.phase1_seconds;
        outcome.times.phase2 += stats.phase2_seconds;
        outcome.times.phase3 += stats.phase3_seconds;
        outcome.trace.iterations.push_back(stats);

        std::vector<DemandId> still;
        still.reserve(unsatisfied.size());
        for (DemandId d : unsatisfied)
            if (!outcome.solution.assignment.count(d)) still.push_back(d);
        unsatisfied.swap(still);

        if (stats.newly_satisfied == 0 || unsatisfied.empty()) break;
        if (iteration == config.max_iterations) outcome.trace.hit_iteration_cap = true;
    }

    for (DemandId d : unsatisfied) outcome.solution.unsatisfied.insert(d);
    outcome.solution.throughput = throughput;
    return outcome;
}

}  // namespace

SortRule to_sort_rule(RuleChoice choice) {
    switch (choice) {
        case RuleChoice::Rule1: return SortRule::Rule1;
        case RuleChoice::Rule2: return SortRule::Rule2;
        case RuleChoice::Rule3: return SortRule::Rule3;
        case RuleChoice::Rule4: return SortRule::Rule4;
        case RuleChoice::NoSorting: return SortRule::NoSorting;
        case RuleChoice::All: break;
    }
    throw InvalidInstanceError("RuleChoice::All has no single sort rule");
}

const char* to_string(RuleChoice choice) {
    switch (choice) {
        case RuleChoice::Rule1: return "rule1";
        case RuleChoice::Rule2: return "rule2";
        case RuleChoice::Rule3: return "rule3";
        case RuleChoice::Rule4: return "rule4";
        case RuleChoice::NoSorting: return "none";
        case RuleChoice::All: return "all";
    }
    return "?";
}

void commit_path(ResidualState& residual, const Demand& demand, const Path& path) {
    for (EdgeId e : path.edges) {
        if (residual.residual(e) < demand.band)
            throw InsufficientResidualError("commit_path: edge " + std::to_string(e) +
                                            " cannot take band " + std::to_string(demand.band));
    }
    for (EdgeId e : path.edges) residual.set_residual(e, residual.residual(e) - demand.band);
}

SolveResult solve_with_source(const Network& net, const std::vector<Demand>& demands,
                              const SolverConfig& config, CandidateSource& source) {
    validate_demands(net, demands);
    if (config.k_paths < 1) throw InvalidInstanceError("k_paths must be >= 1");
    if (config.max_iterations < 1) throw InvalidInstanceError("max_iterations must be >= 1");

    int workers = resolve_workers(config.workers);
    source.prepare(workers);
    auto t0 = Clock::now();

    SolveResult result;
    if (config.rule != RuleChoice::All) {
        RunOutcome outcome =
            run_loop(net, demands, config, to_sort_rule(config.rule), source, workers, nullptr, 0.0);
        result.solution = std::move(outcome.solution);
        result.trace = std::move(outcome.trace);
        result.times = outcome.times;
        result.rule_used = to_sort_rule(config.rule);
    } else {
        // The first iteration sees identical inputs under every rule; compute
        // those candidates once and share them across the four runs.
        std::vector<DemandId> all_ids;
        all_ids.reserve(demands.size());
        for (const Demand& d : demands) all_ids.push_back(d.id);
        ResidualState fresh(net);
        std::vector<CandidateSet> shared;
        auto ts = Clock::now();
        run_phase1(demands, all_ids, fresh, source, workers, shared);
        double shared_seconds = seconds_since(ts);
        result.times.phase1 += shared_seconds;

        const SortRule rules[] = {SortRule::Rule1, SortRule::Rule2, SortRule::Rule3, SortRule::Rule4};
        bool have_best = false;
        for (SortRule rule : rules) {
            RunOutcome outcome =
                run_loop(net, demands, config, rule, source, workers, &shared, shared_seconds);
            result.times.phase1 += outcome.times.phase1;
            result.times.phase2 += outcome.times.phase2;
            result.times.phase3 += outcome.times.phase3;
            if (!have_best || outcome.solution.throughput > result.solution.throughput) {
                have_best = true;
                result.solution = std::move(outcome.solution);
                result.trace = std::move(outcome.trace);
                result.rule_used = rule;
            }
        }
    }
    result.times.total = seconds_since(t0);
    return result;
}

SolveResult solve(const Network& net, const std::vector<Demand>& demands, const SolverConfig& config) {
    BfsCandidateSource source(net, config.k_paths, config.prune_saturated);
    return solve_with_source(net, demands, config, source);
}

namespace {

// All simple locally feasible paths for one demand, DFS over edges in
// ascending id order, guarded by the shared budget.
void enumerate_feasible(const Network& net, const Demand& demand, std::size_t& budget,
                        std::vector<Path>& out) {
    std::vector<char> on_path(static_cast<std::size_t>(net.node_count()), 0);
    Path current;
    current.nodes.push_back(demand.src);
    on_path[static_cast<std::size_t>(demand.src)] = 1;

    auto dfs = [&](auto&& self, NodeId u) -> void {
        if (u == demand.dst && !current.edges.empty()) {
            if (out.size() >= budget)
                throw TooLargeError("brute_force_optimum: feasible path budget exhausted");
            out.push_back(current);
            return;  // longer extensions would revisit dst
        }
        if (current.hop() >= demand.hop_limit) return;
        for (EdgeId eid : net.out_edges(u)) {
            const Edge& e = net.edge(eid);
            if (on_path[static_cast<std::size_t>(e.dst)]) continue;
            if (current.total_delay + e.delay > demand.delay_limit) continue;
            current.edges.push_back(eid);
            current.nodes.push_back(e.dst);
            current.total_delay += e.delay;
            on_path[static_cast<std::size_t>(e.dst)] = 1;
            self(self, e.dst);
            on_path[static_cast<std::size_t>(e.dst)] = 0;
            current.total_delay -= e.delay;
            current.nodes.pop_back();
            current.edges.pop_back();
        }
    };
    dfs(dfs, demand.src);

    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        if (a.hop() != b.hop()) return a.hop() < b.hop();
        if (a.total_delay != b.total_delay) return a.total_delay < b.total_delay;
        return a.edges < b.edges;
    });
    budget -= out.size();
}

}  // namespace

Solution brute_force_optimum(const Network& net, const std::vector<Demand>& demands,
                             std::size_t max_total_paths) {
    validate_demands(net, demands);

    std::vector<std::vector<Path>> options(demands.size());
    std::size_t budget = max_total_paths;
    for (std::size_t i = 0; i < demands.size(); ++i)
        enumerate_feasible(net, demands[i], budget, options[i]);

    std::vector<Bandwidth> load(net.edges().size(), 0);
    std::vector<int> choice(demands.size(), -1);  // index into options, -1 = unassigned
    std::vector<int> best_choice = choice;
    Bandwidth best = -1;

    std::vector<Bandwidth> suffix_band(demands.size() + 1, 0);
    for (std::size_t i = demands.size(); i-- > 0;)
        suffix_band[i] = suffix_band[i + 1] + demands[i].band;

    std::uint64_t search_budget = 10'000'000;

    auto dfs = [&](auto&& self, std::size_t i, Bandwidth current) -> void {
        if (search_budget-- == 0) throw TooLargeError("brute_force_optimum: search budget exhausted");
        if (i == demands.size()) {
            if (current > best) {
                best = current;
                best_choice = choice;
            }
            return;
        }
        if (current + suffix_band[i] <= best) return;  // ties keep the earlier (lexicographic) find
        const Demand& demand = demands[i];
        for (std::size_t j = 0; j < options[i].size(); ++j) {
            const Path& p = options[i][j];
            bool fits = true;
            for (EdgeId e : p.edges) {
                if (load[static_cast<std::size_t>(e)] + demand.band >
                    net.edge(e).capacity) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            for (EdgeId e : p.edges) load[static_cast<std::size_t>(e)] += demand.band;
            choice[i] = static_cast<int>(j);
            self(self, i + 1, current + demand.band);
            choice[i] = -1;
            for (EdgeId e : p.edges) load[static_cast<std::size_t>(e)] -= demand.band;
        }
        self(self, i + 1, current);
    };
    dfs(dfs, 0, 0);

    Solution solution;
    for (std::size_t i = 0; i < demands.size(); ++i) {
        if (best_choice[i] >= 0) {
            solution.assignment[demands[i].id] = options[i][static_cast<std::size_t>(best_choice[i])];
            solution.throughput += demands[i].band;
        } else {
            solution.unsatisfied.insert(demands[i].id);
        }
    }
    return solution;
}

}  // namespace sdnroute
