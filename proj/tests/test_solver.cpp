#include <doctest.h>

#include "sdnroute/solver.hpp"
#include "support/test_util.hpp"

using namespace sdnroute;
using namespace testutil;

TEST_CASE("commit_path subtracts exactly along the path") {
    Network net = make_network(3, {{0, 1, 10, 5}, {1, 2, 7, 5}, {0, 2, 9, 5}});
    ResidualState residual(net);
    Demand d = make_demand(0, 0, 2, 7, 100, 2);
    commit_path(residual, d, make_path(net, {0, 1}));
    CHECK(residual.residual(0) == 3);
    CHECK(residual.residual(1) == 0);
    CHECK(residual.residual(2) == 9);  // untouched

    // Bookkeeping identity: committed band per edge == capacity - residual.
    CHECK(net.edge(0).capacity - residual.residual(0) == 7);
    CHECK(net.edge(1).capacity - residual.residual(1) == 7);

    CHECK_THROWS_AS(commit_path(residual, d, make_path(net, {0, 1})), InsufficientResidualError);
}

TEST_CASE("solve satisfies a single feasible demand in one iteration") {
    Network net = make_network(3, {{0, 1, 10, 5}, {1, 2, 10, 5}});
    std::vector<Demand> demands{make_demand(0, 0, 2, 10, 20, 2)};
    SolverConfig config;
    config.rule = RuleChoice::Rule1;
    SolveResult r = solve(net, demands, config);
    CHECK(r.solution.throughput == 10);
    CHECK(r.solution.unsatisfied.empty());
    REQUIRE(r.trace.iterations.size() >= 1);
    CHECK(r.trace.iterations[0].newly_satisfied == 1);
    CHECK(verify_solution(net, demands, r.solution).valid());
}

TEST_CASE("rule 1 prefers the larger demand on a shared bottleneck") {
    Network net = make_network(2, {{0, 1, 5000, 5}});
    std::vector<Demand> demands{make_demand(0, 0, 1, 3000, 10, 1), make_demand(1, 0, 1, 5000, 10, 1)};
    SolverConfig config;
    config.rule = RuleChoice::Rule1;
    SolveResult r = solve(net, demands, config);
    CHECK(r.solution.throughput == 5000);
    CHECK(r.solution.assignment.count(1) == 1);
    CHECK(r.solution.unsatisfied == std::set<DemandId>{0});

    Solution optimum = brute_force_optimum(net, demands);
    CHECK(optimum.throughput == 5000);
}

TEST_CASE("empty demand set") {
    Network net = make_network(2, {{0, 1, 10, 5}});
    SolverConfig config;
    SolveResult r = solve(net, {}, config);
    CHECK(r.solution.throughput == 0);
    CHECK(r.solution.assignment.empty());

    Solution optimum = brute_force_optimum(net, {});
    CHECK(optimum.throughput == 0);
}

TEST_CASE("brute force on the shared-edge instance checks all four combinations") {
    Network net = make_network(2, {{0, 1, 5000, 5}});
    std::vector<Demand> demands{make_demand(0, 0, 1, 3000, 10, 1), make_demand(1, 0, 1, 5000, 10, 1)};
    Solution optimum = brute_force_optimum(net, demands);
    CHECK(optimum.throughput == 5000);
    CHECK(verify_solution(net, demands, optimum).valid());
}

TEST_CASE("brute force refuses oversized instances") {
    // Dense-ish graph with a generous hop limit: path count explodes past the guard.
    std::vector<EdgeSpec> specs;
    for (NodeId u = 0; u < 8; ++u)
        for (NodeId v = 0; v < 8; ++v)
            if (u != v) specs.push_back({u, v, 10, 1});
    Network net = make_network(8, specs);
    std::vector<Demand> demands{make_demand(0, 0, 7, 1, 1000, 7)};
    CHECK_THROWS_AS(brute_force_optimum(net, demands, 100), TooLargeError);
}

TEST_CASE("brute force equals the independent enumerator's best on fixed instances") {
    // Two demands fighting over a middle edge plus a detour.
    Network net = make_network(4, {{0, 1, 10, 2}, {1, 3, 6, 2}, {0, 2, 6, 3}, {2, 3, 6, 3}, {0, 3, 4, 9}});
    std::vector<Demand> demands{make_demand(0, 0, 3, 6, 10, 2), make_demand(1, 0, 3, 4, 10, 2)};
    Solution optimum = brute_force_optimum(net, demands);
    CHECK(verify_solution(net, demands, optimum).valid());
    CHECK(optimum.throughput == 10);  // 6 via one route, 4 via another
}

TEST_CASE("solve output verifies and respects the oracle bound on random tiny instances") {
    Rng rng(60601);
    int optimal_hits = 0, instances = 0;
    for (int iter = 0; iter < 60; ++iter) {
        Instance inst = random_tiny_instance(rng);
        SolverConfig config;
        config.rule = RuleChoice::All;
        SolveResult r = solve(inst.network, inst.demands, config);
        CHECK(verify_solution(inst.network, inst.demands, r.solution).valid());
        Solution optimum = brute_force_optimum(inst.network, inst.demands);
        CHECK(verify_solution(inst.network, inst.demands, optimum).valid());
        CHECK(r.solution.throughput <= optimum.throughput);
        ++instances;
        if (r.solution.throughput == optimum.throughput) ++optimal_hits;
    }
    CHECK(optimal_hits > instances / 2);
}

TEST_CASE("trace invariants: monotone throughput, counted iterations") {
    Rng rng(8080);
    for (int iter = 0; iter < 40; ++iter) {
        Instance inst = random_tiny_instance(rng);
        SolverConfig config;
        config.rule = RuleChoice::Rule2;
        SolveResult r = solve(inst.network, inst.demands, config);
        Bandwidth prev = 0;
        for (const IterationStats& s : r.trace.iterations) {
            CHECK(s.cumulative_throughput >= prev);
            prev = s.cumulative_throughput;
        }
        CHECK(r.iterations() <= static_cast<int>(inst.demands.size()) + 1);
        CHECK_FALSE(r.trace.hit_iteration_cap);
        CHECK(prev == r.solution.throughput);
    }
}

TEST_CASE("solutions are identical for any worker count") {
    Rng rng(11111);
    for (int iter = 0; iter < 15; ++iter) {
        Instance inst = random_tiny_instance(rng);
        SolverConfig config;
        config.rule = RuleChoice::All;
        config.selection = SelectionStrategy::Random;
        config.seed = 99;

        config.workers = 1;
        SolveResult a = solve(inst.network, inst.demands, config);
        config.workers = 3;
        SolveResult b = solve(inst.network, inst.demands, config);
        config.workers = 8;
        SolveResult c = solve(inst.network, inst.demands, config);

        CHECK(a.solution.assignment == b.solution.assignment);
        CHECK(a.solution.assignment == c.solution.assignment);
        CHECK(a.solution.throughput == c.solution.throughput);
        CHECK(a.rule_used == c.rule_used);
    }
}

TEST_CASE("rule=All returns the best of the four rules") {
    Rng rng(31337);
    for (int iter = 0; iter < 25; ++iter) {
        Instance inst = random_tiny_instance(rng);
        SolverConfig config;
        config.rule = RuleChoice::All;
        SolveResult all = solve(inst.network, inst.demands, config);

        Bandwidth best = -1;
        SortRule best_rule = SortRule::Rule1;
        for (RuleChoice rule : {RuleChoice::Rule1, RuleChoice::Rule2, RuleChoice::Rule3, RuleChoice::Rule4}) {
            config.rule = rule;
            SolveResult r = solve(inst.network, inst.demands, config);
            if (r.solution.throughput > best) {
                best = r.solution.throughput;
                best_rule = to_sort_rule(rule);
            }
        }
        CHECK(all.solution.throughput == best);
        CHECK(all.rule_used == best_rule);  // ties keep the lowest rule number
        config.rule = RuleChoice::All;
    }
}

TEST_CASE("max iteration cap is honored and reported") {
    Network net = make_network(3, {{0, 1, 10, 5}, {1, 2, 10, 5}});
    std::vector<Demand> demands;
    for (DemandId i = 0; i < 5; ++i) demands.push_back(make_demand(i, 0, 2, 2, 20, 2));
    SolverConfig config;
    config.rule = RuleChoice::Rule1;
    config.max_iterations = 1;
    SolveResult r = solve(net, demands, config);
    CHECK(r.iterations() == 1);
    // All five fit in one iteration here, so the cap does not trip.
    CHECK_FALSE(r.trace.hit_iteration_cap);
    CHECK(r.solution.throughput == 10);
}
