#include <doctest.h>

#include <set>

#include "sdnroute/path_computing.hpp"
#include "support/test_util.hpp"

using namespace sdnroute;
using namespace testutil;

TEST_CASE("half_bfs on a line graph") {
    Network net = make_network(4, {{0, 1, 10, 5}, {1, 2, 10, 5}, {2, 3, 10, 5}});

    BfsTree fwd = half_bfs(net, 0, BfsDirection::Forward, 2);
    CHECK(fwd.visited == std::vector<NodeId>{0, 1, 2});
    CHECK(fwd.dist[0] == 0);
    CHECK(fwd.dist[1] == 1);
    CHECK(fwd.dist[2] == 2);
    CHECK(fwd.dist[3] == -1);

    BfsTree bwd = half_bfs(net, 3, BfsDirection::Backward, 2);
    CHECK(bwd.visited == std::vector<NodeId>{3, 2, 1});
    CHECK(bwd.dist[3] == 0);
    CHECK(bwd.dist[2] == 1);
    CHECK(bwd.dist[1] == 2);
    CHECK(bwd.dist[0] == -1);
}

TEST_CASE("half_bfs on a diamond with radius 1") {
    Network net = make_network(4, {{0, 1, 10, 5}, {0, 2, 10, 5}, {1, 3, 10, 5}, {2, 3, 10, 5}});
    BfsTree tree = half_bfs(net, 0, BfsDirection::Forward, 1);
    CHECK(tree.visited == std::vector<NodeId>{0, 1, 2});
    CHECK(tree.dist[3] == -1);
}

TEST_CASE("half_bfs visits exactly the radius ball with true hop distances") {
    Rng rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        Instance inst = random_tiny_instance(rng);
        const Network& net = inst.network;
        NodeId root = static_cast<NodeId>(rng.bounded(static_cast<std::uint64_t>(net.node_count())));
        std::int64_t radius = rng.uniform_int(1, 4);
        BfsTree tree = half_bfs(net, root, BfsDirection::Forward, radius);

        // Reference distances by naive relaxation.
        std::vector<int> ref(static_cast<std::size_t>(net.node_count()), -1);
        ref[static_cast<std::size_t>(root)] = 0;
        for (int round = 0; round < net.node_count(); ++round)
            for (const Edge& e : net.edges())
                if (ref[static_cast<std::size_t>(e.src)] >= 0 &&
                    (ref[static_cast<std::size_t>(e.dst)] < 0 ||
                     ref[static_cast<std::size_t>(e.dst)] > ref[static_cast<std::size_t>(e.src)] + 1))
                    ref[static_cast<std::size_t>(e.dst)] = ref[static_cast<std::size_t>(e.src)] + 1;

        for (NodeId v = 0; v < net.node_count(); ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (ref[vi] >= 0 && ref[vi] <= radius) {
                CHECK(tree.dist[vi] == ref[vi]);
            } else {
                CHECK(tree.dist[vi] == -1);
            }
        }
    }
}

TEST_CASE("half_bfs tree paths take the cheapest delay among minimum-hop routes") {
    // Two 2-hop routes to node 3; the delay-20 one must win regardless of ids.
    Network net = make_network(4, {{0, 1, 10, 90}, {0, 2, 10, 10}, {1, 3, 10, 90}, {2, 3, 10, 10}});
    BfsTree tree = half_bfs(net, 0, BfsDirection::Forward, 2);
    CHECK(tree.dist[3] == 2);
    CHECK(tree.delay_from_root[3] == 20);
    CHECK(tree.parent_edge[3] == 3);

    // Parallel edges: minimum delay, then lowest edge id.
    Network par = make_network(2, {{0, 1, 10, 9}, {0, 1, 10, 4}, {0, 1, 10, 4}});
    BfsTree ptree = half_bfs(par, 0, BfsDirection::Forward, 1);
    CHECK(ptree.parent_edge[1] == 1);
    CHECK(ptree.delay_from_root[1] == 4);
}

TEST_CASE("compute_candidates single edge") {
    Network net = make_network(2, {{0, 1, 10, 60}});
    CandidateSet cs = compute_candidates(net, make_demand(0, 0, 1, 1, 60, 1), 8);
    REQUIRE(cs.paths.size() == 1);
    CHECK(cs.paths[0].edges == std::vector<EdgeId>{0});
    CHECK(cs.paths[0].total_delay == 60);
}

TEST_CASE("compute_candidates diamond") {
    Network net = make_network(4, {{0, 1, 10, 50}, {0, 2, 10, 50}, {1, 3, 10, 50}, {2, 3, 10, 50}});
    Demand demand = make_demand(0, 0, 3, 1, 100, 2);

    CandidateSet both = compute_candidates(net, demand, 8);
    REQUIRE(both.paths.size() == 2);
    std::set<std::vector<EdgeId>> expect{{0, 2}, {1, 3}};
    std::set<std::vector<EdgeId>> got{both.paths[0].edges, both.paths[1].edges};
    CHECK(got == expect);

    // Brute-force enumeration agrees on the full feasible set.
    auto oracle = enumerate_paths(net, 0, 3, 2, 100);
    CHECK(oracle.size() == 2);

    CandidateSet one = compute_candidates(net, demand, 1);
    REQUIRE(one.paths.size() == 1);
    // Meeting vertex 0 (the source) is the smallest id; the via-1 route is
    // the backward tree path from it.
    CHECK(one.paths[0].edges == std::vector<EdgeId>{0, 2});
}

TEST_CASE("compute_candidates drops delay-infeasible merges") {
    Network net = make_network(3, {{0, 1, 10, 90}, {1, 2, 10, 90}, {0, 2, 10, 50}});
    Demand demand = make_demand(0, 0, 2, 1, 100, 2);
    CandidateSet cs = compute_candidates(net, demand, 8);
    REQUIRE(cs.paths.size() == 1);
    CHECK(cs.paths[0].edges == std::vector<EdgeId>{2});

    auto oracle = enumerate_paths(net, 0, 2, 2, 100);
    REQUIRE(oracle.size() == 1);
    CHECK(oracle[0].edges == cs.paths[0].edges);
}

TEST_CASE("candidate sets are simple, feasible, deduplicated, capped, and pure") {
    Rng rng(314159);
    for (int iter = 0; iter < 150; ++iter) {
        Instance inst = random_tiny_instance(rng);
        for (const Demand& d : inst.demands) {
            int k = static_cast<int>(rng.uniform_int(1, 6));
            CandidateSet cs = compute_candidates(inst.network, d, k);
            CHECK(cs.paths.size() <= static_cast<std::size_t>(k));

            std::set<std::vector<EdgeId>> seen;
            for (const Path& p : cs.paths) {
                CHECK(is_simple(p));
                CHECK(is_locally_feasible(p, d));
                CHECK(seen.insert(p.edges).second);
                // Derived metrics match the edge sequence.
                Delay delay = 0;
                for (EdgeId e : p.edges) delay += inst.network.edge(e).delay;
                CHECK(p.total_delay == delay);
                CHECK(p.nodes.size() == p.edges.size() + 1);
            }

            // Pure function of (topology, demand, k).
            CandidateSet again = compute_candidates(inst.network, d, k);
            REQUIRE(again.paths.size() == cs.paths.size());
            for (std::size_t i = 0; i < cs.paths.size(); ++i)
                CHECK(again.paths[i].edges == cs.paths[i].edges);

            // Ordered by (hop, delay) ascending.
            for (std::size_t i = 0; i + 1 < cs.paths.size(); ++i) {
                bool ordered = cs.paths[i].hop() < cs.paths[i + 1].hop() ||
                               (cs.paths[i].hop() == cs.paths[i + 1].hop() &&
                                cs.paths[i].total_delay <= cs.paths[i + 1].total_delay);
                CHECK(ordered);
            }

            // Every candidate is a genuine feasible simple path of the graph.
            auto oracle = enumerate_paths(inst.network, d.src, d.dst, d.hop_limit, d.delay_limit);
            std::set<std::vector<EdgeId>> feasible;
            for (const Path& p : oracle) feasible.insert(p.edges);
            for (const Path& p : cs.paths) CHECK(feasible.count(p.edges) == 1);
        }
    }
}

TEST_CASE("meeting-vertex dominance on random tiny graphs") {
    Rng rng(271828);
    for (int iter = 0; iter < 80; ++iter) {
        Instance inst = random_tiny_instance(rng);
        const Network& net = inst.network;
        for (const Demand& d : inst.demands) {
            std::int64_t radius = d.hop_limit / 2 + 1;
            BfsTree fwd = half_bfs(net, d.src, BfsDirection::Forward, radius);
            BfsTree bwd = half_bfs(net, d.dst, BfsDirection::Backward, radius);
            auto paths = enumerate_paths(net, d.src, d.dst, d.hop_limit);
            for (const Path& q : paths) {
                bool met = false;
                for (std::size_t i = 0; i < q.nodes.size(); ++i) {
                    NodeId v = q.nodes[i];
                    auto vi = static_cast<std::size_t>(v);
                    std::int64_t fwd_pos = static_cast<std::int64_t>(i);
                    std::int64_t bwd_pos = q.hop() - fwd_pos;
                    // Within either radius the node must be visited, at a
                    // distance no worse than its position along q.
                    if (fwd_pos <= radius) {
                        REQUIRE(fwd.dist[vi] >= 0);
                        CHECK(fwd.dist[vi] <= fwd_pos);
                    }
                    if (bwd_pos <= radius) {
                        REQUIRE(bwd.dist[vi] >= 0);
                        CHECK(bwd.dist[vi] <= bwd_pos);
                    }
                    // Every meeting vertex dominates q.
                    if (fwd.dist[vi] >= 0 && bwd.dist[vi] >= 0) {
                        met = true;
                        CHECK(fwd.dist[vi] + bwd.dist[vi] <= q.hop());
                    }
                }
                CHECK(met);  // a hop-feasible path always crosses the meeting set
            }
        }
    }
}

TEST_CASE("saturated-edge pruning flag") {
    Network net = make_network(3, {{0, 1, 10, 5}, {1, 2, 3, 5}, {0, 2, 10, 20}});
    Demand d = make_demand(0, 0, 2, 5, 100, 2);
    ResidualState residual(net);

    CandidateScratch scratch;
    CandidateSet unpruned = compute_candidates(net, d, 8, scratch, nullptr);
    CHECK(unpruned.paths.size() == 2);  // bandwidth ignored by default

    CandidateSet pruned = compute_candidates(net, d, 8, scratch, &residual);
    REQUIRE(pruned.paths.size() == 1);  // the capacity-3 edge cannot take band 5
    CHECK(pruned.paths[0].edges == std::vector<EdgeId>{2});
}
