#include "sdnroute/path_computing.hpp"

#include <algorithm>
#include <set>

namespace sdnroute {

void CandidateScratch::Half::run(const Network& net, NodeId root, BfsDirection dir,
                                 std::int64_t radius, const ResidualState* prune_residual,
                                 Bandwidth min_band) {
    std::size_t n = static_cast<std::size_t>(net.node_count());
    if (stamp.size() < n) {
        stamp.assign(n, 0);
        current = 0;
        dist.resize(n);
        parent.resize(n);
        delay.resize(n);
    }
    ++current;
    order.clear();

    auto visit = [&](NodeId v, std::int32_t d, EdgeId via, Delay del) {
        stamp[static_cast<std::size_t>(v)] = current;
        dist[static_cast<std::size_t>(v)] = d;
        parent[static_cast<std::size_t>(v)] = via;
        delay[static_cast<std::size_t>(v)] = del;
        order.push_back(v);
    };

    visit(root, 0, kNoEdge, 0);
    // FIFO order means every node at distance d is expanded before any node
    // at d+1, so delay_from_root is final when a node is expanded.
    for (std::size_t head = 0; head < order.size(); ++head) {
        NodeId u = order[head];
        auto ui = static_cast<std::size_t>(u);
        if (dist[ui] >= radius) break;  // visited in distance order
        std::int32_t next_d = dist[ui] + 1;
        Delay base = delay[ui];
        auto adjacency = dir == BfsDirection::Forward ? net.out_edges(u) : net.in_edges(u);
        for (EdgeId eid : adjacency) {
            const Edge& e = net.edge(eid);
            if (prune_residual && prune_residual->residual(eid) < min_band) continue;
            NodeId v = dir == BfsDirection::Forward ? e.dst : e.src;
            auto vi = static_cast<std::size_t>(v);
            if (stamp[vi] != current) {
                visit(v, next_d, eid, base + e.delay);
            } else if (dist[vi] == next_d) {
                // Same hop layer: keep the (delay, edge id)-minimal parent.
                Delay cand = base + e.delay;
                if (cand < delay[vi] || (cand == delay[vi] && eid < parent[vi])) {
                    parent[vi] = eid;
                    delay[vi] = cand;
                }
            }
        }
    }
}

BfsTree half_bfs(const Network& net, NodeId root, BfsDirection direction, std::int64_t radius) {
    if (root < 0 || root >= net.node_count()) throw InvalidInstanceError("half_bfs: root out of range");
    if (radius < 1) throw InvalidInstanceError("half_bfs: radius must be >= 1");
    CandidateScratch::Half half;
    half.run(net, root, direction, radius, nullptr, 0);

    BfsTree tree;
    tree.root = root;
    tree.direction = direction;
    tree.radius = radius;
    tree.visited = half.order;
    std::size_t n = static_cast<std::size_t>(net.node_count());
    tree.dist.assign(n, -1);
    tree.parent_edge.assign(n, kNoEdge);
    tree.delay_from_root.assign(n, 0);
    for (NodeId v : half.order) {
        auto vi = static_cast<std::size_t>(v);
        tree.dist[vi] = half.dist[vi];
        tree.parent_edge[vi] = half.parent[vi];
        tree.delay_from_root[vi] = half.delay[vi];
    }
    return tree;
}

namespace {

// src -> v tree path followed by v -> dst tree path; nullopt if not simple.
bool merge_tree_paths(const Network& net, const CandidateScratch::Half& fwd,
                      const CandidateScratch::Half& bwd, NodeId meet,
                      std::vector<std::int32_t>& mark, std::int32_t gen, Path& out) {
    out.edges.clear();
    out.nodes.clear();
    out.total_delay = 0;

    // Forward half, collected root-ward then reversed.
    for (NodeId v = meet;; ) {
        EdgeId via = fwd.parent[static_cast<std::size_t>(v)];
        if (via == kNoEdge) break;
        out.edges.push_back(via);
        v = net.edge(via).src;
    }
    std::reverse(out.edges.begin(), out.edges.end());
    // Backward half walks toward dst directly.
    for (NodeId v = meet;; ) {
        EdgeId via = bwd.parent[static_cast<std::size_t>(v)];
        if (via == kNoEdge) break;
        out.edges.push_back(via);
        v = net.edge(via).dst;
    }

    NodeId start = out.edges.empty() ? meet : net.edge(out.edges.front()).src;
    out.nodes.push_back(start);
    mark[static_cast<std::size_t>(start)] = gen;
    for (EdgeId eid : out.edges) {
        const Edge& e = net.edge(eid);
        out.total_delay += e.delay;
        auto di = static_cast<std::size_t>(e.dst);
        if (mark[di] == gen) return false;  // repeated node
        mark[di] = gen;
        out.nodes.push_back(e.dst);
    }
    return true;
}

}  // namespace

CandidateSet compute_candidates(const Network& net, const Demand& demand, int k,
                                CandidateScratch& scratch, const ResidualState* prune_residual) {
    if (k < 1) throw InvalidInstanceError("compute_candidates: k must be >= 1");
    CandidateSet result;
    result.demand = demand.id;

    std::int64_t radius = demand.hop_limit / 2 + 1;
    std::int64_t node_cap = static_cast<std::int64_t>(net.node_count());
    if (radius > node_cap) radius = node_cap;  // distances never exceed n - 1

    scratch.fwd.run(net, demand.src, BfsDirection::Forward, radius, prune_residual, demand.band);
    scratch.bwd.run(net, demand.dst, BfsDirection::Backward, radius, prune_residual, demand.band);

    const auto& fwd = scratch.fwd;
    const auto& bwd = scratch.bwd;

    scratch.meetings.clear();
    const auto& smaller = fwd.order.size() <= bwd.order.size() ? fwd.order : bwd.order;
    for (NodeId v : smaller) {
        if (!fwd.seen(v) || !bwd.seen(v)) continue;
        auto vi = static_cast<std::size_t>(v);
        std::int64_t hop = static_cast<std::int64_t>(fwd.dist[vi]) + bwd.dist[vi];
        Delay delay = fwd.delay[vi] + bwd.delay[vi];
        if (hop > demand.hop_limit || delay > demand.delay_limit) continue;
        scratch.meetings.push_back({hop, delay, v});
    }
    std::sort(scratch.meetings.begin(), scratch.meetings.end(),
              [](const CandidateScratch::Meeting& a, const CandidateScratch::Meeting& b) {
                  if (a.hop != b.hop) return a.hop < b.hop;
                  if (a.delay != b.delay) return a.delay < b.delay;
                  return a.vertex < b.vertex;
              });

    if (scratch.node_mark.size() < static_cast<std::size_t>(net.node_count()))
        scratch.node_mark.assign(static_cast<std::size_t>(net.node_count()), 0);

    std::set<std::vector<EdgeId>> seen_sequences;
    Path merged;
    for (const auto& meeting : scratch.meetings) {
        if (static_cast<int>(result.paths.size()) >= k) break;  // later keys only get larger
        if (!merge_tree_paths(net, fwd, bwd, meeting.vertex, scratch.node_mark, ++scratch.mark_gen,
                              merged))
            continue;
        if (!seen_sequences.insert(merged.edges).second) continue;
        result.paths.push_back(merged);
    }
    return result;
}

CandidateSet compute_candidates(const Network& net, const Demand& demand, int k) {
    CandidateScratch scratch;
    return compute_candidates(net, demand, k, scratch);
}

}  // namespace sdnroute
