#include "sdnroute/baselines.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <set>

namespace sdnroute {

namespace {

constexpr Bandwidth kInfBand = std::numeric_limits<Bandwidth>::max();
constexpr Delay kInfDelay = std::numeric_limits<Delay>::max();

// ---------------------------------------------------------------------------
// Hop-layered label sets.
//
// labels[h][v] holds the Pareto frontier of (delay, bottleneck) over v->dst
// walks with exactly h edges, every edge carrying residual >= band and every
// delay <= delay_limit. The frontier is kept sorted by delay ascending with
// bottleneck strictly ascending. For MinDelay the bottleneck is pinned to a
// constant, which collapses each frontier to the single minimum-delay label.
//
// Any walk certified optimal by the final selection is necessarily simple:
// excising a cycle strictly lowers delay (delays are positive) and never
// lowers the bottleneck, so a cyclic walk would contradict the optimum or the
// minimality of the chosen hop count.
// ---------------------------------------------------------------------------

struct LayerLabel {
    Delay delay;
    Bandwidth bottleneck;
};

class LayeredLabels {
public:
    void reset(std::size_t layers, std::size_t nodes) {
        layers_ = layers;
        nodes_ = nodes;
        frontiers_.assign(layers * nodes, {});
        touched_.assign(layers, {});
    }

    std::vector<LayerLabel>& at(std::size_t h, NodeId v) {
        return frontiers_[h * nodes_ + static_cast<std::size_t>(v)];
    }
    const std::vector<LayerLabel>& at(std::size_t h, NodeId v) const {
        return frontiers_[h * nodes_ + static_cast<std::size_t>(v)];
    }
    const std::vector<NodeId>& touched(std::size_t h) const { return touched_[h]; }

    bool insert(std::size_t h, NodeId v, LayerLabel label) {
        auto& frontier = at(h, v);
        if (frontier.empty()) touched_[h].push_back(v);
        // Dominated by an existing label with delay <= and bottleneck >=.
        for (const LayerLabel& existing : frontier) {
            if (existing.delay > label.delay) break;
            if (existing.bottleneck >= label.bottleneck) return false;
        }
        std::erase_if(frontier, [&](const LayerLabel& existing) {
            return existing.delay >= label.delay && existing.bottleneck <= label.bottleneck;
        });
        frontier.insert(std::upper_bound(frontier.begin(), frontier.end(), label,
                                         [](const LayerLabel& a, const LayerLabel& b) {
                                             return a.delay < b.delay;
                                         }),
                        label);
        return true;
    }

    // Max bottleneck among labels at (h, v) with delay <= budget, or nullopt.
    std::optional<Bandwidth> best_within(std::size_t h, NodeId v, Delay budget) const {
        const auto& frontier = at(h, v);
        std::optional<Bandwidth> best;
        for (const LayerLabel& label : frontier) {
            if (label.delay > budget) break;
            best = label.bottleneck;  // bottleneck ascends with delay
        }
        return best;
    }

private:
    std::size_t layers_ = 0, nodes_ = 0;
    std::vector<std::vector<LayerLabel>> frontiers_;
    std::vector<std::vector<NodeId>> touched_;
};

struct EngineQuery {
    const Network& net;
    const ResidualState& residual;
    Bandwidth band;
    Delay delay_limit;
    std::int64_t hop_limit;
    bool track_bottleneck;
};

// Builds labels for walks toward dst; layer h = exactly h edges used.
void build_backward_labels(const EngineQuery& q, NodeId dst, LayeredLabels& labels) {
    std::size_t layers = static_cast<std::size_t>(q.hop_limit) + 1;
    labels.reset(layers, static_cast<std::size_t>(q.net.node_count()));
    labels.insert(0, dst, {0, kInfBand});
    for (std::size_t h = 0; h + 1 < layers; ++h) {
        for (NodeId v : labels.touched(h)) {
            // Copy: inserting at h+1 never touches layer h.
            const auto frontier = labels.at(h, v);
            for (EdgeId eid : q.net.in_edges(v)) {
                const Edge& e = q.net.edge(eid);
                Bandwidth r = q.residual.residual(eid);
                if (r < q.band) continue;
                for (const LayerLabel& label : frontier) {
                    Delay d = label.delay + e.delay;
                    if (d > q.delay_limit) continue;
                    Bandwidth w = q.track_bottleneck ? std::min(label.bottleneck, r) : kInfBand;
                    labels.insert(h + 1, e.src, {d, w});
                }
            }
        }
    }
}

struct Target {
    std::size_t hops;
    Delay delay;          // exact total (MinDelay), else kInfDelay = unconstrained
    Bandwidth bottleneck; // exact bottleneck (WSP/SWP), else kInfBand
};

std::optional<Target> select_target(const EngineQuery& q, const LayeredLabels& labels, NodeId src,
                                    PathObjective objective) {
    std::size_t layers = static_cast<std::size_t>(q.hop_limit) + 1;
    switch (objective) {
        case PathObjective::MinDelay: {
            Delay best = kInfDelay;
            std::size_t best_h = 0;
            for (std::size_t h = 1; h < layers; ++h) {
                const auto& frontier = labels.at(h, src);
                if (!frontier.empty() && frontier.front().delay < best) {
                    best = frontier.front().delay;
                    best_h = h;
                }
            }
            if (best == kInfDelay) return std::nullopt;
            return Target{best_h, best, kInfBand};
        }
        case PathObjective::WidestShortest: {
            for (std::size_t h = 1; h < layers; ++h) {
                const auto& frontier = labels.at(h, src);
                if (frontier.empty()) continue;
                Bandwidth widest = 0;
                for (const LayerLabel& label : frontier) widest = std::max(widest, label.bottleneck);
                return Target{h, kInfDelay, widest};
            }
            return std::nullopt;
        }
        case PathObjective::ShortestWidest: {
            Bandwidth widest = -1;
            for (std::size_t h = 1; h < layers; ++h) {
                for (const LayerLabel& label : labels.at(h, src))
                    widest = std::max(widest, label.bottleneck);
            }
            if (widest < 0) return std::nullopt;
            for (std::size_t h = 1; h < layers; ++h) {
                for (const LayerLabel& label : labels.at(h, src)) {
                    if (label.bottleneck == widest) return Target{h, kInfDelay, widest};
                }
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// Walks forward from src taking, at every step, the smallest next node (then
// edge id) that still admits a completion matching the target exactly.
Path reconstruct(const EngineQuery& q, const LayeredLabels& labels, NodeId src,
                 const Target& target) {
    Path path;
    path.nodes.push_back(src);
    NodeId cur = src;
    Delay spent = 0;
    Bandwidth bottleneck = kInfBand;

    for (std::size_t remaining = target.hops; remaining > 0; --remaining) {
        EdgeId chosen = kNoEdge;
        NodeId chosen_next = kNoNode;
        for (EdgeId eid : q.net.out_edges(cur)) {
            const Edge& e = q.net.edge(eid);
            Bandwidth r = q.residual.residual(eid);
            if (r < q.band) continue;
            if (chosen != kNoEdge && e.dst > chosen_next) continue;
            if (chosen != kNoEdge && e.dst == chosen_next && eid > chosen) continue;
            bool viable;
            if (target.delay != kInfDelay) {
                const auto& frontier = labels.at(remaining - 1, e.dst);
                viable = !frontier.empty() &&
                         spent + e.delay + frontier.front().delay == target.delay;
            } else {
                auto best = labels.best_within(remaining - 1, e.dst, q.delay_limit - spent - e.delay);
                viable = best.has_value() &&
                         std::min({bottleneck, r, *best}) >= target.bottleneck;
            }
            if (viable) {
                chosen = eid;
                chosen_next = e.dst;
            }
        }
        assert(chosen != kNoEdge);
        const Edge& e = q.net.edge(chosen);
        path.edges.push_back(chosen);
        path.nodes.push_back(e.dst);
        path.total_delay += e.delay;
        spent += e.delay;
        bottleneck = std::min(bottleneck, q.residual.residual(chosen));
        cur = e.dst;
    }
    return path;
}

// ---------------------------------------------------------------------------
// Lexicographic shortest path under node/edge bans (used by Yen). Backward
// Dijkstra for exact distances, then forward greedy for the lex-min optimal
// node sequence. Weights are positive, so optimal walks are simple.
// ---------------------------------------------------------------------------

struct MaskedShortest {
    std::vector<Delay> dist_to_dst;
    std::vector<char> banned_node;
    std::vector<char> banned_edge;

    void resize(const Network& net) {
        dist_to_dst.assign(static_cast<std::size_t>(net.node_count()), kInfDelay);
        banned_node.assign(static_cast<std::size_t>(net.node_count()), 0);
        banned_edge.assign(static_cast<std::size_t>(net.edge_count()), 0);
    }

    std::int64_t edge_weight(const Network& net, EdgeId eid, PathWeightKind kind) const {
        return kind == PathWeightKind::Delay ? net.edge(eid).delay : 1;
    }

    // Returns nullopt when dst is unreachable from src under the bans.
    std::optional<Path> run(const Network& net, NodeId src, NodeId dst, PathWeightKind kind) {
        std::fill(dist_to_dst.begin(), dist_to_dst.end(), kInfDelay);
        using Item = std::pair<std::int64_t, NodeId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        dist_to_dst[static_cast<std::size_t>(dst)] = 0;
        heap.push({0, dst});
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d != dist_to_dst[static_cast<std::size_t>(v)]) continue;
            for (EdgeId eid : net.in_edges(v)) {
                if (banned_edge[static_cast<std::size_t>(eid)]) continue;
                const Edge& e = net.edge(eid);
                if (banned_node[static_cast<std::size_t>(e.src)]) continue;
                std::int64_t nd = d + edge_weight(net, eid, kind);
                if (nd < dist_to_dst[static_cast<std::size_t>(e.src)]) {
                    dist_to_dst[static_cast<std::size_t>(e.src)] = nd;
                    heap.push({nd, e.src});
                }
            }
        }
        std::int64_t total = dist_to_dst[static_cast<std::size_t>(src)];
        if (total == kInfDelay) return std::nullopt;

        Path path;
        path.nodes.push_back(src);
        NodeId cur = src;
        std::int64_t spent = 0;
        while (cur != dst) {
            EdgeId chosen = kNoEdge;
            NodeId chosen_next = kNoNode;
            for (EdgeId eid : net.out_edges(cur)) {
                if (banned_edge[static_cast<std::size_t>(eid)]) continue;
                const Edge& e = net.edge(eid);
                if (banned_node[static_cast<std::size_t>(e.dst)]) continue;
                if (dist_to_dst[static_cast<std::size_t>(e.dst)] == kInfDelay) continue;
                if (spent + edge_weight(net, eid, kind) +
                        dist_to_dst[static_cast<std::size_t>(e.dst)] != total)
                    continue;
                if (chosen != kNoEdge && e.dst > chosen_next) continue;
                if (chosen != kNoEdge && e.dst == chosen_next && eid > chosen) continue;
                chosen = eid;
                chosen_next = e.dst;
            }
            assert(chosen != kNoEdge);
            const Edge& e = net.edge(chosen);
            spent += edge_weight(net, chosen, kind);
            path.edges.push_back(chosen);
            path.nodes.push_back(e.dst);
            path.total_delay += e.delay;
            cur = e.dst;
        }
        return path;
    }
};

std::int64_t path_weight_of(const Network& net, const Path& p, PathWeightKind kind) {
    if (kind == PathWeightKind::Hop) return p.hop();
    return p.total_delay;
}

// Phase-1 source for kspa_solve: enumeration bounded by the demand's own
// limit on the weighted dimension, then the full local-feasibility filter.
// Honors the same residual pruning flag as the standard phase 1.
class KspCandidateSource : public CandidateSource {
public:
    KspCandidateSource(const Network& net, int k, PathWeightKind weight, bool prune)
        : net_(net), k_(k), weight_(weight), prune_(prune) {}
    void prepare(int workers) override {
        masks_.assign(static_cast<std::size_t>(workers), {});
    }
    CandidateSet compute(const Demand& demand, const ResidualState& snapshot, int worker) override {
        std::int64_t bound =
            weight_ == PathWeightKind::Delay ? demand.delay_limit : demand.hop_limit;
        const std::vector<char>* mask = nullptr;
        if (prune_) {
            auto& buf = masks_[static_cast<std::size_t>(worker)];
            buf.assign(static_cast<std::size_t>(net_.edge_count()), 0);
            for (EdgeId e = 0; e < net_.edge_count(); ++e)
                if (snapshot.residual(e) < demand.band) buf[static_cast<std::size_t>(e)] = 1;
            mask = &buf;
        }
        CandidateSet cs;
        cs.demand = demand.id;
        for (Path& p : k_shortest_paths(net_, demand.src, demand.dst, k_, weight_, bound, mask)) {
            if (p.total_delay <= demand.delay_limit && p.hop() <= demand.hop_limit)
                cs.paths.push_back(std::move(p));
        }
        return cs;
    }

private:
    const Network& net_;
    int k_;
    PathWeightKind weight_;
    bool prune_;
    std::vector<std::vector<char>> masks_;
};

}  // namespace

std::optional<Path> constrained_path(const ResidualState& residual, const Network& net,
                                     const Demand& demand, PathObjective objective) {
    EngineQuery q{net,
                  residual,
                  demand.band,
                  demand.delay_limit,
                  std::min<std::int64_t>(demand.hop_limit, net.node_count() - 1),
                  objective != PathObjective::MinDelay};
    if (q.hop_limit < 1) return std::nullopt;

    LayeredLabels labels;
    build_backward_labels(q, demand.dst, labels);
    auto target = select_target(q, labels, demand.src, objective);
    if (!target) return std::nullopt;

    Path path = reconstruct(q, labels, demand.src, *target);
    // A cyclic reconstruction would contradict the optimality of the target
    // (excising the cycle strictly lowers delay and never lowers the
    // bottleneck), so this cannot trip while edge delays stay positive.
    if (!is_simple(path))
        throw Error("constrained_path: non-simple reconstruction for demand " +
                    std::to_string(demand.id));
    return path;
}

Solution sequential_solve(const Network& net, const std::vector<Demand>& demands,
                          BaselineStrategy strategy) {
    validate_demands(net, demands);
    PathObjective objective = strategy == BaselineStrategy::MDA ? PathObjective::MinDelay
                              : strategy == BaselineStrategy::WSP ? PathObjective::WidestShortest
                                                                  : PathObjective::ShortestWidest;
    Solution solution;
    ResidualState residual(net);
    for (const Demand& demand : demands) {
        auto path = constrained_path(residual, net, demand, objective);
        if (path) {
            commit_path(residual, demand, *path);
            solution.assignment[demand.id] = std::move(*path);
            solution.throughput += demand.band;
        } else {
            solution.unsatisfied.insert(demand.id);
        }
    }
    return solution;
}

std::vector<Path> k_shortest_paths(const Network& net, NodeId src, NodeId dst, int k,
                                   PathWeightKind weight, std::int64_t max_weight,
                                   const std::vector<char>* excluded_edges) {
    if (k < 1) throw InvalidInstanceError("k_shortest_paths: k must be >= 1");
    std::vector<Path> accepted;
    if (src == dst || src < 0 || dst < 0 || src >= net.node_count() || dst >= net.node_count())
        return accepted;

    MaskedShortest shortest;
    shortest.resize(net);
    auto reset_bans = [&] {
        std::fill(shortest.banned_node.begin(), shortest.banned_node.end(), 0);
        if (excluded_edges)
            std::copy(excluded_edges->begin(), excluded_edges->end(), shortest.banned_edge.begin());
        else
            std::fill(shortest.banned_edge.begin(), shortest.banned_edge.end(), 0);
    };
    reset_bans();

    auto first = shortest.run(net, src, dst, weight);
    if (!first || path_weight_of(net, *first, weight) > max_weight) return accepted;
    accepted.push_back(std::move(*first));

    struct Candidate {
        std::int64_t weight;
        Path path;
        bool operator<(const Candidate& other) const {
            if (weight != other.weight) return weight < other.weight;
            if (path.nodes != other.path.nodes) return path.nodes < other.path.nodes;
            return path.edges < other.path.edges;
        }
    };
    std::set<Candidate> pool;
    std::set<std::vector<EdgeId>> known;
    known.insert(accepted.back().edges);

    while (static_cast<int>(accepted.size()) < k) {
        const Path& prev = accepted.back();
        for (std::size_t spur = 0; spur < prev.edges.size(); ++spur) {
            NodeId spur_node = prev.nodes[spur];
            reset_bans();
            // Nodes strictly before the spur node stay off the spur path.
            for (std::size_t i = 0; i < spur; ++i)
                shortest.banned_node[static_cast<std::size_t>(prev.nodes[i])] = 1;
            // Ban the next edge of every known path sharing this root prefix.
            auto same_prefix = [&](const Path& p) {
                if (p.edges.size() < spur + 1) return false;
                return std::equal(p.edges.begin(), p.edges.begin() + static_cast<std::ptrdiff_t>(spur),
                                  prev.edges.begin());
            };
            for (const Path& p : accepted)
                if (same_prefix(p)) shortest.banned_edge[static_cast<std::size_t>(p.edges[spur])] = 1;

            auto spur_path = shortest.run(net, spur_node, dst, weight);
            if (!spur_path) continue;

            Path total;
            total.edges.assign(prev.edges.begin(), prev.edges.begin() + static_cast<std::ptrdiff_t>(spur));
            total.edges.insert(total.edges.end(), spur_path->edges.begin(), spur_path->edges.end());
            total.nodes.assign(prev.nodes.begin(), prev.nodes.begin() + static_cast<std::ptrdiff_t>(spur));
            total.nodes.insert(total.nodes.end(), spur_path->nodes.begin(), spur_path->nodes.end());
            total.total_delay = 0;
            for (EdgeId e : total.edges) total.total_delay += net.edge(e).delay;

            std::int64_t w = path_weight_of(net, total, weight);
            if (w > max_weight) continue;
            if (!known.insert(total.edges).second) continue;
            pool.insert({w, std::move(total)});
        }
        if (pool.empty()) break;
        auto best = pool.begin();
        accepted.push_back(best->path);
        pool.erase(best);
    }
    return accepted;
}

SolveResult kspa_solve(const Network& net, const std::vector<Demand>& demands,
                       const SolverConfig& config, PathWeightKind weight) {
    KspCandidateSource source(net, config.k_paths, weight, config.prune_saturated);
    return solve_with_source(net, demands, config, source);
}

const char* to_string(BaselineStrategy strategy) {
    switch (strategy) {
        case BaselineStrategy::MDA: return "mda";
        case BaselineStrategy::WSP: return "wsp";
        case BaselineStrategy::SWP: return "swp";
    }
    return "?";
}

}  // namespace sdnroute
