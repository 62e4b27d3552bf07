#include "sdnroute/model.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace sdnroute {

namespace {

std::vector<std::int32_t> build_csr(NodeId n, const std::vector<Edge>& edges,
                                    std::vector<EdgeId>& ids, bool by_src) {
    std::vector<std::int32_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges) {
        NodeId key = by_src ? e.src : e.dst;
        ++offsets[static_cast<std::size_t>(key) + 1];
    }
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    ids.resize(edges.size());
    std::vector<std::int32_t> cursor(offsets.begin(), offsets.end() - 1);
    // Edges are stored in id order, so each bucket comes out ascending by id.
    for (const Edge& e : edges) {
        NodeId key = by_src ? e.src : e.dst;
        ids[static_cast<std::size_t>(cursor[static_cast<std::size_t>(key)]++)] = e.id;
    }
    return offsets;
}

const char* kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::Partition: return "partition";
        case ViolationKind::MalformedPath: return "malformed-path";
        case ViolationKind::NotSimple: return "not-simple";
        case ViolationKind::EndpointMismatch: return "endpoint-mismatch";
        case ViolationKind::DelayExceeded: return "delay-exceeded";
        case ViolationKind::HopExceeded: return "hop-exceeded";
        case ViolationKind::CapacityExceeded: return "capacity-exceeded";
        case ViolationKind::ThroughputMismatch: return "throughput-mismatch";
    }
    return "unknown";
}

}  // namespace

Network::Network(NodeId node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ < 0) throw InvalidInstanceError("negative node count");
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.id != static_cast<EdgeId>(i))
            throw InvalidInstanceError("edge ids must be dense in [0, edge_count): missing or duplicate id " +
                                       std::to_string(e.id));
        if (e.src < 0 || e.src >= node_count_ || e.dst < 0 || e.dst >= node_count_)
            throw InvalidInstanceError("edge " + std::to_string(e.id) + " endpoint out of range");
        if (e.src == e.dst)
            throw InvalidInstanceError("edge " + std::to_string(e.id) + " is a self-loop");
        if (e.capacity < 0)
            throw InvalidInstanceError("edge " + std::to_string(e.id) + " has negative capacity");
        if (e.delay <= 0)
            throw InvalidInstanceError("edge " + std::to_string(e.id) + " has non-positive delay");
    }
    out_offsets_ = build_csr(node_count_, edges_, out_ids_, true);
    in_offsets_ = build_csr(node_count_, edges_, in_ids_, false);
}

std::span<const EdgeId> Network::out_edges(NodeId v) const {
    auto lo = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(v)]);
    auto hi = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(v) + 1]);
    return {out_ids_.data() + lo, hi - lo};
}

std::span<const EdgeId> Network::in_edges(NodeId v) const {
    auto lo = static_cast<std::size_t>(in_offsets_[static_cast<std::size_t>(v)]);
    auto hi = static_cast<std::size_t>(in_offsets_[static_cast<std::size_t>(v) + 1]);
    return {in_ids_.data() + lo, hi - lo};
}

EdgeId Network::find_edge(NodeId u, NodeId v) const {
    EdgeId best = kNoEdge;
    for (EdgeId id : out_edges(u)) {
        const Edge& e = edge(id);
        if (e.dst != v) continue;
        if (best == kNoEdge || e.delay < edge(best).delay) best = id;
    }
    return best;
}

ResidualState::ResidualState(const Network& net) {
    residual_.reserve(net.edges().size());
    for (const Edge& e : net.edges()) residual_.push_back(e.capacity);
}

Path walk_from_nodes(const Network& net, std::span<const NodeId> node_seq) {
    if (node_seq.size() < 2) throw NoSuchEdgeError("node sequence needs at least 2 nodes");
    Path p;
    p.nodes.assign(node_seq.begin(), node_seq.end());
    p.edges.reserve(node_seq.size() - 1);
    for (std::size_t i = 0; i + 1 < node_seq.size(); ++i) {
        NodeId u = node_seq[i], v = node_seq[i + 1];
        if (u < 0 || u >= net.node_count() || v < 0 || v >= net.node_count())
            throw NoSuchEdgeError("node id out of range in node sequence");
        EdgeId e = net.find_edge(u, v);
        if (e == kNoEdge)
            throw NoSuchEdgeError("no edge " + std::to_string(u) + " -> " + std::to_string(v));
        p.edges.push_back(e);
        p.total_delay += net.edge(e).delay;
    }
    return p;
}

Path path_from_nodes(const Network& net, std::span<const NodeId> node_seq) {
    Path p = walk_from_nodes(net, node_seq);
    if (!is_simple(p)) throw NotSimpleError("node sequence repeats a node");
    return p;
}

bool is_simple(const Path& path) {
    std::vector<NodeId> seen(path.nodes);
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool is_locally_feasible(const Path& path, const Demand& demand) {
    if (path.nodes.empty() || path.nodes.front() != demand.src || path.nodes.back() != demand.dst)
        throw EndpointMismatchError("path does not connect demand " + std::to_string(demand.id) +
                                    " endpoints");
    return path.total_delay <= demand.delay_limit && path.hop() <= demand.hop_limit;
}

VerificationReport verify_solution(const Network& net, const std::vector<Demand>& demands,
                                   const Solution& solution) {
    VerificationReport report;
    auto add = [&](ViolationKind kind, DemandId d, EdgeId e, std::string msg) {
        report.violations.push_back({kind, d, e, std::move(msg)});
    };

    std::map<DemandId, const Demand*> by_id;
    for (const Demand& d : demands) by_id[d.id] = &d;

    std::set<DemandId> seen_id;
    auto claim = [&](DemandId d) {
        if (!by_id.count(d)) {
            add(ViolationKind::Partition, d, kNoEdge, "unknown demand id " + std::to_string(d));
            return false;
        }
        if (!seen_id.insert(d).second) {
            add(ViolationKind::Partition, d, kNoEdge,
                "demand " + std::to_string(d) + " appears twice in the partition");
            return false;
        }
        return true;
    };
    for (const auto& [d, path] : solution.assignment) claim(d);
    for (DemandId d : solution.unsatisfied) claim(d);
    for (const Demand& d : demands) {
        if (!seen_id.count(d.id))
            add(ViolationKind::Partition, d.id, kNoEdge,
                "demand " + std::to_string(d.id) + " is neither assigned nor unsatisfied");
    }

    std::vector<Bandwidth> load(net.edges().size(), 0);
    Bandwidth assigned_band = 0;
    for (const auto& [d, path] : solution.assignment) {
        if (!by_id.count(d)) continue;
        const Demand& demand = *by_id[d];
        assigned_band += demand.band;

        bool malformed = path.edges.empty() || path.nodes.size() != path.edges.size() + 1;
        Delay delay_sum = 0;
        if (!malformed) {
            for (std::size_t i = 0; i < path.edges.size(); ++i) {
                EdgeId eid = path.edges[i];
                if (eid < 0 || eid >= net.edge_count()) { malformed = true; break; }
                const Edge& e = net.edge(eid);
                if (e.src != path.nodes[i] || e.dst != path.nodes[i + 1]) { malformed = true; break; }
                delay_sum += e.delay;
            }
        }
        if (malformed) {
            add(ViolationKind::MalformedPath, d, kNoEdge,
                "demand " + std::to_string(d) + " path is not a connected edge chain");
            continue;
        }
        for (EdgeId eid : path.edges) load[static_cast<std::size_t>(eid)] += demand.band;

        if (path.nodes.front() != demand.src || path.nodes.back() != demand.dst)
            add(ViolationKind::EndpointMismatch, d, kNoEdge,
                "demand " + std::to_string(d) + " path endpoints do not match");
        if (!is_simple(path))
            add(ViolationKind::NotSimple, d, kNoEdge,
                "demand " + std::to_string(d) + " path repeats a node");
        if (delay_sum > demand.delay_limit)
            add(ViolationKind::DelayExceeded, d, kNoEdge,
                "demand " + std::to_string(d) + " delay " + std::to_string(delay_sum) + " > " +
                    std::to_string(demand.delay_limit));
        if (path.hop() > demand.hop_limit)
            add(ViolationKind::HopExceeded, d, kNoEdge,
                "demand " + std::to_string(d) + " hop " + std::to_string(path.hop()) + " > " +
                    std::to_string(demand.hop_limit));
    }

    for (std::size_t i = 0; i < load.size(); ++i) {
        if (load[i] > net.edges()[i].capacity)
            add(ViolationKind::CapacityExceeded, -1, static_cast<EdgeId>(i),
                "edge " + std::to_string(i) + " load " + std::to_string(load[i]) + " > capacity " +
                    std::to_string(net.edges()[i].capacity));
    }

    if (assigned_band != solution.throughput)
        add(ViolationKind::ThroughputMismatch, -1, kNoEdge,
            "stated throughput " + std::to_string(solution.throughput) + " != recomputed " +
                std::to_string(assigned_band));

    return report;
}

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    for (const Violation& v : violations) os << kind_name(v.kind) << ": " << v.message << "\n";
    return os.str();
}

Bandwidth total_throughput(const std::vector<Demand>& demands, const Solution& solution) {
    std::map<DemandId, Bandwidth> band;
    for (const Demand& d : demands) band[d.id] = d.band;
    Bandwidth sum = 0;
    for (const auto& [d, path] : solution.assignment) {
        auto it = band.find(d);
        if (it == band.end()) throw UnknownDemandError("unknown demand id " + std::to_string(d));
        sum += it->second;
    }
    return sum;
}

void validate_demands(const Network& net, const std::vector<Demand>& demands) {
    for (std::size_t i = 0; i < demands.size(); ++i) {
        const Demand& d = demands[i];
        if (d.id != static_cast<DemandId>(i))
            throw InvalidInstanceError("demand ids must be dense in [0, demand_count)");
        if (d.src < 0 || d.src >= net.node_count() || d.dst < 0 || d.dst >= net.node_count())
            throw InvalidInstanceError("demand " + std::to_string(d.id) + " endpoint out of range");
        if (d.src == d.dst)
            throw InvalidInstanceError("demand " + std::to_string(d.id) + " has src == dst");
        if (d.band <= 0 || d.delay_limit <= 0 || d.hop_limit <= 0)
            throw InvalidInstanceError("demand " + std::to_string(d.id) +
                                       " band/delay_limit/hop_limit must be positive");
    }
}

}  // namespace sdnroute
