#include "sdnroute/instance_gen.hpp"

#include <algorithm>
#include <unordered_set>

namespace sdnroute {

Solution PlantedInstance::planted_solution() const {
    Solution sol;
    for (DemandId d : chosen) {
        sol.assignment[d] = planted[static_cast<std::size_t>(d)];
        sol.throughput += instance.demands[static_cast<std::size_t>(d)].band;
    }
    for (const Demand& d : instance.demands)
        if (!chosen.count(d.id)) sol.unsatisfied.insert(d.id);
    return sol;
}

std::vector<SidecarRecord> PlantedInstance::sidecar() const {
    std::vector<SidecarRecord> records;
    records.reserve(planted.size());
    for (std::size_t i = 0; i < planted.size(); ++i) {
        SidecarRecord r;
        r.demand = static_cast<DemandId>(i);
        r.chosen = chosen.count(r.demand) > 0;
        r.nodes = planted[i].nodes;
        records.push_back(std::move(r));
    }
    return records;
}

std::optional<Path> plant_path(const Network& net, NodeId src, NodeId dst, Rng& rng) {
    if (src == dst) return std::nullopt;
    std::size_t n = static_cast<std::size_t>(net.node_count());
    std::vector<EdgeId> parent(n, kNoEdge);
    std::vector<char> seen(n, 0);
    std::vector<NodeId> queue;
    queue.reserve(n);
    queue.push_back(src);
    seen[static_cast<std::size_t>(src)] = 1;
    std::vector<EdgeId> adjacency;

    bool found = false;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        NodeId u = queue[head];
        auto edges = net.out_edges(u);
        adjacency.assign(edges.begin(), edges.end());
        rng.shuffle(adjacency);
        for (EdgeId eid : adjacency) {
            NodeId v = net.edge(eid).dst;
            auto vi = static_cast<std::size_t>(v);
            if (seen[vi]) continue;
            seen[vi] = 1;
            parent[vi] = eid;
            if (v == dst) {
                found = true;
                break;
            }
            queue.push_back(v);
        }
    }
    if (!found) return std::nullopt;

    Path path;
    for (NodeId v = dst; v != src;) {
        EdgeId eid = parent[static_cast<std::size_t>(v)];
        path.edges.push_back(eid);
        path.total_delay += net.edge(eid).delay;
        v = net.edge(eid).src;
    }
    std::reverse(path.edges.begin(), path.edges.end());
    path.nodes.push_back(src);
    for (EdgeId eid : path.edges) path.nodes.push_back(net.edge(eid).dst);
    return path;
}

PlantedInstance generate_instance(const GeneratorConfig& config) {
    if (config.nodes < 2 || config.edges < 1 || config.demands < 1)
        throw GenerationError("generator needs nodes >= 2, edges >= 1, demands >= 1");
    if (config.chosen_num <= 0 || config.chosen_den <= 0 || config.chosen_num > config.chosen_den)
        throw GenerationError("chosen fraction must be in (0, 1]");
    if (config.capacity_num < config.capacity_den || config.capacity_den <= 0)
        throw GenerationError("capacity factor must be >= 1");
    if (config.delay_min <= 0 || config.delay_min > config.delay_max || config.band_min <= 0 ||
        config.band_min > config.band_max)
        throw GenerationError("bad delay or band range");

    Rng rng(config.seed);
    PlantedInstance out;

    // Steps 1-2: uniform placement in the square.
    out.positions.reserve(static_cast<std::size_t>(config.nodes));
    for (NodeId i = 0; i < config.nodes; ++i) {
        double x = rng.uniform_real(0.0, config.side);
        double y = rng.uniform_real(0.0, config.side);
        out.positions.emplace_back(x, y);
    }
    auto close_enough = [&](NodeId a, NodeId b) {
        double dx = out.positions[static_cast<std::size_t>(a)].first -
                    out.positions[static_cast<std::size_t>(b)].first;
        double dy = out.positions[static_cast<std::size_t>(a)].second -
                    out.positions[static_cast<std::size_t>(b)].second;
        return dx * dx + dy * dy < config.connect_radius * config.connect_radius;
    };

    // Steps 3-4: sample ordered pairs until m distinct close-by arcs exist.
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(config.edges));
    std::unordered_set<std::int64_t> arcs;
    std::uint64_t attempts = 0;
    const std::uint64_t edge_budget = 1000ULL * static_cast<std::uint64_t>(config.edges) + 100000ULL;
    while (static_cast<EdgeId>(edges.size()) < config.edges) {
        if (++attempts > edge_budget)
            throw GenerationError("edge sampling budget exhausted after " + std::to_string(attempts - 1) +
                                  " attempts");
        NodeId u = static_cast<NodeId>(rng.uniform_int(0, config.nodes - 1));
        NodeId v = static_cast<NodeId>(rng.uniform_int(0, config.nodes - 1));
        if (u == v || !close_enough(u, v)) continue;
        std::int64_t key = static_cast<std::int64_t>(u) * config.nodes + v;
        if (!arcs.insert(key).second) continue;
        Delay delay = rng.uniform_int(config.delay_min, config.delay_max);
        edges.push_back({static_cast<EdgeId>(edges.size()), u, v, 0, delay});
    }
    Network topology(config.nodes, edges);

    // Steps 5-6: demands with limits copied from a freshly planted path.
    std::vector<Demand> demands;
    demands.reserve(static_cast<std::size_t>(config.demands));
    out.planted.reserve(static_cast<std::size_t>(config.demands));
    attempts = 0;
    const std::uint64_t demand_budget = 200ULL * static_cast<std::uint64_t>(config.demands) + 10000ULL;
    while (static_cast<DemandId>(demands.size()) < config.demands) {
        if (++attempts > demand_budget)
            throw GenerationError("demand sampling budget exhausted (graph too disconnected?)");
        NodeId s = static_cast<NodeId>(rng.uniform_int(0, config.nodes - 1));
        NodeId t = static_cast<NodeId>(rng.uniform_int(0, config.nodes - 1));
        if (s == t) continue;
        auto path = plant_path(topology, s, t, rng);
        if (!path) continue;
        Bandwidth band = rng.uniform_int(config.band_min, config.band_max);
        Demand d{static_cast<DemandId>(demands.size()), s, t, band, path->total_delay, path->hop()};
        demands.push_back(d);
        out.planted.push_back(std::move(*path));
    }

    // Step 7: chosen subset and capacities from its planted load.
    std::vector<DemandId> ids(static_cast<std::size_t>(config.demands));
    for (DemandId i = 0; i < config.demands; ++i) ids[static_cast<std::size_t>(i)] = i;
    std::int64_t chosen_count =
        static_cast<std::int64_t>(config.demands) * config.chosen_num / config.chosen_den;
    for (std::int64_t i = 0; i < chosen_count; ++i) {
        std::uint64_t j = rng.bounded(static_cast<std::uint64_t>(config.demands - i));
        std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(i) + j]);
        out.chosen.insert(ids[static_cast<std::size_t>(i)]);
    }

    std::vector<Bandwidth> load(edges.size(), 0);
    for (DemandId d : out.chosen) {
        for (EdgeId e : out.planted[static_cast<std::size_t>(d)].edges)
            load[static_cast<std::size_t>(e)] += demands[static_cast<std::size_t>(d)].band;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (load[i] > 0)
            edges[i].capacity =
                (load[i] * config.capacity_num + config.capacity_den - 1) / config.capacity_den;
    }

    out.instance.network = Network(config.nodes, std::move(edges));
    out.instance.demands = std::move(demands);
    return out;
}

}  // namespace sdnroute
