#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sdnroute/io.hpp"
#include "sdnroute/model.hpp"
#include "sdnroute/rng.hpp"

namespace sdnroute {

// Seven-step synthetic instance family: uniform points in a square, directed
// edges between close pairs, demands with limits copied from a planted path,
// and capacities sized from the planted load of a randomly chosen subset.
// Fractions are rationals so generated files are byte-identical across
// platforms for a given seed.
struct GeneratorConfig {
    NodeId nodes = 500;
    EdgeId edges = 2000;
    DemandId demands = 10000;
    std::uint64_t seed = 1;
    double side = 100.0;
    double connect_radius = 80.0;
    Delay delay_min = 50;
    Delay delay_max = 100;
    Bandwidth band_min = 1000;
    Bandwidth band_max = 5000;
    std::int64_t chosen_num = 4, chosen_den = 5;      // floor(demands * 4/5) chosen
    std::int64_t capacity_num = 5, capacity_den = 4;  // ceil(planted load * 5/4)
};

struct PlantedInstance {
    Instance instance;
    std::vector<std::pair<double, double>> positions;  // by node id
    std::set<DemandId> chosen;
    std::vector<Path> planted;  // by demand id, every demand

    // Assigns the planted paths of exactly the chosen set; feasible by
    // construction of the capacities.
    Solution planted_solution() const;
    std::vector<SidecarRecord> sidecar() const;
};

// Fully reproducible from config.seed. Throws GenerationError when the edge
// or demand sampling budget runs out (e.g. not enough node pairs within the
// connect radius).
PlantedInstance generate_instance(const GeneratorConfig& config);

// Shortest path by BFS with uniformly shuffled neighbor expansion order, so
// equal-hop alternatives randomize. nullopt if dst is unreachable.
std::optional<Path> plant_path(const Network& net, NodeId src, NodeId dst, Rng& rng);

}  // namespace sdnroute
