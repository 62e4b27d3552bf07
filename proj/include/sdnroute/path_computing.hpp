#pragma once

#include <cstdint>
#include <vector>

#include "sdnroute/model.hpp"

namespace sdnroute {

enum class BfsDirection { Forward, Backward };

// Hop-layered search tree around one endpoint. dist is the exact minimum hop
// count; among minimum-hop predecessors the parent is the one minimizing
// (delay from root, edge id), so delay_from_root is the exact minimum delay
// over minimum-hop paths.
struct BfsTree {
    NodeId root = kNoNode;
    BfsDirection direction = BfsDirection::Forward;
    std::int64_t radius = 0;
    std::vector<NodeId> visited;          // discovery order
    std::vector<std::int32_t> dist;       // dense by node id; -1 = unvisited
    std::vector<EdgeId> parent_edge;      // dense; kNoEdge at root/unvisited
    std::vector<Delay> delay_from_root;   // dense; 0 at root
};

// Visits exactly the nodes at hop distance <= radius from root, following
// edge direction (Forward) or reversed edges (Backward). Expansion order is
// ascending edge id.
BfsTree half_bfs(const Network& net, NodeId root, BfsDirection direction, std::int64_t radius);

struct CandidateSet {
    DemandId demand = -1;
    std::vector<Path> paths;  // each simple, endpoint-correct, locally feasible
};

// Reusable buffers for compute_candidates; one per worker thread. The members
// are implementation detail, exposed only so the free functions can share
// them without reallocating per call.
struct CandidateScratch {
    struct Half {
        std::vector<std::int32_t> stamp;
        std::int32_t current = 0;
        std::vector<std::int32_t> dist;
        std::vector<EdgeId> parent;
        std::vector<Delay> delay;
        std::vector<NodeId> order;

        void run(const Network& net, NodeId root, BfsDirection dir, std::int64_t radius,
                 const ResidualState* prune_residual, Bandwidth min_band);
        bool seen(NodeId v) const { return stamp[static_cast<std::size_t>(v)] == current; }
    };

    struct Meeting {
        std::int64_t hop;
        Delay delay;
        NodeId vertex;
    };

    Half fwd, bwd;
    std::vector<std::int32_t> node_mark;
    std::int32_t mark_gen = 0;
    std::vector<Meeting> meetings;
};

// Phase 1 for one demand: two opposing searches of radius hop_limit/2 + 1,
// half-way tree paths concatenated at every vertex both sides reach. Drops
// non-simple merges and delay/hop violations, removes duplicate edge
// sequences, and keeps at most k paths ordered by
// (hop, total delay, smallest meeting vertex) ascending.
//
// Bandwidth is ignored unless prune_residual is given, in which case edges
// with residual < demand.band are skipped during the searches.
CandidateSet compute_candidates(const Network& net, const Demand& demand, int k,
                                CandidateScratch& scratch,
                                const ResidualState* prune_residual = nullptr);
CandidateSet compute_candidates(const Network& net, const Demand& demand, int k);

}  // namespace sdnroute
