#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdnroute {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
using DemandId = std::int32_t;
using Bandwidth = std::int64_t;
using Delay = std::int64_t;

inline constexpr EdgeId kNoEdge = -1;
inline constexpr NodeId kNoNode = -1;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInstanceError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };
class NoSuchEdgeError : public Error { public: using Error::Error; };
class NotSimpleError : public Error { public: using Error::Error; };
class EndpointMismatchError : public Error { public: using Error::Error; };
class UnknownDemandError : public Error { public: using Error::Error; };
class ZeroResidualError : public Error { public: using Error::Error; };
class InsufficientResidualError : public Error { public: using Error::Error; };
class GenerationError : public Error { public: using Error::Error; };
class TooLargeError : public Error { public: using Error::Error; };

struct Edge {
    EdgeId id = kNoEdge;
    NodeId src = kNoNode;
    NodeId dst = kNoNode;
    Bandwidth capacity = 0;  // >= 0; zero-capacity edges exist but are never selectable
    Delay delay = 0;         // > 0
};

// Directed multigraph. Parallel and antiparallel edges are allowed,
// self-loops are not. Edge ids must be dense in [0, edge_count).
class Network {
public:
    Network() = default;
    Network(NodeId node_count, std::vector<Edge> edges);

    NodeId node_count() const { return node_count_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    // Edge ids leaving/entering a node, ascending by edge id.
    std::span<const EdgeId> out_edges(NodeId v) const;
    std::span<const EdgeId> in_edges(NodeId v) const;

    // Minimum-delay edge from u to v (ties: lowest edge id), or kNoEdge.
    EdgeId find_edge(NodeId u, NodeId v) const;

private:
    NodeId node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int32_t> out_offsets_, in_offsets_;
    std::vector<EdgeId> out_ids_, in_ids_;
};

struct Demand {
    DemandId id = -1;
    NodeId src = kNoNode;
    NodeId dst = kNoNode;
    Bandwidth band = 0;     // > 0
    Delay delay_limit = 0;  // > 0
    std::int64_t hop_limit = 0;  // > 0
};

// Directed edge walk with derived node sequence and metrics. Simplicity is
// enforced by path_from_nodes and checked by verify_solution, not by the
// struct itself (verification must be able to represent bad paths).
struct Path {
    std::vector<EdgeId> edges;
    std::vector<NodeId> nodes;  // edges.size() + 1 entries when non-empty
    Delay total_delay = 0;

    std::int64_t hop() const { return static_cast<std::int64_t>(edges.size()); }
    bool operator==(const Path& other) const { return edges == other.edges; }
};

class ResidualState {
public:
    ResidualState() = default;
    explicit ResidualState(const Network& net);

    Bandwidth residual(EdgeId e) const { return residual_[static_cast<std::size_t>(e)]; }
    void set_residual(EdgeId e, Bandwidth b) { residual_[static_cast<std::size_t>(e)] = b; }
    std::size_t size() const { return residual_.size(); }

private:
    std::vector<Bandwidth> residual_;
};

struct Solution {
    std::map<DemandId, Path> assignment;  // satisfied demands only
    std::set<DemandId> unsatisfied;
    Bandwidth throughput = 0;
};

enum class ViolationKind {
    Partition,        // assignment keys + unsatisfied set do not partition the demand ids
    MalformedPath,    // empty path, broken edge chaining, or invalid edge reference
    NotSimple,
    EndpointMismatch,
    DelayExceeded,
    HopExceeded,
    CapacityExceeded,
    ThroughputMismatch,
};

struct Violation {
    ViolationKind kind;
    DemandId demand = -1;  // -1 when not demand-specific
    EdgeId edge = kNoEdge; // kNoEdge when not edge-specific
    std::string message;
};

struct VerificationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
    std::string to_string() const;
};

// Lenient: follows node_seq choosing the minimum-delay parallel edge per hop
// (ties: lowest edge id). Throws NoSuchEdgeError if an arc is missing; does
// not check simplicity.
Path walk_from_nodes(const Network& net, std::span<const NodeId> node_seq);

// Strict canonicalization: walk_from_nodes plus a simplicity check.
// Throws NoSuchEdgeError or NotSimpleError.
Path path_from_nodes(const Network& net, std::span<const NodeId> node_seq);

bool is_simple(const Path& path);

// True iff the path meets the demand's delay and hop limits.
// Throws EndpointMismatchError if the path does not run src -> dst.
bool is_locally_feasible(const Path& path, const Demand& demand);

// Ground-truth feasibility check: per-demand delay/hop/simplicity/endpoints,
// per-edge capacity load, id partition, and the stored throughput value.
// Violations are report entries, never exceptions.
VerificationReport verify_solution(const Network& net, const std::vector<Demand>& demands,
                                   const Solution& solution);

// Sum of band over assigned demands. Throws UnknownDemandError.
Bandwidth total_throughput(const std::vector<Demand>& demands, const Solution& solution);

// Throws InvalidInstanceError unless demands have dense ids, valid distinct
// endpoints, and positive band/delay/hop limits.
void validate_demands(const Network& net, const std::vector<Demand>& demands);

}  // namespace sdnroute
