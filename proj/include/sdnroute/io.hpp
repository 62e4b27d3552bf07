#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sdnroute/model.hpp"

namespace sdnroute {

struct Instance {
    Network network;
    std::vector<Demand> demands;

    Bandwidth total_band() const {
        Bandwidth sum = 0;
        for (const Demand& d : demands) sum += d.band;
        return sum;
    }
};

// Planted-path record emitted next to generated instances.
struct SidecarRecord {
    DemandId demand = -1;
    bool chosen = false;
    std::vector<NodeId> nodes;
};

// Instance file: '#' comment lines ignored; first data line is the node
// count; 5-field lines are edges (edge_id,src,dst,capacity,delay); 6-field
// lines are demands (demand_id,src,dst,band,delay_limit,hop_limit).
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& instance);
void write_instance_file(const std::string& path, const Instance& instance);

// Solution file: records are demand_id followed by the node sequence; the
// single-field trailer line is the stated throughput. Node sequences are
// canonicalized to minimum-delay parallel edges on load; simplicity is left
// to verify_solution.
Solution read_solution(std::istream& in, const Instance& instance);
Solution read_solution_file(const std::string& path, const Instance& instance);
void write_solution(std::ostream& out, const Solution& solution);
void write_solution_file(const std::string& path, const Solution& solution);

// Sidecar file: demand_id,chosen(0|1),node,node,...
std::vector<SidecarRecord> read_sidecar(std::istream& in);
std::vector<SidecarRecord> read_sidecar_file(const std::string& path);
void write_sidecar(std::ostream& out, const std::vector<SidecarRecord>& records);
void write_sidecar_file(const std::string& path, const std::vector<SidecarRecord>& records);

std::string to_string(const Instance& instance);
std::string to_string(const Solution& solution);

}  // namespace sdnroute
