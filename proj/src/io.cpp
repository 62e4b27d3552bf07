#include "sdnroute/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sdnroute {

namespace {

std::int64_t parse_int(const std::string& field, int line_no) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError("line " + std::to_string(line_no) + ": bad integer field '" + field + "'");
    return value;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// Yields (line_no, fields) for data lines; skips comments and blanks.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        fn(line_no, split_fields(line));
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

}  // namespace

Instance read_instance(std::istream& in) {
    bool have_nodes = false;
    std::int64_t node_count = 0;
    std::vector<Edge> edges;
    std::vector<Demand> demands;

    for_each_record(in, [&](int line_no, const std::vector<std::string>& f) {
        if (!have_nodes) {
            if (f.size() != 1)
                throw ParseError("line " + std::to_string(line_no) + ": expected node count header");
            node_count = parse_int(f[0], line_no);
            have_nodes = true;
            return;
        }
        if (f.size() == 5) {
            edges.push_back({static_cast<EdgeId>(parse_int(f[0], line_no)),
                             static_cast<NodeId>(parse_int(f[1], line_no)),
                             static_cast<NodeId>(parse_int(f[2], line_no)), parse_int(f[3], line_no),
                             parse_int(f[4], line_no)});
        } else if (f.size() == 6) {
            demands.push_back({static_cast<DemandId>(parse_int(f[0], line_no)),
                               static_cast<NodeId>(parse_int(f[1], line_no)),
                               static_cast<NodeId>(parse_int(f[2], line_no)), parse_int(f[3], line_no),
                               parse_int(f[4], line_no), parse_int(f[5], line_no)});
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": expected 5 fields (edge) or 6 (demand), got " +
                             std::to_string(f.size()));
        }
    });

    if (!have_nodes) throw ParseError("missing node count header");
    Instance instance{Network(static_cast<NodeId>(node_count), std::move(edges)), std::move(demands)};
    std::sort(instance.demands.begin(), instance.demands.end(),
              [](const Demand& a, const Demand& b) { return a.id < b.id; });
    validate_demands(instance.network, instance.demands);
    return instance;
}

void write_instance(std::ostream& out, const Instance& instance) {
    out << "# sdnroute instance\n";
    out << "# nodes\n";
    out << instance.network.node_count() << "\n";
    out << "# edges: edge_id,src,dst,capacity,delay\n";
    for (const Edge& e : instance.network.edges())
        out << e.id << ',' << e.src << ',' << e.dst << ',' << e.capacity << ',' << e.delay << "\n";
    out << "# demands: demand_id,src,dst,band,delay_limit,hop_limit\n";
    for (const Demand& d : instance.demands)
        out << d.id << ',' << d.src << ',' << d.dst << ',' << d.band << ',' << d.delay_limit << ','
            << d.hop_limit << "\n";
}

Solution read_solution(std::istream& in, const Instance& instance) {
    Solution sol;
    bool have_trailer = false;
    for_each_record(in, [&](int line_no, const std::vector<std::string>& f) {
        if (have_trailer)
            throw ParseError("line " + std::to_string(line_no) + ": record after throughput trailer");
        if (f.size() == 1) {
            sol.throughput = parse_int(f[0], line_no);
            have_trailer = true;
            return;
        }
        if (f.size() < 3)
            throw ParseError("line " + std::to_string(line_no) + ": assignment record needs a node sequence");
        DemandId d = static_cast<DemandId>(parse_int(f[0], line_no));
        std::vector<NodeId> nodes;
        nodes.reserve(f.size() - 1);
        for (std::size_t i = 1; i < f.size(); ++i)
            nodes.push_back(static_cast<NodeId>(parse_int(f[i], line_no)));
        if (sol.assignment.count(d))
            throw ParseError("line " + std::to_string(line_no) + ": duplicate record for demand " +
                             std::to_string(d));
        sol.assignment[d] = walk_from_nodes(instance.network, nodes);
    });
    if (!have_trailer) throw ParseError("missing throughput trailer");
    for (const Demand& d : instance.demands)
        if (!sol.assignment.count(d.id)) sol.unsatisfied.insert(d.id);
    return sol;
}

void write_solution(std::ostream& out, const Solution& solution) {
    out << "# sdnroute solution: demand_id,node,node,...\n";
    for (const auto& [d, path] : solution.assignment) {
        out << d;
        for (NodeId v : path.nodes) out << ',' << v;
        out << "\n";
    }
    out << "# throughput\n";
    out << solution.throughput << "\n";
}

std::vector<SidecarRecord> read_sidecar(std::istream& in) {
    std::vector<SidecarRecord> records;
    for_each_record(in, [&](int line_no, const std::vector<std::string>& f) {
        if (f.size() < 4)
            throw ParseError("line " + std::to_string(line_no) + ": sidecar record needs demand,chosen,nodes...");
        SidecarRecord r;
        r.demand = static_cast<DemandId>(parse_int(f[0], line_no));
        std::int64_t chosen = parse_int(f[1], line_no);
        if (chosen != 0 && chosen != 1)
            throw ParseError("line " + std::to_string(line_no) + ": chosen flag must be 0 or 1");
        r.chosen = chosen == 1;
        for (std::size_t i = 2; i < f.size(); ++i)
            r.nodes.push_back(static_cast<NodeId>(parse_int(f[i], line_no)));
        records.push_back(std::move(r));
    });
    return records;
}

void write_sidecar(std::ostream& out, const std::vector<SidecarRecord>& records) {
    out << "# sdnroute sidecar: demand_id,chosen,node,node,...\n";
    for (const SidecarRecord& r : records) {
        out << r.demand << ',' << (r.chosen ? 1 : 0);
        for (NodeId v : r.nodes) out << ',' << v;
        out << "\n";
    }
}

Instance read_instance_file(const std::string& path) {
    auto in = open_in(path);
    return read_instance(in);
}

void write_instance_file(const std::string& path, const Instance& instance) {
    auto out = open_out(path);
    write_instance(out, instance);
}

Solution read_solution_file(const std::string& path, const Instance& instance) {
    auto in = open_in(path);
    return read_solution(in, instance);
}

void write_solution_file(const std::string& path, const Solution& solution) {
    auto out = open_out(path);
    write_solution(out, solution);
}

std::vector<SidecarRecord> read_sidecar_file(const std::string& path) {
    auto in = open_in(path);
    return read_sidecar(in);
}

void write_sidecar_file(const std::string& path, const std::vector<SidecarRecord>& records) {
    auto out = open_out(path);
    write_sidecar(out, records);
}

std::string to_string(const Instance& instance) {
    std::ostringstream os;
    write_instance(os, instance);
    return os.str();
}

std::string to_string(const Solution& solution) {
    std::ostringstream os;
    write_solution(os, solution);
    return os.str();
}

}  // namespace sdnroute
