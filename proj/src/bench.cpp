#include "sdnroute/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace sdnroute {

namespace {

using Clock = std::chrono::steady_clock;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& s) {
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw ParseError("bad double field '" + s + "'");
    }
}

struct MetricAccessor {
    const char* name;
    double (*get)(const TrialResult&);
};

constexpr MetricAccessor kMetrics[] = {
    {"throughput_pct", [](const TrialResult& r) { return r.throughput_pct; }},
    {"total_seconds", [](const TrialResult& r) { return r.total_seconds; }},
    {"phase1_seconds", [](const TrialResult& r) { return r.phase1_seconds; }},
    {"phase2_seconds", [](const TrialResult& r) { return r.phase2_seconds; }},
    {"phase3_seconds", [](const TrialResult& r) { return r.phase3_seconds; }},
    {"iterations", [](const TrialResult& r) { return static_cast<double>(r.iterations); }},
};

}  // namespace

AlgorithmKind parse_algorithm(const std::string& name) {
    if (name == "main") return AlgorithmKind::Main;
    if (name == "kspa-delay") return AlgorithmKind::KspaDelay;
    if (name == "kspa-hop") return AlgorithmKind::KspaHop;
    if (name == "mda") return AlgorithmKind::Mda;
    if (name == "wsp") return AlgorithmKind::Wsp;
    if (name == "swp") return AlgorithmKind::Swp;
    throw ParseError("unknown algorithm '" + name +
                     "' (expected main|kspa-delay|kspa-hop|mda|wsp|swp)");
}

const char* to_string(AlgorithmKind kind) {
    switch (kind) {
        case AlgorithmKind::Main: return "main";
        case AlgorithmKind::KspaDelay: return "kspa-delay";
        case AlgorithmKind::KspaHop: return "kspa-hop";
        case AlgorithmKind::Mda: return "mda";
        case AlgorithmKind::Wsp: return "wsp";
        case AlgorithmKind::Swp: return "swp";
    }
    return "?";
}

TrialResult run_algorithm(const Instance& instance, AlgorithmKind kind, const SolverConfig& solver) {
    TrialResult result;
    result.algorithm = to_string(kind);
    Bandwidth total_band = instance.total_band();

    Solution solution;
    switch (kind) {
        case AlgorithmKind::Main: {
            SolveResult r = solve(instance.network, instance.demands, solver);
            solution = std::move(r.solution);
            result.phase1_seconds = r.times.phase1;
            result.phase2_seconds = r.times.phase2;
            result.phase3_seconds = r.times.phase3;
            result.total_seconds = r.times.total;
            result.iterations = r.iterations();
            break;
        }
        case AlgorithmKind::KspaDelay:
        case AlgorithmKind::KspaHop: {
            SolveResult r = kspa_solve(instance.network, instance.demands, solver,
                                       kind == AlgorithmKind::KspaDelay ? PathWeightKind::Delay
                                                                        : PathWeightKind::Hop);
            solution = std::move(r.solution);
            result.phase1_seconds = r.times.phase1;
            result.phase2_seconds = r.times.phase2;
            result.phase3_seconds = r.times.phase3;
            result.total_seconds = r.times.total;
            result.iterations = r.iterations();
            break;
        }
        case AlgorithmKind::Mda:
        case AlgorithmKind::Wsp:
        case AlgorithmKind::Swp: {
            BaselineStrategy strategy = kind == AlgorithmKind::Mda ? BaselineStrategy::MDA
                                        : kind == AlgorithmKind::Wsp ? BaselineStrategy::WSP
                                                                     : BaselineStrategy::SWP;
            auto t0 = Clock::now();
            solution = sequential_solve(instance.network, instance.demands, strategy);
            result.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            result.iterations = 1;
            break;
        }
    }

    VerificationReport report = verify_solution(instance.network, instance.demands, solution);
    if (!report.valid())
        throw Error(std::string(to_string(kind)) + " produced an invalid solution:\n" +
                    report.to_string());
    result.throughput_pct =
        total_band == 0 ? 0.0
                        : 100.0 * static_cast<double>(solution.throughput) / static_cast<double>(total_band);
    return result;
}

BenchResult run_trials(const BatchConfig& batch) {
    if (batch.trials < 1) throw InvalidInstanceError("trial count must be >= 1");
    if (batch.algorithms.empty()) throw InvalidInstanceError("need at least one algorithm");

    std::string label = batch.instance_class;
    if (label.empty()) {
        label = "n" + std::to_string(batch.generator.nodes) + "_m" +
                std::to_string(batch.generator.edges) + "_k" + std::to_string(batch.generator.demands);
    }

    BenchResult result;
    for (int trial = 0; trial < batch.trials; ++trial) {
        GeneratorConfig gen = batch.generator;
        gen.seed = batch.generator.seed + static_cast<std::uint64_t>(trial);
        PlantedInstance planted = generate_instance(gen);
        for (AlgorithmKind kind : batch.algorithms) {
            TrialResult r;
            try {
                r = run_algorithm(planted.instance, kind, batch.solver);
            } catch (const Error& e) {
                throw Error("trial " + std::to_string(trial) + " (seed " + std::to_string(gen.seed) +
                            ") FAILED: " + e.what());
            }
            r.trial = trial;
            r.seed = gen.seed;
            result.records.push_back(std::move(r));
        }
    }
    result.stats = aggregate(label, result.records);
    return result;
}

StatsTable aggregate(const std::string& instance_class, const std::vector<TrialResult>& records) {
    StatsTable table;
    std::vector<std::string> algorithms;
    for (const TrialResult& r : records)
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
            algorithms.push_back(r.algorithm);

    for (const std::string& algorithm : algorithms) {
        for (const MetricAccessor& metric : kMetrics) {
            std::vector<double> values;
            for (const TrialResult& r : records)
                if (r.algorithm == algorithm) values.push_back(metric.get(r));
            if (values.empty()) continue;
            double sum = 0;
            for (double v : values) sum += v;
            double avg = sum / static_cast<double>(values.size());
            double var = 0;
            for (double v : values) var += (v - avg) * (v - avg);
            var /= static_cast<double>(values.size());
            StatsRow row;
            row.instance_class = instance_class;
            row.algorithm = algorithm;
            row.metric = metric.name;
            row.avg = avg;
            row.sd = std::sqrt(var);
            row.max = *std::max_element(values.begin(), values.end());
            row.min = *std::min_element(values.begin(), values.end());
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    if (name == "text") return ReportFormat::Text;
    throw ParseError("unknown report format '" + name + "' (expected csv|json|text)");
}

std::string emit_report(const StatsTable& stats, ReportFormat format) {
    switch (format) {
        case ReportFormat::Csv: {
            std::ostringstream os;
            os << "class,algorithm,metric,avg,sd,max,min\n";
            for (const StatsRow& r : stats.rows)
                os << r.instance_class << ',' << r.algorithm << ',' << r.metric << ','
                   << format_double(r.avg) << ',' << format_double(r.sd) << ',' << format_double(r.max)
                   << ',' << format_double(r.min) << "\n";
            return os.str();
        }
        case ReportFormat::Json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const StatsRow& r : stats.rows) {
                rows.push_back({{"class", r.instance_class},
                                {"algorithm", r.algorithm},
                                {"metric", r.metric},
                                {"avg", r.avg},
                                {"sd", r.sd},
                                {"max", r.max},
                                {"min", r.min}});
            }
            return rows.dump(2) + "\n";
        }
        case ReportFormat::Text: {
            std::ostringstream os;
            os << "class                algorithm   metric           ";
            os << "      avg        sd       max       min\n";
            char buf[256];
            for (const StatsRow& r : stats.rows) {
                std::snprintf(buf, sizeof buf, "%-20s %-11s %-16s %9.3f %9.3f %9.3f %9.3f\n",
                              r.instance_class.c_str(), r.algorithm.c_str(), r.metric.c_str(), r.avg,
                              r.sd, r.max, r.min);
                os << buf;
            }
            return os.str();
        }
    }
    return {};
}

std::string emit_records_csv(const std::vector<TrialResult>& records) {
    std::ostringstream os;
    os << "trial,seed,algorithm,throughput_pct,phase1_seconds,phase2_seconds,phase3_seconds,"
          "total_seconds,iterations\n";
    for (const TrialResult& r : records)
        os << r.trial << ',' << r.seed << ',' << r.algorithm << ',' << format_double(r.throughput_pct)
           << ',' << format_double(r.phase1_seconds) << ',' << format_double(r.phase2_seconds) << ','
           << format_double(r.phase3_seconds) << ',' << format_double(r.total_seconds) << ','
           << r.iterations << "\n";
    return os.str();
}

StatsTable parse_csv_report(const std::string& text) {
    StatsTable table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line != "class,algorithm,metric,avg,sd,max,min")
                throw ParseError("unexpected csv header: " + line);
            continue;
        }
        std::istringstream ls(line);
        StatsRow row;
        std::string field;
        std::getline(ls, row.instance_class, ',');
        std::getline(ls, row.algorithm, ',');
        std::getline(ls, row.metric, ',');
        std::getline(ls, field, ',');
        row.avg = parse_double(field);
        std::getline(ls, field, ',');
        row.sd = parse_double(field);
        std::getline(ls, field, ',');
        row.max = parse_double(field);
        if (!std::getline(ls, field, ','))
            throw ParseError("csv row has too few fields: " + line);
        row.min = parse_double(field);
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace sdnroute
