#pragma once

#include <string>
#include <vector>

#include "sdnroute/baselines.hpp"
#include "sdnroute/instance_gen.hpp"
#include "sdnroute/solver.hpp"

namespace sdnroute {

enum class AlgorithmKind { Main, KspaDelay, KspaHop, Mda, Wsp, Swp };

AlgorithmKind parse_algorithm(const std::string& name);  // throws ParseError
const char* to_string(AlgorithmKind kind);

struct TrialResult {
    int trial = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    double throughput_pct = 0;  // 100 * throughput / total band of all demands
    double phase1_seconds = 0;  // zero for the single-pass baselines
    double phase2_seconds = 0;
    double phase3_seconds = 0;
    double total_seconds = 0;
    int iterations = 0;
};

struct StatsRow {
    std::string instance_class;
    std::string algorithm;
    std::string metric;
    double avg = 0;
    double sd = 0;  // population form (divide by N)
    double max = 0;
    double min = 0;
};

struct StatsTable {
    std::vector<StatsRow> rows;
};

struct BatchConfig {
    GeneratorConfig generator;
    int trials = 1;  // trial i uses generator.seed + i
    std::vector<AlgorithmKind> algorithms;
    SolverConfig solver;             // shared by main and kspa runs
    std::string instance_class;      // label; empty = derived from generator shape
};

struct BenchResult {
    std::vector<TrialResult> records;
    StatsTable stats;
};

// Runs one solution attempt and verifies it; throws Error when verification
// fails (reported solutions are always verified).
TrialResult run_algorithm(const Instance& instance, AlgorithmKind kind, const SolverConfig& solver);

// Generates `trials` seeded instances and runs every algorithm on each,
// aggregating avg/sd/max/min per (algorithm, metric) over the trials.
BenchResult run_trials(const BatchConfig& batch);

StatsTable aggregate(const std::string& instance_class, const std::vector<TrialResult>& records);

enum class ReportFormat { Csv, Json, Text };
ReportFormat parse_format(const std::string& name);

// csv: "class,algorithm,metric,avg,sd,max,min" rows with round-trip-exact
// doubles; json: array of row objects; text: human table.
std::string emit_report(const StatsTable& stats, ReportFormat format);
std::string emit_records_csv(const std::vector<TrialResult>& records);

// Inverse of the csv emitter (tests and downstream tooling).
StatsTable parse_csv_report(const std::string& text);

}  // namespace sdnroute
