#include "sdnroute.h"

#include <chrono>
#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "sdnroute/bench.hpp"

using namespace sdnroute;

struct sdnr_instance {
    Instance instance;
    // Present when the instance came from the generator.
    std::optional<std::vector<SidecarRecord>> sidecar;
};

struct sdnr_solution {
    Solution solution;
};

struct sdnr_bench {
    BenchResult result;
};

namespace {

thread_local std::string g_last_error;

sdnr_status fail(sdnr_status status, const char* what) {
    g_last_error = what;
    return status;
}

template <typename Fn>
sdnr_status guard(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(SDNR_ERR_PARSE, e.what());
    } catch (const IoError& e) {
        return fail(SDNR_ERR_IO, e.what());
    } catch (const GenerationError& e) {
        return fail(SDNR_ERR_GENERATION, e.what());
    } catch (const TooLargeError& e) {
        return fail(SDNR_ERR_TOO_LARGE, e.what());
    } catch (const InvalidInstanceError& e) {
        return fail(SDNR_ERR_INVALID_ARGUMENT, e.what());
    } catch (const Error& e) {
        return fail(SDNR_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(SDNR_ERR_INTERNAL, e.what());
    }
}

GeneratorConfig to_generator_config(const sdnr_gen_config& c) {
    GeneratorConfig gen;
    gen.nodes = c.nodes;
    gen.edges = c.edges;
    gen.demands = c.demands;
    gen.seed = c.seed;
    gen.side = c.side;
    gen.connect_radius = c.connect_radius;
    gen.delay_min = c.delay_min;
    gen.delay_max = c.delay_max;
    gen.band_min = c.band_min;
    gen.band_max = c.band_max;
    gen.chosen_num = c.chosen_num;
    gen.chosen_den = c.chosen_den;
    gen.capacity_num = c.capacity_num;
    gen.capacity_den = c.capacity_den;
    return gen;
}

SolverConfig to_solver_config(const sdnr_solver_options& o) {
    SolverConfig config;
    config.k_paths = o.k_paths;
    config.workers = o.workers;
    config.seed = o.seed;
    config.max_iterations = o.max_iterations;
    switch (o.rule) {
        case SDNR_RULE_1: config.rule = RuleChoice::Rule1; break;
        case SDNR_RULE_2: config.rule = RuleChoice::Rule2; break;
        case SDNR_RULE_3: config.rule = RuleChoice::Rule3; break;
        case SDNR_RULE_4: config.rule = RuleChoice::Rule4; break;
        case SDNR_RULE_NONE: config.rule = RuleChoice::NoSorting; break;
        case SDNR_RULE_ALL: config.rule = RuleChoice::All; break;
    }
    switch (o.selection) {
        case SDNR_SELECT_WEIGHT: config.selection = SelectionStrategy::Weight; break;
        case SDNR_SELECT_MIN_HOP: config.selection = SelectionStrategy::MinHop; break;
        case SDNR_SELECT_MIN_DELAY: config.selection = SelectionStrategy::MinDelay; break;
        case SDNR_SELECT_RANDOM: config.selection = SelectionStrategy::Random; break;
    }
    return config;
}

sdnr_rule from_sort_rule(SortRule rule) {
    switch (rule) {
        case SortRule::Rule1: return SDNR_RULE_1;
        case SortRule::Rule2: return SDNR_RULE_2;
        case SortRule::Rule3: return SDNR_RULE_3;
        case SortRule::Rule4: return SDNR_RULE_4;
        case SortRule::NoSorting: return SDNR_RULE_NONE;
    }
    return SDNR_RULE_1;
}

std::vector<AlgorithmKind> parse_algorithm_list(const char* csv) {
    std::vector<AlgorithmKind> kinds;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) kinds.push_back(parse_algorithm(item));
    }
    if (kinds.empty()) throw ParseError("empty algorithm list");
    return kinds;
}

void write_text_file(const char* path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError(std::string("cannot open '") + path + "' for writing");
    out << text;
}

}  // namespace

extern "C" {

const char* sdnr_version(void) { return "1.0.0"; }

const char* sdnr_status_str(sdnr_status status) {
    switch (status) {
        case SDNR_OK: return "ok";
        case SDNR_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SDNR_ERR_PARSE: return "parse error";
        case SDNR_ERR_IO: return "io error";
        case SDNR_ERR_VERIFICATION: return "verification failed";
        case SDNR_ERR_GENERATION: return "generation failed";
        case SDNR_ERR_TOO_LARGE: return "instance too large";
        case SDNR_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* sdnr_last_error(void) { return g_last_error.c_str(); }

void sdnr_gen_config_init(sdnr_gen_config* config) {
    if (!config) return;
    config->nodes = 500;
    config->edges = 2000;
    config->demands = 10000;
    config->seed = 1;
    config->side = 100.0;
    config->connect_radius = 80.0;
    config->delay_min = 50;
    config->delay_max = 100;
    config->band_min = 1000;
    config->band_max = 5000;
    config->chosen_num = 4;
    config->chosen_den = 5;
    config->capacity_num = 5;
    config->capacity_den = 4;
}

sdnr_status sdnr_instance_generate(const sdnr_gen_config* config, sdnr_instance** out) {
    if (!config || !out) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        PlantedInstance planted = generate_instance(to_generator_config(*config));
        auto handle = std::make_unique<sdnr_instance>();
        handle->sidecar = planted.sidecar();
        handle->instance = std::move(planted.instance);
        *out = handle.release();
        return SDNR_OK;
    });
}

sdnr_status sdnr_instance_read(const char* path, sdnr_instance** out) {
    if (!path || !out) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        auto handle = std::make_unique<sdnr_instance>();
        handle->instance = read_instance_file(path);
        *out = handle.release();
        return SDNR_OK;
    });
}

sdnr_status sdnr_instance_write(const sdnr_instance* instance, const char* path) {
    if (!instance || !path) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        write_instance_file(path, instance->instance);
        return SDNR_OK;
    });
}

sdnr_status sdnr_instance_write_sidecar(const sdnr_instance* instance, const char* path) {
    if (!instance || !path) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    if (!instance->sidecar)
        return fail(SDNR_ERR_INVALID_ARGUMENT, "instance has no planted paths (not generated)");
    return guard([&] {
        write_sidecar_file(path, *instance->sidecar);
        return SDNR_OK;
    });
}

void sdnr_instance_free(sdnr_instance* instance) { delete instance; }

int32_t sdnr_instance_node_count(const sdnr_instance* instance) {
    return instance ? instance->instance.network.node_count() : 0;
}

int32_t sdnr_instance_edge_count(const sdnr_instance* instance) {
    return instance ? instance->instance.network.edge_count() : 0;
}

int32_t sdnr_instance_demand_count(const sdnr_instance* instance) {
    return instance ? static_cast<int32_t>(instance->instance.demands.size()) : 0;
}

int64_t sdnr_instance_total_band(const sdnr_instance* instance) {
    return instance ? instance->instance.total_band() : 0;
}

void sdnr_solver_options_init(sdnr_solver_options* options) {
    if (!options) return;
    options->algorithm = SDNR_ALG_MAIN;
    options->rule = SDNR_RULE_ALL;
    options->selection = SDNR_SELECT_WEIGHT;
    options->k_paths = 128;
    options->workers = 0;
    options->seed = 0;
    options->max_iterations = 64;
}

sdnr_status sdnr_solve(const sdnr_instance* instance, const sdnr_solver_options* options,
                       sdnr_solution** out, sdnr_solve_metrics* metrics) {
    if (!instance || !options || !out) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        const Instance& inst = instance->instance;
        SolverConfig config = to_solver_config(*options);
        auto handle = std::make_unique<sdnr_solution>();
        sdnr_solve_metrics m{};
        m.rule_used = options->rule == SDNR_RULE_ALL ? SDNR_RULE_1 : options->rule;

        switch (options->algorithm) {
            case SDNR_ALG_MAIN:
            case SDNR_ALG_KSPA_DELAY:
            case SDNR_ALG_KSPA_HOP: {
                SolveResult r = options->algorithm == SDNR_ALG_MAIN
                                    ? solve(inst.network, inst.demands, config)
                                    : kspa_solve(inst.network, inst.demands, config,
                                                 options->algorithm == SDNR_ALG_KSPA_DELAY
                                                     ? PathWeightKind::Delay
                                                     : PathWeightKind::Hop);
                handle->solution = std::move(r.solution);
                m.phase1_seconds = r.times.phase1;
                m.phase2_seconds = r.times.phase2;
                m.phase3_seconds = r.times.phase3;
                m.total_seconds = r.times.total;
                m.iterations = r.iterations();
                m.rule_used = from_sort_rule(r.rule_used);
                break;
            }
            case SDNR_ALG_MDA:
            case SDNR_ALG_WSP:
            case SDNR_ALG_SWP: {
                BaselineStrategy strategy = options->algorithm == SDNR_ALG_MDA ? BaselineStrategy::MDA
                                            : options->algorithm == SDNR_ALG_WSP
                                                ? BaselineStrategy::WSP
                                                : BaselineStrategy::SWP;
                auto t0 = std::chrono::steady_clock::now();
                handle->solution = sequential_solve(inst.network, inst.demands, strategy);
                m.total_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                m.iterations = 1;
                break;
            }
        }
        if (metrics) *metrics = m;
        *out = handle.release();
        return SDNR_OK;
    });
}

sdnr_status sdnr_solution_read(const sdnr_instance* instance, const char* path, sdnr_solution** out) {
    if (!instance || !path || !out) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        auto handle = std::make_unique<sdnr_solution>();
        handle->solution = read_solution_file(path, instance->instance);
        *out = handle.release();
        return SDNR_OK;
    });
}

sdnr_status sdnr_solution_write(const sdnr_solution* solution, const char* path) {
    if (!solution || !path) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        write_solution_file(path, solution->solution);
        return SDNR_OK;
    });
}

void sdnr_solution_free(sdnr_solution* solution) { delete solution; }

int64_t sdnr_solution_throughput(const sdnr_solution* solution) {
    return solution ? solution->solution.throughput : 0;
}

int32_t sdnr_solution_satisfied_count(const sdnr_solution* solution) {
    return solution ? static_cast<int32_t>(solution->solution.assignment.size()) : 0;
}

sdnr_status sdnr_verify(const sdnr_instance* instance, const sdnr_solution* solution,
                        char* report_buf, size_t report_len) {
    if (!instance || !solution) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    if (report_buf && report_len > 0) report_buf[0] = '\0';
    return guard([&] {
        VerificationReport report =
            verify_solution(instance->instance.network, instance->instance.demands, solution->solution);
        if (report.valid()) return SDNR_OK;
        std::string text = report.to_string();
        if (report_buf && report_len > 0) {
            std::size_t n = std::min(report_len - 1, text.size());
            std::memcpy(report_buf, text.data(), n);
            report_buf[n] = '\0';
        }
        return fail(SDNR_ERR_VERIFICATION, text.c_str());
    });
}

sdnr_status sdnr_bench_run(const sdnr_gen_config* config, int32_t trials, const char* algorithms,
                           const sdnr_solver_options* options, sdnr_bench** out) {
    if (!config || !algorithms || !options || !out)
        return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        BatchConfig batch;
        batch.generator = to_generator_config(*config);
        batch.trials = trials;
        batch.algorithms = parse_algorithm_list(algorithms);
        batch.solver = to_solver_config(*options);
        auto handle = std::make_unique<sdnr_bench>();
        handle->result = run_trials(batch);
        *out = handle.release();
        return SDNR_OK;
    });
}

sdnr_status sdnr_bench_emit(const sdnr_bench* bench, sdnr_report_format format, const char* path) {
    if (!bench || !path) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        ReportFormat fmt = format == SDNR_FORMAT_CSV    ? ReportFormat::Csv
                           : format == SDNR_FORMAT_JSON ? ReportFormat::Json
                                                        : ReportFormat::Text;
        write_text_file(path, emit_report(bench->result.stats, fmt));
        return SDNR_OK;
    });
}

sdnr_status sdnr_bench_emit_records(const sdnr_bench* bench, const char* path) {
    if (!bench || !path) return fail(SDNR_ERR_INVALID_ARGUMENT, "null argument");
    return guard([&] {
        write_text_file(path, emit_records_csv(bench->result.records));
        return SDNR_OK;
    });
}

void sdnr_bench_free(sdnr_bench* bench) { delete bench; }

}  // extern "C"
