// Command-line front end for the sdnroute shared library. Talks to the
// solver exclusively through the C API in sdnroute.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdnroute.h"

namespace {

[[noreturn]] void die(const char* context, sdnr_status status) {
    std::fprintf(stderr, "error: %s: %s: %s\n", context, sdnr_status_str(status), sdnr_last_error());
    std::exit(1);
}

void check(const char* context, sdnr_status status) {
    if (status != SDNR_OK) die(context, status);
}

int env_threads() {
    const char* env = std::getenv("SDNROUTE_THREADS");
    if (!env || !*env) return 0;
    return std::atoi(env);
}

struct GenFlags {
    sdnr_gen_config config;
    double chosen_fraction = 0.8;
    double capacity_factor = 1.25;

    void add_to(CLI::App* cmd) {
        sdnr_gen_config_init(&config);
        cmd->add_option("--nodes", config.nodes, "node count")->capture_default_str();
        cmd->add_option("--edges", config.edges, "edge count")->capture_default_str();
        cmd->add_option("--demands", config.demands, "demand count")->capture_default_str();
        cmd->add_option("--seed", config.seed, "generator seed")->capture_default_str();
        cmd->add_option("--side", config.side, "placement square side")->capture_default_str();
        cmd->add_option("--radius", config.connect_radius, "max edge Euclidean length")
            ->capture_default_str();
        cmd->add_option("--delay-min", config.delay_min, "min edge delay")->capture_default_str();
        cmd->add_option("--delay-max", config.delay_max, "max edge delay")->capture_default_str();
        cmd->add_option("--band-min", config.band_min, "min demand bandwidth")->capture_default_str();
        cmd->add_option("--band-max", config.band_max, "max demand bandwidth")->capture_default_str();
        cmd->add_option("--chosen-fraction", chosen_fraction,
                        "fraction of demands backing the capacities")
            ->capture_default_str();
        cmd->add_option("--capacity-factor", capacity_factor, "capacity headroom factor")
            ->capture_default_str();
    }

    // Decimal flags become exact rationals so instance bytes stay
    // reproducible across platforms.
    static void to_rational(double value, int64_t* num, int64_t* den) {
        int64_t d = 1;
        double scaled = value;
        for (int i = 0; i < 6 && scaled != static_cast<int64_t>(scaled); ++i) {
            scaled *= 10;
            d *= 10;
        }
        *num = static_cast<int64_t>(scaled + 0.5);
        *den = d;
    }

    sdnr_gen_config resolve() {
        to_rational(chosen_fraction, &config.chosen_num, &config.chosen_den);
        to_rational(capacity_factor, &config.capacity_num, &config.capacity_den);
        return config;
    }
};

struct SolveFlags {
    std::string algorithm = "main";
    std::string rule = "all";
    std::string selection = "weight";
    int32_t k_paths = 128;
    int32_t threads = -1;  // -1 = env or auto
    uint64_t seed = 0;
    int32_t max_iterations = 64;

    // seed_flag avoids clashing with the generator's --seed under `bench`.
    void add_to(CLI::App* cmd, const char* seed_flag = "--seed") {
        cmd->add_option("--algorithm", algorithm, "main|kspa-delay|kspa-hop|mda|wsp|swp")
            ->capture_default_str();
        cmd->add_option("--rule", rule, "rule1|rule2|rule3|rule4|none|all")->capture_default_str();
        cmd->add_option("--selection", selection, "weight|min-hop|min-delay|random")
            ->capture_default_str();
        cmd->add_option("--k-paths", k_paths, "phase-1 candidate cap")->capture_default_str();
        cmd->add_option("--threads", threads, "phase-1 worker count (default: SDNROUTE_THREADS or all cores)");
        cmd->add_option(seed_flag, seed, "seed for the random selection strategy")->capture_default_str();
        cmd->add_option("--max-iterations", max_iterations, "iteration safety cap")
            ->capture_default_str();
    }

    sdnr_algorithm parse_algorithm() const {
        if (algorithm == "main") return SDNR_ALG_MAIN;
        if (algorithm == "kspa-delay") return SDNR_ALG_KSPA_DELAY;
        if (algorithm == "kspa-hop") return SDNR_ALG_KSPA_HOP;
        if (algorithm == "mda") return SDNR_ALG_MDA;
        if (algorithm == "wsp") return SDNR_ALG_WSP;
        if (algorithm == "swp") return SDNR_ALG_SWP;
        std::fprintf(stderr, "error: unknown algorithm '%s'\n", algorithm.c_str());
        std::exit(1);
    }

    sdnr_solver_options resolve() const {
        sdnr_solver_options options;
        sdnr_solver_options_init(&options);
        options.algorithm = parse_algorithm();
        options.k_paths = k_paths;
        options.workers = threads >= 0 ? threads : env_threads();
        options.seed = seed;
        options.max_iterations = max_iterations;
        if (rule == "rule1") options.rule = SDNR_RULE_1;
        else if (rule == "rule2") options.rule = SDNR_RULE_2;
        else if (rule == "rule3") options.rule = SDNR_RULE_3;
        else if (rule == "rule4") options.rule = SDNR_RULE_4;
        else if (rule == "none") options.rule = SDNR_RULE_NONE;
        else if (rule == "all") options.rule = SDNR_RULE_ALL;
        else { std::fprintf(stderr, "error: unknown rule '%s'\n", rule.c_str()); std::exit(1); }
        if (selection == "weight") options.selection = SDNR_SELECT_WEIGHT;
        else if (selection == "min-hop") options.selection = SDNR_SELECT_MIN_HOP;
        else if (selection == "min-delay") options.selection = SDNR_SELECT_MIN_DELAY;
        else if (selection == "random") options.selection = SDNR_SELECT_RANDOM;
        else { std::fprintf(stderr, "error: unknown selection '%s'\n", selection.c_str()); std::exit(1); }
        return options;
    }
};

const char* rule_name(sdnr_rule rule) {
    switch (rule) {
        case SDNR_RULE_1: return "rule1";
        case SDNR_RULE_2: return "rule2";
        case SDNR_RULE_3: return "rule3";
        case SDNR_RULE_4: return "rule4";
        case SDNR_RULE_NONE: return "none";
        case SDNR_RULE_ALL: return "all";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bandwidth-delay-hop constrained routing solver and benchmark harness"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "generate a synthetic instance");
    GenFlags gen_flags;
    gen_flags.add_to(generate);
    std::string gen_out, sidecar_out;
    generate->add_option("--out", gen_out, "instance file path")->required();
    generate->add_option("--sidecar-out", sidecar_out, "planted-path sidecar path (default <out>.sidecar)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
    SolveFlags solve_flags;
    solve_flags.add_to(solve_cmd);
    std::string instance_path, solution_out;
    solve_cmd->add_option("--instance", instance_path, "instance file")->required();
    solve_cmd->add_option("--solution-out", solution_out, "solution file path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a solution file against an instance");
    std::string verify_instance, verify_solution_path;
    verify_cmd->add_option("--instance", verify_instance, "instance file")->required();
    verify_cmd->add_option("--solution", verify_solution_path, "solution file")->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run seeded trial batches and aggregate stats");
    GenFlags bench_gen;
    bench_gen.add_to(bench_cmd);
    SolveFlags bench_solver;
    bench_solver.add_to(bench_cmd, "--selection-seed");
    int32_t trials = 1;
    std::string algorithms = "main";
    std::string format = "text";
    std::string bench_out, records_out;
    bench_cmd->add_option("--trials", trials, "number of seeded instances")->capture_default_str();
    bench_cmd->add_option("--algorithms", algorithms, "comma list: main,kspa-delay,kspa-hop,mda,wsp,swp")
        ->capture_default_str();
    bench_cmd->add_option("--format", format, "csv|json|text")->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "stats report path (default stdout)");
    bench_cmd->add_option("--records-out", records_out,
                          "per-trial records csv (default <out>.records.csv)");

    CLI11_PARSE(app, argc, argv);

    if (generate->parsed()) {
        sdnr_gen_config config = gen_flags.resolve();
        sdnr_instance* instance = nullptr;
        check("generate", sdnr_instance_generate(&config, &instance));
        check("write instance", sdnr_instance_write(instance, gen_out.c_str()));
        std::string sidecar = sidecar_out.empty() ? gen_out + ".sidecar" : sidecar_out;
        check("write sidecar", sdnr_instance_write_sidecar(instance, sidecar.c_str()));
        std::printf("wrote %s (%d nodes, %d edges, %d demands) and %s\n", gen_out.c_str(),
                    sdnr_instance_node_count(instance), sdnr_instance_edge_count(instance),
                    sdnr_instance_demand_count(instance), sidecar.c_str());
        sdnr_instance_free(instance);
        return 0;
    }

    if (solve_cmd->parsed()) {
        sdnr_instance* instance = nullptr;
        check("read instance", sdnr_instance_read(instance_path.c_str(), &instance));
        sdnr_solver_options options = solve_flags.resolve();
        sdnr_solution* solution = nullptr;
        sdnr_solve_metrics metrics;
        check("solve", sdnr_solve(instance, &options, &solution, &metrics));

        char report[4096];
        sdnr_status verdict = sdnr_verify(instance, solution, report, sizeof report);
        if (verdict != SDNR_OK) {
            std::fprintf(stderr, "error: solver output failed verification:\n%s", report);
            return 1;
        }
        int64_t total = sdnr_instance_total_band(instance);
        double pct = total == 0 ? 0.0
                                : 100.0 * static_cast<double>(sdnr_solution_throughput(solution)) /
                                      static_cast<double>(total);
        std::printf("algorithm=%s satisfied=%d/%d throughput=%lld (%.2f%% of total band)\n",
                    solve_flags.algorithm.c_str(), sdnr_solution_satisfied_count(solution),
                    sdnr_instance_demand_count(instance),
                    static_cast<long long>(sdnr_solution_throughput(solution)), pct);
        std::printf("rule=%s iterations=%d phase1=%.3fs phase2=%.3fs phase3=%.3fs total=%.3fs\n",
                    rule_name(metrics.rule_used), metrics.iterations, metrics.phase1_seconds,
                    metrics.phase2_seconds, metrics.phase3_seconds, metrics.total_seconds);
        if (!solution_out.empty()) {
            check("write solution", sdnr_solution_write(solution, solution_out.c_str()));
            std::printf("wrote %s\n", solution_out.c_str());
        }
        sdnr_solution_free(solution);
        sdnr_instance_free(instance);
        return 0;
    }

    if (verify_cmd->parsed()) {
        sdnr_instance* instance = nullptr;
        check("read instance", sdnr_instance_read(verify_instance.c_str(), &instance));
        sdnr_solution* solution = nullptr;
        check("read solution", sdnr_solution_read(instance, verify_solution_path.c_str(), &solution));
        char report[65536];
        sdnr_status verdict = sdnr_verify(instance, solution, report, sizeof report);
        if (verdict == SDNR_OK) {
            std::printf("valid: throughput=%lld\n",
                        static_cast<long long>(sdnr_solution_throughput(solution)));
        } else if (verdict == SDNR_ERR_VERIFICATION) {
            std::printf("INVALID:\n%s", report);
        } else {
            die("verify", verdict);
        }
        sdnr_solution_free(solution);
        sdnr_instance_free(instance);
        return verdict == SDNR_OK ? 0 : 1;
    }

    if (bench_cmd->parsed()) {
        sdnr_gen_config config = bench_gen.resolve();
        sdnr_solver_options options = bench_solver.resolve();
        sdnr_report_format fmt;
        if (format == "csv") fmt = SDNR_FORMAT_CSV;
        else if (format == "json") fmt = SDNR_FORMAT_JSON;
        else if (format == "text") fmt = SDNR_FORMAT_TEXT;
        else { std::fprintf(stderr, "error: unknown format '%s'\n", format.c_str()); return 1; }

        sdnr_bench* bench = nullptr;
        check("bench", sdnr_bench_run(&config, trials, algorithms.c_str(), &options, &bench));
        if (bench_out.empty()) {
            std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                              "/sdnroute_bench_report";
            check("emit", sdnr_bench_emit(bench, fmt, tmp.c_str()));
            FILE* f = std::fopen(tmp.c_str(), "rb");
            if (f) {
                char buf[4096];
                std::size_t n;
                while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) std::fwrite(buf, 1, n, stdout);
                std::fclose(f);
            }
            std::remove(tmp.c_str());
        } else {
            check("emit", sdnr_bench_emit(bench, fmt, bench_out.c_str()));
            std::string records = records_out.empty() ? bench_out + ".records.csv" : records_out;
            check("emit records", sdnr_bench_emit_records(bench, records.c_str()));
            std::printf("wrote %s and %s\n", bench_out.c_str(), records.c_str());
        }
        sdnr_bench_free(bench);
        return 0;
    }

    return 0;
}
