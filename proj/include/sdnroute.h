/* C interface to the sdnroute solver library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return SDNR_OK on success; on failure they return an error code
 * and leave a message retrievable with sdnr_last_error() (thread-local).
 */
#ifndef SDNROUTE_H
#define SDNROUTE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdnr_status {
    SDNR_OK = 0,
    SDNR_ERR_INVALID_ARGUMENT = 1,
    SDNR_ERR_PARSE = 2,
    SDNR_ERR_IO = 3,
    SDNR_ERR_VERIFICATION = 4,
    SDNR_ERR_GENERATION = 5,
    SDNR_ERR_TOO_LARGE = 6,
    SDNR_ERR_INTERNAL = 7
} sdnr_status;

typedef struct sdnr_instance sdnr_instance;
typedef struct sdnr_solution sdnr_solution;
typedef struct sdnr_bench sdnr_bench;

const char* sdnr_version(void);
const char* sdnr_status_str(sdnr_status status);
/* Message from the most recent failing call on this thread ("" if none). */
const char* sdnr_last_error(void);

/* ---- instance generation and I/O ---- */

typedef struct sdnr_gen_config {
    int32_t nodes;
    int32_t edges;
    int32_t demands;
    uint64_t seed;
    double side;
    double connect_radius;
    int64_t delay_min, delay_max;
    int64_t band_min, band_max;
    int64_t chosen_num, chosen_den;       /* chosen demand fraction, e.g. 4/5 */
    int64_t capacity_num, capacity_den;   /* capacity factor, e.g. 5/4 */
} sdnr_gen_config;

void sdnr_gen_config_init(sdnr_gen_config* config);

sdnr_status sdnr_instance_generate(const sdnr_gen_config* config, sdnr_instance** out);
sdnr_status sdnr_instance_read(const char* path, sdnr_instance** out);
sdnr_status sdnr_instance_write(const sdnr_instance* instance, const char* path);
/* Planted-path sidecar; fails unless the instance came from the generator. */
sdnr_status sdnr_instance_write_sidecar(const sdnr_instance* instance, const char* path);
void sdnr_instance_free(sdnr_instance* instance);

int32_t sdnr_instance_node_count(const sdnr_instance* instance);
int32_t sdnr_instance_edge_count(const sdnr_instance* instance);
int32_t sdnr_instance_demand_count(const sdnr_instance* instance);
int64_t sdnr_instance_total_band(const sdnr_instance* instance);

/* ---- solving ---- */

typedef enum sdnr_algorithm {
    SDNR_ALG_MAIN = 0,
    SDNR_ALG_KSPA_DELAY = 1,
    SDNR_ALG_KSPA_HOP = 2,
    SDNR_ALG_MDA = 3,
    SDNR_ALG_WSP = 4,
    SDNR_ALG_SWP = 5
} sdnr_algorithm;

typedef enum sdnr_rule {
    SDNR_RULE_1 = 0,
    SDNR_RULE_2 = 1,
    SDNR_RULE_3 = 2,
    SDNR_RULE_4 = 3,
    SDNR_RULE_NONE = 4,
    SDNR_RULE_ALL = 5
} sdnr_rule;

typedef enum sdnr_selection {
    SDNR_SELECT_WEIGHT = 0,
    SDNR_SELECT_MIN_HOP = 1,
    SDNR_SELECT_MIN_DELAY = 2,
    SDNR_SELECT_RANDOM = 3
} sdnr_selection;

typedef struct sdnr_solver_options {
    sdnr_algorithm algorithm;
    sdnr_rule rule;
    sdnr_selection selection;
    int32_t k_paths;        /* phase-1 candidate cap, default 128 */
    int32_t workers;        /* 0 = hardware concurrency */
    uint64_t seed;          /* random selection strategy */
    int32_t max_iterations; /* safety cap, default 64 */
} sdnr_solver_options;

typedef struct sdnr_solve_metrics {
    double phase1_seconds;
    double phase2_seconds;
    double phase3_seconds;
    double total_seconds;
    int32_t iterations;
    sdnr_rule rule_used;
} sdnr_solve_metrics;

void sdnr_solver_options_init(sdnr_solver_options* options);

/* metrics may be NULL. */
sdnr_status sdnr_solve(const sdnr_instance* instance, const sdnr_solver_options* options,
                       sdnr_solution** out, sdnr_solve_metrics* metrics);

sdnr_status sdnr_solution_read(const sdnr_instance* instance, const char* path, sdnr_solution** out);
sdnr_status sdnr_solution_write(const sdnr_solution* solution, const char* path);
void sdnr_solution_free(sdnr_solution* solution);

int64_t sdnr_solution_throughput(const sdnr_solution* solution);
int32_t sdnr_solution_satisfied_count(const sdnr_solution* solution);

/* SDNR_OK when the solution satisfies every constraint; SDNR_ERR_VERIFICATION
 * otherwise, with the violation report (possibly truncated) copied into
 * report_buf when it is non-NULL. */
sdnr_status sdnr_verify(const sdnr_instance* instance, const sdnr_solution* solution,
                        char* report_buf, size_t report_len);

/* ---- benchmarking ---- */

typedef enum sdnr_report_format {
    SDNR_FORMAT_CSV = 0,
    SDNR_FORMAT_JSON = 1,
    SDNR_FORMAT_TEXT = 2
} sdnr_report_format;

/* algorithms: comma-separated list of main|kspa-delay|kspa-hop|mda|wsp|swp.
 * Trial i generates from config->seed + i. Every reported solution is
 * verified; a verification failure aborts the batch. */
sdnr_status sdnr_bench_run(const sdnr_gen_config* config, int32_t trials, const char* algorithms,
                           const sdnr_solver_options* options, sdnr_bench** out);
sdnr_status sdnr_bench_emit(const sdnr_bench* bench, sdnr_report_format format, const char* path);
sdnr_status sdnr_bench_emit_records(const sdnr_bench* bench, const char* path);
void sdnr_bench_free(sdnr_bench* bench);

#ifdef __cplusplus
}
#endif

#endif /* SDNROUTE_H */
