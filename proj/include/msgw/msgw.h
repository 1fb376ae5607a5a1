#ifndef MSGW_MSGW_H
#define MSGW_MSGW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MSGW_API __declspec(dllexport)
#else
#define MSGW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum msgw_status {
    MSGW_OK = 0,
    MSGW_ERR_INVALID_ARGUMENT = 1,
    MSGW_ERR_CONFIG = 2,
    MSGW_ERR_LOAD = 3,
    MSGW_ERR_CONTRACT = 4,
    MSGW_ERR_RUNTIME = 5
} msgw_status;

/* Message for the last failing call on this thread; "" after success. */
MSGW_API const char* msgw_last_error(void);
MSGW_API const char* msgw_status_name(msgw_status status);
MSGW_API const char* msgw_version(void);

/* Strings returned through char** are owned by the caller. */
MSGW_API void msgw_string_free(char* s);

/* ---- problems ---------------------------------------------------------- */

typedef struct msgw_problem msgw_problem;

MSGW_API size_t msgw_benchmark_count(void);
/* NULL when index is out of range. */
MSGW_API const char* msgw_benchmark_id(size_t index);

MSGW_API msgw_status msgw_problem_create(const char* id, msgw_problem** out);
MSGW_API void msgw_problem_destroy(msgw_problem* problem);
MSGW_API size_t msgw_problem_dimension(const msgw_problem* problem);
MSGW_API size_t msgw_problem_objectives(const msgw_problem* problem);
MSGW_API msgw_status msgw_problem_bounds(const msgw_problem* problem, double* lower, double* upper, size_t dim);
MSGW_API msgw_status msgw_problem_evaluate(const msgw_problem* problem, const double* x, size_t dim, double* f,
                                           size_t objectives);
/* Writes up to capacity points (row-major, objectives columns) and stores
 * the front size in *points. Pass out == NULL to query the size. */
MSGW_API msgw_status msgw_problem_reference_front(const msgw_problem* problem, size_t n, double* out,
                                                  size_t capacity, size_t* points);

/* ---- optimizers -------------------------------------------------------- */

typedef struct msgw_params {
    size_t population_size;
    size_t archive_max;
    size_t max_fitness_evals;
    size_t memeplex_count;
    double crossover_rate;
    double levy_beta;
    double levy_scale;
    int alpha_only_distance;
    int replace_unless_dominated;
} msgw_params;

typedef struct msgw_nsga2_params {
    size_t population_size;
    size_t max_fitness_evals;
    double crossover_probability;
    double mutation_probability; /* negative: 1/D */
    double sbx_eta;
    double mutation_eta;
} msgw_nsga2_params;

MSGW_API void msgw_params_default(msgw_params* params);
MSGW_API void msgw_nsga2_params_default(msgw_nsga2_params* params);

typedef struct msgw_run_record msgw_run_record;

MSGW_API msgw_status msgw_optimize(const msgw_problem* problem, const msgw_params* params, uint64_t seed,
                                   int check_invariants, msgw_run_record** out);
MSGW_API msgw_status msgw_nsga2(const msgw_problem* problem, const msgw_nsga2_params* params, uint64_t seed,
                                msgw_run_record** out);
MSGW_API void msgw_run_record_destroy(msgw_run_record* record);
MSGW_API size_t msgw_run_record_evaluations(const msgw_run_record* record);
MSGW_API size_t msgw_run_record_violations(const msgw_run_record* record);
MSGW_API size_t msgw_run_record_generations(const msgw_run_record* record);
MSGW_API size_t msgw_run_record_archive_size(const msgw_run_record* record);
/* Row-major archive objectives; capacity counts doubles. */
MSGW_API msgw_status msgw_run_record_archive_objectives(const msgw_run_record* record, double* out,
                                                        size_t capacity);
MSGW_API msgw_status msgw_run_record_to_json(const msgw_run_record* record, char** json);

/* ---- indicators -------------------------------------------------------- */
/* Point sets are row-major with m columns. */

MSGW_API msgw_status msgw_hypervolume(const double* front, size_t n, size_t m, const double* ref, double* out);
/* root_sum_squares != 0 selects sqrt(sum d^2)/N instead of the mean. */
MSGW_API msgw_status msgw_igd(const double* approx, size_t n, const double* reference, size_t r, size_t m,
                              int root_sum_squares, double* out);
MSGW_API msgw_status msgw_gd(const double* approx, size_t n, const double* reference, size_t r, size_t m,
                             int root_sum_squares, double* out);
MSGW_API msgw_status msgw_spread(const double* approx, size_t n, const double* reference, size_t r, size_t m,
                                 double* out);

/* ---- campaigns --------------------------------------------------------- */

/* Zero / NULL fields keep the config file's value. */
typedef struct msgw_bench_overrides {
    size_t repetitions;
    int has_seed;
    uint64_t seed;
    const char* output_dir;
    const char* hv_reference;  /* "raw" or "normalized" */
    const char* distance_form; /* "mean" or "rss" */
    size_t parallel;
    int no_wallclock;
    int no_published;
} msgw_bench_overrides;

typedef struct msgw_campaign_info {
    size_t executed;
    size_t resumed;
} msgw_campaign_info;

MSGW_API msgw_status msgw_bench_run(const char* config_path, const msgw_bench_overrides* overrides,
                                    msgw_campaign_info* info);
/* Summary CSV of the given run files, optionally followed by the published
 * IBEA/MOEA/D rows for the problems present. */
MSGW_API msgw_status msgw_bench_summarize(const char* const* files, size_t count, int with_published,
                                          char** csv);

typedef struct msgw_alloc_overrides {
    size_t seeds;
    int has_seed;
    uint64_t seed;
    const char* output_dir;
    size_t parallel;
} msgw_alloc_overrides;

MSGW_API msgw_status msgw_alloc_run(const char* config_path, const msgw_alloc_overrides* overrides,
                                    msgw_campaign_info* info);

/* Writes <output_dir>/<ID>.txt for each id; ids == NULL means every
 * file-backed benchmark. */
MSGW_API msgw_status msgw_fronts_generate(const char* const* ids, size_t count, size_t points,
                                          const char* output_dir);

#ifdef __cplusplus
}
#endif

#endif
