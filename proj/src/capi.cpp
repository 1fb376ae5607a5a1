#include "msgw/msgw.h"

#include <cstring>
#include <set>
#include <string>

#include "msgw/harness.hpp"

struct msgw_problem {
    msgw::Problem problem;
};

struct msgw_run_record {
    msgw::RunRecord record;
};

namespace {

thread_local std::string last_error;

auto fail(msgw_status status, std::string message) -> msgw_status
{
    last_error = std::move(message);
    return status;
}

template <class Fn>
auto guarded(Fn&& fn) -> msgw_status
{
    try {
        last_error.clear();
        return fn();
    } catch (const msgw::ConfigError& e) {
        return fail(MSGW_ERR_CONFIG, e.what());
    } catch (const msgw::LoadError& e) {
        return fail(MSGW_ERR_LOAD, e.what());
    } catch (const msgw::ContractViolation& e) {
        return fail(MSGW_ERR_CONTRACT, e.what());
    } catch (const std::exception& e) {
        return fail(MSGW_ERR_RUNTIME, e.what());
    } catch (...) {
        return fail(MSGW_ERR_RUNTIME, "unknown error");
    }
}

auto copy_string(const std::string& s) -> char*
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

auto rows(const double* data, std::size_t n, std::size_t m) -> std::vector<msgw::ObjectiveVector>
{
    std::vector<msgw::ObjectiveVector> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i].assign(data + i * m, data + (i + 1) * m);
    }
    return out;
}

auto to_params(const msgw_params& p) -> msgw::AlgorithmParams
{
    msgw::AlgorithmParams a;
    a.population_size = p.population_size;
    a.archive_max = p.archive_max;
    a.max_fitness_evals = p.max_fitness_evals;
    a.memeplex_count = p.memeplex_count;
    a.crossover_rate = p.crossover_rate;
    a.levy_beta = p.levy_beta;
    a.levy_scale = p.levy_scale;
    a.distance = p.alpha_only_distance ? msgw::WolfDistance::kAlphaOnly : msgw::WolfDistance::kPerLeader;
    a.replacement = p.replace_unless_dominated ? msgw::Replacement::kUnlessDominated : msgw::Replacement::kAlways;
    return a;
}

auto to_params(const msgw_nsga2_params& p) -> msgw::Nsga2Params
{
    msgw::Nsga2Params a;
    a.population_size = p.population_size;
    a.max_fitness_evals = p.max_fitness_evals;
    a.crossover_probability = p.crossover_probability;
    a.mutation_probability = p.mutation_probability;
    a.sbx_eta = p.sbx_eta;
    a.mutation_eta = p.mutation_eta;
    return a;
}

auto distance_form(int rss) -> msgw::DistanceAggregate
{
    return rss ? msgw::DistanceAggregate::kRootSumSquares : msgw::DistanceAggregate::kMean;
}

}  // namespace

extern "C" {

const char* msgw_last_error(void)
{
    return last_error.c_str();
}

const char* msgw_status_name(msgw_status status)
{
    switch (status) {
    case MSGW_OK:
        return "ok";
    case MSGW_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case MSGW_ERR_CONFIG:
        return "configuration error";
    case MSGW_ERR_LOAD:
        return "load error";
    case MSGW_ERR_CONTRACT:
        return "contract violation";
    case MSGW_ERR_RUNTIME:
        return "runtime failure";
    }
    return "unknown status";
}

const char* msgw_version(void)
{
    return "1.0.0";
}

void msgw_string_free(char* s)
{
    std::free(s);
}

size_t msgw_benchmark_count(void)
{
    return msgw::benchmark_ids().size();
}

const char* msgw_benchmark_id(size_t index)
{
    const auto& ids = msgw::benchmark_ids();
    return index < ids.size() ? ids[index].c_str() : nullptr;
}

msgw_status msgw_problem_create(const char* id, msgw_problem** out)
{
    if (id == nullptr || out == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_problem_create: null argument");
    }
    return guarded([&] {
        *out = new msgw_problem{msgw::make_problem(id)};
        return MSGW_OK;
    });
}

void msgw_problem_destroy(msgw_problem* problem)
{
    delete problem;
}

size_t msgw_problem_dimension(const msgw_problem* problem)
{
    return problem ? problem->problem.dimension() : 0;
}

size_t msgw_problem_objectives(const msgw_problem* problem)
{
    return problem ? problem->problem.objectives() : 0;
}

msgw_status msgw_problem_bounds(const msgw_problem* problem, double* lower, double* upper, size_t dim)
{
    if (problem == nullptr || lower == nullptr || upper == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_problem_bounds: null argument");
    }
    const auto& b = problem->problem.bounds();
    if (dim != b.size()) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_problem_bounds: dimension mismatch");
    }
    std::copy(b.lower.begin(), b.lower.end(), lower);
    std::copy(b.upper.begin(), b.upper.end(), upper);
    last_error.clear();
    return MSGW_OK;
}

msgw_status msgw_problem_evaluate(const msgw_problem* problem, const double* x, size_t dim, double* f,
                                  size_t objectives)
{
    if (problem == nullptr || x == nullptr || f == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_problem_evaluate: null argument");
    }
    if (objectives != problem->problem.objectives()) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_problem_evaluate: objective count mismatch");
    }
    return guarded([&] {
        problem->problem.evaluate(std::span<const double>(x, dim), std::span<double>(f, objectives));
        return MSGW_OK;
    });
}

msgw_status msgw_problem_reference_front(const msgw_problem* problem, size_t n, double* out, size_t capacity,
                                         size_t* points)
{
    if (problem == nullptr || points == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_problem_reference_front: null argument");
    }
    return guarded([&] {
        const auto front = problem->problem.reference_front(n).points;
        *points = front.size();
        if (out != nullptr) {
            const std::size_t m = problem->problem.objectives();
            const std::size_t k = std::min(front.size(), capacity);
            for (std::size_t i = 0; i < k; ++i) {
                std::copy(front[i].begin(), front[i].end(), out + i * m);
            }
        }
        return MSGW_OK;
    });
}

void msgw_params_default(msgw_params* params)
{
    if (params == nullptr) {
        return;
    }
    const msgw::AlgorithmParams d;
    *params = msgw_params{d.population_size, d.archive_max, d.max_fitness_evals, d.memeplex_count,
                          d.crossover_rate,  d.levy_beta,   d.levy_scale,        0,
                          0};
}

void msgw_nsga2_params_default(msgw_nsga2_params* params)
{
    if (params == nullptr) {
        return;
    }
    const msgw::Nsga2Params d;
    *params = msgw_nsga2_params{d.population_size, d.max_fitness_evals, d.crossover_probability,
                                d.mutation_probability, d.sbx_eta, d.mutation_eta};
}

msgw_status msgw_optimize(const msgw_problem* problem, const msgw_params* params, uint64_t seed, int check_invariants,
                          msgw_run_record** out)
{
    if (problem == nullptr || out == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_optimize: null argument");
    }
    return guarded([&] {
        msgw_params p;
        msgw_params_default(&p);
        if (params != nullptr) {
            p = *params;
        }
        msgw::RunOptions options;
        options.check_invariants = check_invariants != 0;
        *out = new msgw_run_record{msgw::run(problem->problem, to_params(p), seed, options)};
        return MSGW_OK;
    });
}

msgw_status msgw_nsga2(const msgw_problem* problem, const msgw_nsga2_params* params, uint64_t seed,
                       msgw_run_record** out)
{
    if (problem == nullptr || out == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_nsga2: null argument");
    }
    return guarded([&] {
        msgw_nsga2_params p;
        msgw_nsga2_params_default(&p);
        if (params != nullptr) {
            p = *params;
        }
        *out = new msgw_run_record{msgw::nsga2_run(problem->problem, to_params(p), seed)};
        return MSGW_OK;
    });
}

void msgw_run_record_destroy(msgw_run_record* record)
{
    delete record;
}

size_t msgw_run_record_evaluations(const msgw_run_record* record)
{
    return record ? record->record.evaluations : 0;
}

size_t msgw_run_record_violations(const msgw_run_record* record)
{
    return record ? record->record.invariant_violations : 0;
}

size_t msgw_run_record_generations(const msgw_run_record* record)
{
    return record ? record->record.generations.size() : 0;
}

size_t msgw_run_record_archive_size(const msgw_run_record* record)
{
    return record ? record->record.archive.size() : 0;
}

msgw_status msgw_run_record_archive_objectives(const msgw_run_record* record, double* out, size_t capacity)
{
    if (record == nullptr || out == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_run_record_archive_objectives: null argument");
    }
    const auto& archive = record->record.archive;
    const std::size_t m = archive.empty() ? 0 : archive.front().objectives.size();
    if (capacity < archive.size() * m) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_run_record_archive_objectives: buffer too small");
    }
    for (std::size_t i = 0; i < archive.size(); ++i) {
        std::copy(archive[i].objectives.begin(), archive[i].objectives.end(), out + i * m);
    }
    last_error.clear();
    return MSGW_OK;
}

msgw_status msgw_run_record_to_json(const msgw_run_record* record, char** json)
{
    if (record == nullptr || json == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_run_record_to_json: null argument");
    }
    return guarded([&] {
        *json = copy_string(msgw::to_json(record->record));
        return MSGW_OK;
    });
}

msgw_status msgw_hypervolume(const double* front, size_t n, size_t m, const double* ref, double* out)
{
    if ((front == nullptr && n > 0) || ref == nullptr || out == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_hypervolume: null argument");
    }
    return guarded([&] {
        const auto pts = rows(front, n, m);
        *out = msgw::hypervolume(pts, std::span<const double>(ref, m));
        return MSGW_OK;
    });
}

msgw_status msgw_igd(const double* approx, size_t n, const double* reference, size_t r, size_t m,
                     int root_sum_squares, double* out)
{
    if (approx == nullptr || reference == nullptr || out == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_igd: null argument");
    }
    return guarded([&] {
        *out = msgw::igd(rows(approx, n, m), rows(reference, r, m), distance_form(root_sum_squares));
        return MSGW_OK;
    });
}

msgw_status msgw_gd(const double* approx, size_t n, const double* reference, size_t r, size_t m,
                    int root_sum_squares, double* out)
{
    if (approx == nullptr || reference == nullptr || out == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_gd: null argument");
    }
    return guarded([&] {
        *out = msgw::generational_distance(rows(approx, n, m), rows(reference, r, m),
                                           distance_form(root_sum_squares));
        return MSGW_OK;
    });
}

msgw_status msgw_spread(const double* approx, size_t n, const double* reference, size_t r, size_t m, double* out)
{
    if (approx == nullptr || reference == nullptr || out == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_spread: null argument");
    }
    return guarded([&] {
        *out = msgw::spread(rows(approx, n, m), rows(reference, r, m));
        return MSGW_OK;
    });
}

msgw_status msgw_bench_run(const char* config_path, const msgw_bench_overrides* overrides, msgw_campaign_info* info)
{
    if (config_path == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_bench_run: null config path");
    }
    return guarded([&] {
        auto config = msgw::harness::load_bench_config(config_path);
        if (overrides != nullptr) {
            const auto& o = *overrides;
            if (o.repetitions > 0) {
                config.repetitions = o.repetitions;
            }
            if (o.has_seed) {
                config.base_seed = o.seed;
            }
            if (o.output_dir != nullptr) {
                config.output_dir = o.output_dir;
            }
            if (o.hv_reference != nullptr) {
                config.hv_reference = msgw::parse_hv_reference(o.hv_reference);
            }
            if (o.distance_form != nullptr) {
                config.distance_form = msgw::parse_distance_aggregate(o.distance_form);
            }
            if (o.parallel > 0) {
                config.parallel = o.parallel;
            }
            if (o.no_wallclock) {
                config.record_wallclock = false;
            }
            if (o.no_published) {
                config.merge_published = false;
            }
        }
        const auto result = msgw::harness::run_benchmark_campaign(config);
        if (info != nullptr) {
            info->executed = result.executed;
            info->resumed = result.resumed;
        }
        return MSGW_OK;
    });
}

msgw_status msgw_bench_summarize(const char* const* files, size_t count, int with_published, char** csv)
{
    if (files == nullptr || csv == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_bench_summarize: null argument");
    }
    return guarded([&] {
        std::vector<msgw::harness::fs::path> paths(files, files + count);
        auto summary = msgw::harness::summarize_files(paths);
        if (with_published) {
            std::set<std::string> problems;
            for (const auto& s : summary) {
                problems.insert(s.problem);
            }
            for (auto& s : msgw::harness::load_published(msgw::harness::default_published_file(), {"IBEA", "MOEA/D"})) {
                if (problems.contains(s.problem)) {
                    summary.push_back(std::move(s));
                }
            }
        }
        *csv = copy_string(msgw::harness::format_summary_csv(summary));
        return MSGW_OK;
    });
}

msgw_status msgw_alloc_run(const char* config_path, const msgw_alloc_overrides* overrides, msgw_campaign_info* info)
{
    if (config_path == nullptr) {
        return fail(MSGW_ERR_INVALID_ARGUMENT, "msgw_alloc_run: null config path");
    }
    return guarded([&] {
        auto config = msgw::harness::load_alloc_config(config_path);
        if (overrides != nullptr) {
            if (overrides->seeds > 0) {
                config.seeds = overrides->seeds;
            }
            if (overrides->has_seed) {
                config.base_seed = overrides->seed;
            }
            if (overrides->output_dir != nullptr) {
                config.output_dir = overrides->output_dir;
            }
            if (overrides->parallel > 0) {
                config.parallel = overrides->parallel;
            }
        }
        const auto result = msgw::harness::run_allocation_campaign(config);
        if (info != nullptr) {
            info->executed = config.seeds * config.scenarios.size();
            info->resumed = 0;
        }
        return MSGW_OK;
    });
}

msgw_status msgw_fronts_generate(const char* const* ids, size_t count, size_t points, const char* output_dir)
{
    return guarded([&] {
        std::vector<std::string> list;
        if (ids == nullptr) {
            for (const auto& id : msgw::benchmark_ids()) {
                if (msgw::has_bundled_front(id)) {
                    list.push_back(id);
                }
            }
        } else {
            list.assign(ids, ids + count);
        }
        const auto dir = output_dir != nullptr ? msgw::harness::fs::path(output_dir) : msgw::front_data_dir();
        msgw::harness::generate_fronts(list, points, dir);
        return MSGW_OK;
    });
}

}  // extern "C"
