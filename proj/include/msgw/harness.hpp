#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "msgw/allocation.hpp"
#include "msgw/indicators.hpp"
#include "msgw/nsga2.hpp"
#include "msgw/optimizer.hpp"

namespace msgw::harness {

namespace fs = std::filesystem;

enum class Algorithm { kMsgwFlm, kNsga2 };

auto algorithm_ids() -> const std::vector<std::string>&;
auto parse_algorithm(std::string_view id) -> Algorithm;
auto to_string(Algorithm a) -> std::string;

struct BenchConfig {
    std::vector<std::string> problems;
    std::vector<std::string> algorithms;
    std::size_t repetitions = 100;
    std::uint64_t base_seed = 0;
    HvReference hv_reference = HvReference::kRaw;
    DistanceAggregate distance_form = DistanceAggregate::kMean;
    std::size_t front_points = Problem::kDefaultFrontPoints;
    fs::path output_dir = "results";
    std::size_t parallel = 1;
    bool record_wallclock = true;
    bool merge_published = true;
    fs::path published_file;
    AlgorithmParams msgw;
    Nsga2Params nsga2;

    // Throws ConfigError naming the offending field or id.
    void validate() const;
};

// Reads a JSON config; unknown keys are rejected. Relative output paths
// stay relative to the working directory.
auto load_bench_config(const fs::path& path) -> BenchConfig;
auto bench_config_from_json(std::string_view text) -> BenchConfig;
auto bench_config_to_json(const BenchConfig& config) -> std::string;

// "problem/algorithm"
auto experiment_id(std::string_view problem, std::string_view algorithm) -> std::string;
// base_seed + fnv1a64("<experiment>#<r>"), wrapping.
auto repetition_seed(std::uint64_t base_seed, std::string_view experiment, std::size_t repetition) -> std::uint64_t;

struct RunRow {
    std::string experiment_id;
    std::string problem;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::size_t evals_used = 0;
    double hv = 0.0;
    double igd = 0.0;
    double spread = 0.0;
    double gd = 0.0;
    double wallclock_ms = 0.0;

    auto operator==(const RunRow&) const -> bool = default;
};

inline constexpr const char* kRunsHeader = "experiment_id,problem,algorithm,seed,evals_used,hv,igd,spread,gd,wallclock_ms";

auto format_run_row(const RunRow& row) -> std::string;
// Throws LoadError with "<file>:<line>" on a malformed row.
auto read_runs_csv(const fs::path& path) -> std::vector<RunRow>;
void write_runs_csv(const fs::path& path, std::span<const RunRow> rows);

// Indicator row for one finished run.
auto score_run(const RunRecord& record, std::span<const ObjectiveVector> reference, HvReference hv_reference,
               DistanceAggregate form) -> RunRow;

// One seeded run of one algorithm on one problem.
auto execute_run(const BenchConfig& config, const Problem& problem, Algorithm algorithm, std::uint64_t seed)
    -> RunRecord;

struct SummaryRow {
    std::string problem;
    std::string algorithm;
    std::string indicator;
    std::size_t runs = 0;
    double mean = 0.0;
    std::optional<double> std_dev;
    std::string source = "computed";
};

inline constexpr const char* kSummaryHeader = "problem,algorithm,indicator,runs,mean,std,source";

// Mean and sample standard deviation per (problem, algorithm, indicator),
// in first-seen order of (problem, algorithm).
auto summarize(std::span<const RunRow> rows) -> std::vector<SummaryRow>;
auto summarize_files(std::span<const fs::path> files) -> std::vector<SummaryRow>;
// Published constants as summary rows, restricted to `algorithms` when
// that list is non-empty.
auto load_published(const fs::path& path, const std::vector<std::string>& algorithms = {})
    -> std::vector<SummaryRow>;
auto default_published_file() -> fs::path;
auto format_summary_csv(std::span<const SummaryRow> rows) -> std::string;
void write_summary_csv(const fs::path& path, std::span<const SummaryRow> rows);

struct CampaignResult {
    std::size_t executed = 0;
    std::size_t resumed = 0;
    fs::path runs_csv;
    fs::path summary_csv;
    std::vector<RunRow> rows;
};

// Runs every (problem, algorithm, repetition) not already present in the
// output directory's runs.csv, then rewrites runs.csv in canonical order and
// writes summary.csv.
auto run_benchmark_campaign(const BenchConfig& config) -> CampaignResult;

struct AllocConfig {
    std::vector<allocation::ScenarioConfig> scenarios;
    std::size_t seeds = 30;
    std::uint64_t base_seed = 0;
    std::string algorithm = "MSGW-FLM";
    AlgorithmParams msgw;
    Nsga2Params nsga2;
    fs::path output_dir = "results";
    std::size_t parallel = 1;

    void validate() const;
};

auto load_alloc_config(const fs::path& path) -> AllocConfig;
auto alloc_config_from_json(std::string_view text) -> AllocConfig;

struct AllocTraceSet {
    allocation::ScenarioConfig scenario;
    std::vector<std::uint64_t> seeds;
    std::vector<allocation::LossTrace> traces;

    [[nodiscard]] auto mean_trace() const -> std::vector<double>;
};

struct AllocCampaignResult {
    std::vector<AllocTraceSet> sets;
    fs::path traces_csv;
    fs::path mean_csv;
};

auto run_allocation_campaign(const AllocConfig& config) -> AllocCampaignResult;

// Writes <output_dir>/<ID>.txt for each id with a file-backed front.
auto generate_fronts(const std::vector<std::string>& ids, std::size_t points, const fs::path& output_dir)
    -> std::vector<fs::path>;

}  // namespace msgw::harness
