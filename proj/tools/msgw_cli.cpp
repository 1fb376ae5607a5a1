#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msgw/msgw.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

auto report(msgw_status status) -> int
{
    if (status == MSGW_OK) {
        return kExitOk;
    }
    std::cerr << "msgw: " << msgw_status_name(status) << ": " << msgw_last_error() << "\n";
    return status == MSGW_ERR_CONFIG || status == MSGW_ERR_INVALID_ARGUMENT ? kExitConfig : kExitRuntime;
}

auto or_null(const std::string& s) -> const char*
{
    return s.empty() ? nullptr : s.c_str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MSGW-FLM benchmark and allocation runner"};
    app.require_subcommand(1);

    auto* bench = app.add_subcommand("bench", "Benchmark campaigns");
    bench->require_subcommand(1);

    auto* bench_run = bench->add_subcommand("run", "Run a benchmark campaign");
    std::string config;
    std::size_t reps = 0;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string hv_ref;
    std::string igd_form;
    std::size_t parallel = 0;
    bool no_wallclock = false;
    bool no_published = false;
    bench_run->add_option("--config", config, "Campaign config (JSON)")->required()->check(CLI::ExistingFile);
    bench_run->add_option("--reps", reps, "Repetitions per (problem, algorithm)")->check(CLI::PositiveNumber);
    bench_run->add_option("--seed", seed, "Base seed");
    bench_run->add_option("--out", out, "Output directory");
    bench_run->add_option("--hv-ref", hv_ref, "Hypervolume reference")->check(CLI::IsMember({"raw", "normalized"}));
    bench_run->add_option("--igd", igd_form, "IGD/GD aggregation")->check(CLI::IsMember({"mean", "rss"}));
    bench_run->add_option("--parallel", parallel, "Concurrent runs")->check(CLI::PositiveNumber);
    bench_run->add_flag("--no-wallclock", no_wallclock, "Write 0 for wallclock_ms so reruns are byte-identical");
    bench_run->add_flag("--no-published", no_published, "Leave published IBEA/MOEA/D rows out of the summary");

    auto* bench_sum = bench->add_subcommand("summarize", "Summarize run files");
    std::vector<std::string> files;
    std::string sum_out;
    bool with_published = false;
    bench_sum->add_option("files", files, "runs.csv files")->required()->check(CLI::ExistingFile);
    bench_sum->add_option("--out", sum_out, "Write the summary here instead of stdout");
    bench_sum->add_flag("--published", with_published, "Append published IBEA/MOEA/D rows");

    auto* alloc = app.add_subcommand("alloc", "Allocation campaigns");
    alloc->require_subcommand(1);
    auto* alloc_run = alloc->add_subcommand("run", "Run rolling-horizon allocation scenarios");
    std::string alloc_config;
    std::size_t seeds = 0;
    std::optional<std::uint64_t> alloc_seed;
    std::string alloc_out;
    std::size_t alloc_parallel = 0;
    alloc_run->add_option("--config", alloc_config, "Scenario config (JSON)")->required()->check(CLI::ExistingFile);
    alloc_run->add_option("--reps,--seeds", seeds, "Seeds per configuration")->check(CLI::PositiveNumber);
    alloc_run->add_option("--seed", alloc_seed, "Base seed");
    alloc_run->add_option("--out", alloc_out, "Output directory");
    alloc_run->add_option("--parallel", alloc_parallel, "Concurrent scenario runs")->check(CLI::PositiveNumber);

    auto* fronts = app.add_subcommand("fronts", "Reference fronts");
    fronts->require_subcommand(1);
    auto* fronts_gen = fronts->add_subcommand("generate", "Write the file-backed reference fronts");
    std::vector<std::string> ids;
    std::size_t points = 1000;
    std::string fronts_out;
    fronts_gen->add_option("--problem", ids, "Problem id (repeatable; default: all file-backed)");
    fronts_gen->add_option("--points", points, "Points per front")->check(CLI::Range(2, 1000000));
    fronts_gen->add_option("--out", fronts_out, "Output directory (default: the data directory)");

    auto* problems = app.add_subcommand("problems", "List benchmark ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*problems) {
        for (std::size_t i = 0; i < msgw_benchmark_count(); ++i) {
            std::cout << msgw_benchmark_id(i) << "\n";
        }
        return kExitOk;
    }

    if (*bench_run) {
        msgw_bench_overrides o{};
        o.repetitions = reps;
        o.has_seed = seed.has_value();
        o.seed = seed.value_or(0);
        o.output_dir = or_null(out);
        o.hv_reference = or_null(hv_ref);
        o.distance_form = or_null(igd_form);
        o.parallel = parallel;
        o.no_wallclock = no_wallclock;
        o.no_published = no_published;
        msgw_campaign_info info{};
        const int code = report(msgw_bench_run(config.c_str(), &o, &info));
        if (code == kExitOk) {
            std::cerr << "msgw: " << info.executed << " runs executed, " << info.resumed << " resumed\n";
        }
        return code;
    }

    if (*bench_sum) {
        std::vector<const char*> paths;
        for (const auto& f : files) {
            paths.push_back(f.c_str());
        }
        char* csv = nullptr;
        const int code = report(msgw_bench_summarize(paths.data(), paths.size(), with_published ? 1 : 0, &csv));
        if (code != kExitOk) {
            return code;
        }
        if (sum_out.empty()) {
            std::cout << csv;
        } else {
            std::ofstream f(sum_out, std::ios::binary);
            f << csv;
            if (!f) {
                msgw_string_free(csv);
                std::cerr << "msgw: cannot write " << sum_out << "\n";
                return kExitRuntime;
            }
        }
        msgw_string_free(csv);
        return kExitOk;
    }

    if (*alloc_run) {
        msgw_alloc_overrides o{};
        o.seeds = seeds;
        o.has_seed = alloc_seed.has_value();
        o.seed = alloc_seed.value_or(0);
        o.output_dir = or_null(alloc_out);
        o.parallel = alloc_parallel;
        msgw_campaign_info info{};
        const int code = report(msgw_alloc_run(alloc_config.c_str(), &o, &info));
        if (code == kExitOk) {
            std::cerr << "msgw: " << info.executed << " scenario runs executed\n";
        }
        return code;
    }

    if (*fronts_gen) {
        std::vector<const char*> list;
        for (const auto& id : ids) {
            list.push_back(id.c_str());
        }
        return report(msgw_fronts_generate(ids.empty() ? nullptr : list.data(), list.size(), points,
                                           or_null(fronts_out)));
    }
    return kExitConfig;
}
