#include "msgw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace msgw::harness {

using nlohmann::json;

namespace {

auto format_double(double v) -> std::string
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

auto parse_double(std::string_view s, double& out) -> bool
{
    if (s.empty()) {
        return false;
    }
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

template <class T>
auto parse_unsigned(std::string_view s, T& out) -> bool
{
    if (s.empty()) {
        return false;
    }
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

auto split_csv(const std::string& line) -> std::vector<std::string>
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

auto read_text(const fs::path& path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

auto parse_json(std::string_view text) -> json
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where)
{
    if (!j.is_object()) {
        throw ConfigError(where + " must be a JSON object");
    }
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

template <class T>
void read_field(const json& j, const char* key, T& out, const std::string& where)
{
    if (!j.contains(key)) {
        return;
    }
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("field '" + std::string(key) + "' in " + where + " has the wrong type");
    }
}

auto msgw_from_json(const json& j) -> AlgorithmParams
{
    const std::string where = "msgw";
    reject_unknown(j, {"population_size", "archive_max", "max_fitness_evals", "memeplex_count", "crossover_rate",
                       "levy_beta", "levy_scale", "distance", "replacement"},
                   where);
    AlgorithmParams p;
    read_field(j, "population_size", p.population_size, where);
    read_field(j, "archive_max", p.archive_max, where);
    read_field(j, "max_fitness_evals", p.max_fitness_evals, where);
    read_field(j, "memeplex_count", p.memeplex_count, where);
    read_field(j, "crossover_rate", p.crossover_rate, where);
    read_field(j, "levy_beta", p.levy_beta, where);
    read_field(j, "levy_scale", p.levy_scale, where);
    std::string distance = "per-leader";
    std::string replacement = "always";
    read_field(j, "distance", distance, where);
    read_field(j, "replacement", replacement, where);
    if (distance == "per-leader") {
        p.distance = WolfDistance::kPerLeader;
    } else if (distance == "alpha-only") {
        p.distance = WolfDistance::kAlphaOnly;
    } else {
        throw ConfigError("msgw.distance must be 'per-leader' or 'alpha-only'");
    }
    if (replacement == "always") {
        p.replacement = Replacement::kAlways;
    } else if (replacement == "unless-dominated") {
        p.replacement = Replacement::kUnlessDominated;
    } else {
        throw ConfigError("msgw.replacement must be 'always' or 'unless-dominated'");
    }
    return p;
}

auto msgw_to_json(const AlgorithmParams& p) -> json
{
    return {
        {"population_size", p.population_size},
        {"archive_max", p.archive_max},
        {"max_fitness_evals", p.max_fitness_evals},
        {"memeplex_count", p.memeplex_count},
        {"crossover_rate", p.crossover_rate},
        {"levy_beta", p.levy_beta},
        {"levy_scale", p.levy_scale},
        {"distance", p.distance == WolfDistance::kPerLeader ? "per-leader" : "alpha-only"},
        {"replacement", p.replacement == Replacement::kAlways ? "always" : "unless-dominated"},
    };
}

auto nsga2_from_json(const json& j) -> Nsga2Params
{
    const std::string where = "nsga2";
    reject_unknown(j, {"population_size", "max_fitness_evals", "crossover_probability", "mutation_probability",
                       "sbx_eta", "mutation_eta"},
                   where);
    Nsga2Params p;
    read_field(j, "population_size", p.population_size, where);
    read_field(j, "max_fitness_evals", p.max_fitness_evals, where);
    read_field(j, "crossover_probability", p.crossover_probability, where);
    read_field(j, "mutation_probability", p.mutation_probability, where);
    read_field(j, "sbx_eta", p.sbx_eta, where);
    read_field(j, "mutation_eta", p.mutation_eta, where);
    return p;
}

auto nsga2_to_json(const Nsga2Params& p) -> json
{
    return {
        {"population_size", p.population_size},
        {"max_fitness_evals", p.max_fitness_evals},
        {"crossover_probability", p.crossover_probability},
        {"mutation_probability", p.mutation_probability},
        {"sbx_eta", p.sbx_eta},
        {"mutation_eta", p.mutation_eta},
    };
}

// Fields that change run results. A resumed campaign must match them.
auto fingerprint(const BenchConfig& c) -> json
{
    return {
        {"problems", c.problems},
        {"algorithms", c.algorithms},
        {"base_seed", c.base_seed},
        {"hv_reference", to_string(c.hv_reference)},
        {"distance_form", to_string(c.distance_form)},
        {"front_points", c.front_points},
        {"msgw", msgw_to_json(c.msgw)},
        {"nsga2", nsga2_to_json(c.nsga2)},
    };
}

// Runs fn(i) for i in [0, n) on up to `workers` threads. The first
// exception stops the remaining work and is rethrown.
template <class Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn fn)
{
    workers = std::max<std::size_t>(1, std::min(workers, n));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        while (!failed) {
            const std::size_t i = next++;
            if (i >= n) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(body);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

void ensure_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
    }
}

void write_atomically(const fs::path& path, const std::string& content)
{
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

}  // namespace

auto algorithm_ids() -> const std::vector<std::string>&
{
    static const std::vector<std::string> ids = {kMsgwName, kNsga2Name};
    return ids;
}

auto parse_algorithm(std::string_view id) -> Algorithm
{
    if (id == kMsgwName) {
        return Algorithm::kMsgwFlm;
    }
    if (id == kNsga2Name) {
        return Algorithm::kNsga2;
    }
    throw ConfigError("unknown algorithm '" + std::string(id) + "'; valid ids: MSGW-FLM, NSGA-II");
}

auto to_string(Algorithm a) -> std::string
{
    return a == Algorithm::kMsgwFlm ? kMsgwName : kNsga2Name;
}

// --- bench config --------------------------------------------------------

void BenchConfig::validate() const
{
    if (problems.empty()) {
        throw ConfigError("config lists no problems");
    }
    if (algorithms.empty()) {
        throw ConfigError("config lists no algorithms");
    }
    for (const auto& p : problems) {
        if (!is_benchmark_id(p)) {
            std::string valid;
            for (const auto& id : benchmark_ids()) {
                valid += (valid.empty() ? "" : ", ") + id;
            }
            throw ConfigError("unknown problem '" + p + "'; valid ids: " + valid);
        }
    }
    for (const auto& a : algorithms) {
        parse_algorithm(a);
    }
    if (std::set<std::string>(problems.begin(), problems.end()).size() != problems.size()
        || std::set<std::string>(algorithms.begin(), algorithms.end()).size() != algorithms.size()) {
        throw ConfigError("problem and algorithm lists must not repeat ids");
    }
    if (repetitions == 0) {
        throw ConfigError("repetitions must be positive");
    }
    if (parallel == 0) {
        throw ConfigError("parallel must be positive");
    }
    if (front_points < 2) {
        throw ConfigError("front_points must be at least 2");
    }
    msgw.validate();
    nsga2.validate();
}

auto bench_config_from_json(std::string_view text) -> BenchConfig
{
    const json j = parse_json(text);
    const std::string where = "bench config";
    reject_unknown(j, {"problems", "algorithms", "repetitions", "base_seed", "hv_reference", "distance_form",
                       "front_points", "output_dir", "parallel", "record_wallclock", "merge_published",
                       "published_file", "msgw", "nsga2"},
                   where);
    BenchConfig c;
    if (j.contains("problems") && j["problems"].is_string() && j["problems"] == "all") {
        c.problems = benchmark_ids();
    } else {
        read_field(j, "problems", c.problems, where);
    }
    read_field(j, "algorithms", c.algorithms, where);
    read_field(j, "repetitions", c.repetitions, where);
    read_field(j, "base_seed", c.base_seed, where);
    read_field(j, "front_points", c.front_points, where);
    read_field(j, "parallel", c.parallel, where);
    read_field(j, "record_wallclock", c.record_wallclock, where);
    read_field(j, "merge_published", c.merge_published, where);
    std::string text_field;
    if (j.contains("hv_reference")) {
        read_field(j, "hv_reference", text_field, where);
        c.hv_reference = parse_hv_reference(text_field);
    }
    if (j.contains("distance_form")) {
        read_field(j, "distance_form", text_field, where);
        c.distance_form = parse_distance_aggregate(text_field);
    }
    if (j.contains("output_dir")) {
        read_field(j, "output_dir", text_field, where);
        c.output_dir = text_field;
    }
    if (j.contains("published_file")) {
        read_field(j, "published_file", text_field, where);
        c.published_file = text_field;
    }
    if (j.contains("msgw")) {
        c.msgw = msgw_from_json(j["msgw"]);
    }
    if (j.contains("nsga2")) {
        c.nsga2 = nsga2_from_json(j["nsga2"]);
    }
    return c;
}

auto load_bench_config(const fs::path& path) -> BenchConfig
{
    return bench_config_from_json(read_text(path));
}

auto bench_config_to_json(const BenchConfig& c) -> std::string
{
    json j = fingerprint(c);
    j["repetitions"] = c.repetitions;
    j["output_dir"] = c.output_dir.string();
    j["parallel"] = c.parallel;
    j["record_wallclock"] = c.record_wallclock;
    j["merge_published"] = c.merge_published;
    j["published_file"] = c.published_file.string();
    return j.dump(2) + "\n";
}

auto experiment_id(std::string_view problem, std::string_view algorithm) -> std::string
{
    return std::string(problem) + "/" + std::string(algorithm);
}

auto repetition_seed(std::uint64_t base_seed, std::string_view experiment, std::size_t repetition) -> std::uint64_t
{
    return base_seed + fnv1a64(std::string(experiment) + "#" + std::to_string(repetition));
}

// --- run rows ------------------------------------------------------------

auto format_run_row(const RunRow& r) -> std::string
{
    return r.experiment_id + "," + r.problem + "," + r.algorithm + "," + std::to_string(r.seed) + ","
           + std::to_string(r.evals_used) + "," + format_double(r.hv) + "," + format_double(r.igd) + ","
           + format_double(r.spread) + "," + format_double(r.gd) + "," + format_double(r.wallclock_ms);
}

auto read_runs_csv(const fs::path& path) -> std::vector<RunRow>
{
    std::ifstream in(path);
    if (!in) {
        throw LoadError("cannot open run file " + path.string());
    }
    std::vector<RunRow> rows;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw LoadError(path.string() + ":" + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (lineno == 1) {
            if (line != kRunsHeader) {
                fail("unexpected header");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        const auto cells = split_csv(line);
        if (cells.size() != 10) {
            fail("expected 10 fields, found " + std::to_string(cells.size()));
        }
        RunRow r;
        r.experiment_id = cells[0];
        r.problem = cells[1];
        r.algorithm = cells[2];
        if (!parse_unsigned(cells[3], r.seed)) {
            fail("bad seed '" + cells[3] + "'");
        }
        if (!parse_unsigned(cells[4], r.evals_used)) {
            fail("bad evals_used '" + cells[4] + "'");
        }
        double* targets[] = {&r.hv, &r.igd, &r.spread, &r.gd, &r.wallclock_ms};
        for (std::size_t k = 0; k < 5; ++k) {
            if (!parse_double(cells[5 + k], *targets[k])) {
                fail("bad number '" + cells[5 + k] + "'");
            }
        }
        rows.push_back(std::move(r));
    }
    if (lineno == 0) {
        fail("empty file");
    }
    return rows;
}

void write_runs_csv(const fs::path& path, std::span<const RunRow> rows)
{
    std::string out = std::string(kRunsHeader) + "\n";
    for (const auto& r : rows) {
        out += format_run_row(r) + "\n";
    }
    write_atomically(path, out);
}

auto score_run(const RunRecord& record, std::span<const ObjectiveVector> reference, HvReference hv_reference,
               DistanceAggregate form) -> RunRow
{
    RunRow row;
    row.experiment_id = experiment_id(record.problem, record.algorithm);
    row.problem = record.problem;
    row.algorithm = record.algorithm;
    row.seed = record.seed;
    row.evals_used = record.evaluations;
    const auto front = record.archive_objectives();
    row.hv = hypervolume(front, hv_reference, reference);
    row.igd = igd(front, reference, form);
    row.spread = spread(front, reference);
    row.gd = generational_distance(front, reference, form);
    return row;
}

auto execute_run(const BenchConfig& config, const Problem& problem, Algorithm algorithm, std::uint64_t seed)
    -> RunRecord
{
    if (algorithm == Algorithm::kMsgwFlm) {
        return run(problem, config.msgw, seed);
    }
    return nsga2_run(problem, config.nsga2, seed);
}

// --- summaries -----------------------------------------------------------

auto summarize(std::span<const RunRow> rows) -> std::vector<SummaryRow>
{
    std::vector<std::pair<std::string, std::string>> order;
    std::map<std::pair<std::string, std::string>, std::vector<const RunRow*>> groups;
    for (const auto& r : rows) {
        const auto key = std::make_pair(r.problem, r.algorithm);
        if (!groups.contains(key)) {
            order.push_back(key);
        }
        groups[key].push_back(&r);
    }
    std::vector<SummaryRow> out;
    const std::pair<const char*, double RunRow::*> fields[] = {
        {"hv", &RunRow::hv}, {"igd", &RunRow::igd}, {"spread", &RunRow::spread}, {"gd", &RunRow::gd}};
    for (const auto& key : order) {
        const auto& g = groups[key];
        for (const auto& [name, member] : fields) {
            SummaryRow s;
            s.problem = key.first;
            s.algorithm = key.second;
            s.indicator = name;
            s.runs = g.size();
            double sum = 0.0;
            for (const auto* r : g) {
                sum += r->*member;
            }
            s.mean = sum / static_cast<double>(g.size());
            if (g.size() > 1) {
                double ss = 0.0;
                for (const auto* r : g) {
                    ss += (r->*member - s.mean) * (r->*member - s.mean);
                }
                s.std_dev = std::sqrt(ss / static_cast<double>(g.size() - 1));
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

auto summarize_files(std::span<const fs::path> files) -> std::vector<SummaryRow>
{
    if (files.empty()) {
        throw ConfigError("summarize needs at least one run file");
    }
    std::vector<RunRow> rows;
    for (const auto& f : files) {
        auto part = read_runs_csv(f);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return summarize(rows);
}

auto default_published_file() -> fs::path
{
    return front_data_dir().parent_path() / "published_results.csv";
}

auto load_published(const fs::path& path, const std::vector<std::string>& algorithms) -> std::vector<SummaryRow>
{
    std::ifstream in(path);
    if (!in) {
        throw LoadError("cannot open published values file " + path.string());
    }
    std::vector<SummaryRow> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (lineno == 1 || line.empty()) {
            continue;
        }
        const auto cells = split_csv(line);
        SummaryRow s;
        if (cells.size() != 4 || !parse_double(cells[3], s.mean)) {
            throw LoadError(path.string() + ":" + std::to_string(lineno) + ": malformed published row");
        }
        s.problem = cells[0];
        s.algorithm = cells[1];
        s.indicator = cells[2];
        s.source = "published";
        if (algorithms.empty() || std::find(algorithms.begin(), algorithms.end(), s.algorithm) != algorithms.end()) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

auto format_summary_csv(std::span<const SummaryRow> rows) -> std::string
{
    std::string out = std::string(kSummaryHeader) + "\n";
    for (const auto& s : rows) {
        out += s.problem + "," + s.algorithm + "," + s.indicator + "," + (s.source == "published" ? "" : std::to_string(s.runs))
               + "," + format_double(s.mean) + "," + (s.std_dev ? format_double(*s.std_dev) : "") + "," + s.source
               + "\n";
    }
    return out;
}

void write_summary_csv(const fs::path& path, std::span<const SummaryRow> rows)
{
    write_atomically(path, format_summary_csv(rows));
}

// --- benchmark campaign --------------------------------------------------

auto run_benchmark_campaign(const BenchConfig& config) -> CampaignResult
{
    config.validate();
    ensure_dir(config.output_dir);

    const fs::path manifest = config.output_dir / "campaign.json";
    const std::string print = fingerprint(config).dump(2) + "\n";
    if (fs::exists(manifest)) {
        std::ifstream in(manifest);
        std::ostringstream ss;
        ss << in.rdbuf();
        if (ss.str() != print) {
            throw ConfigError("output directory " + config.output_dir.string()
                              + " holds a campaign with a different configuration");
        }
    } else {
        write_atomically(manifest, print);
    }

    CampaignResult result;
    result.runs_csv = config.output_dir / "runs.csv";
    result.summary_csv = config.output_dir / "summary.csv";

    std::map<std::pair<std::string, std::uint64_t>, RunRow> done;
    if (fs::exists(result.runs_csv)) {
        for (auto& r : read_runs_csv(result.runs_csv)) {
            done.emplace(std::make_pair(r.experiment_id, r.seed), std::move(r));
        }
    }

    struct Task {
        std::size_t problem;
        Algorithm algorithm;
        std::string experiment;
        std::uint64_t seed;
    };
    std::vector<Task> all;
    std::vector<Task> pending;
    for (std::size_t p = 0; p < config.problems.size(); ++p) {
        for (const auto& a : config.algorithms) {
            const auto exp = experiment_id(config.problems[p], a);
            for (std::size_t r = 0; r < config.repetitions; ++r) {
                Task t{p, parse_algorithm(a), exp, repetition_seed(config.base_seed, exp, r)};
                all.push_back(t);
                if (!done.contains({t.experiment, t.seed})) {
                    pending.push_back(t);
                }
            }
        }
    }
    result.resumed = all.size() - pending.size();

    // Reference fronts are loaded once, before any worker starts.
    std::vector<Problem> problems;
    std::vector<std::vector<ObjectiveVector>> fronts;
    for (const auto& id : config.problems) {
        problems.push_back(make_problem(id));
        fronts.push_back(problems.back().reference_front(config.front_points).points);
    }

    std::mutex append_mutex;
    std::ofstream appender;
    if (!pending.empty()) {
        const bool fresh = !fs::exists(result.runs_csv) || fs::file_size(result.runs_csv) == 0;
        appender.open(result.runs_csv, std::ios::app | std::ios::binary);
        if (!appender) {
            throw std::runtime_error("cannot append to " + result.runs_csv.string());
        }
        if (fresh) {
            appender << kRunsHeader << "\n" << std::flush;
        }
    }

    parallel_for(pending.size(), config.parallel, [&](std::size_t i) {
        const auto& t = pending[i];
        const auto start = std::chrono::steady_clock::now();
        const auto record = execute_run(config, problems[t.problem], t.algorithm, t.seed);
        auto row = score_run(record, fronts[t.problem], config.hv_reference, config.distance_form);
        if (config.record_wallclock) {
            const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now()
                                                                                  - start)
                                .count();
            row.wallclock_ms = static_cast<double>(us) / 1000.0;
        }
        std::lock_guard lock(append_mutex);
        appender << format_run_row(row) << "\n" << std::flush;
        done.emplace(std::make_pair(row.experiment_id, row.seed), row);
    });
    result.executed = pending.size();
    if (appender.is_open()) {
        appender.close();
    }

    for (const auto& t : all) {
        result.rows.push_back(done.at({t.experiment, t.seed}));
    }
    write_runs_csv(result.runs_csv, result.rows);

    auto summary = summarize(result.rows);
    if (config.merge_published) {
        const fs::path file = config.published_file.empty() ? default_published_file() : config.published_file;
        const std::set<std::string> wanted(config.problems.begin(), config.problems.end());
        for (auto& s : load_published(file, {"IBEA", "MOEA/D"})) {
            if (wanted.contains(s.problem)) {
                summary.push_back(std::move(s));
            }
        }
    }
    write_summary_csv(result.summary_csv, summary);
    return result;
}

// --- allocation campaign -------------------------------------------------

void AllocConfig::validate() const
{
    if (scenarios.empty()) {
        throw ConfigError("allocation config lists no scenarios");
    }
    for (const auto& s : scenarios) {
        s.validate();
    }
    if (seeds == 0) {
        throw ConfigError("allocation seeds must be positive");
    }
    if (parallel == 0) {
        throw ConfigError("parallel must be positive");
    }
    parse_algorithm(algorithm);
    msgw.validate();
    nsga2.validate();
}

auto alloc_config_from_json(std::string_view text) -> AllocConfig
{
    const json j = parse_json(text);
    const std::string where = "allocation config";
    reject_unknown(j, {"scenarios", "seeds", "base_seed", "algorithm", "msgw", "nsga2", "output_dir", "parallel"},
                   where);
    AllocConfig c;
    read_field(j, "seeds", c.seeds, where);
    read_field(j, "base_seed", c.base_seed, where);
    read_field(j, "algorithm", c.algorithm, where);
    read_field(j, "parallel", c.parallel, where);
    if (j.contains("output_dir")) {
        std::string dir;
        read_field(j, "output_dir", dir, where);
        c.output_dir = dir;
    }
    if (j.contains("msgw")) {
        c.msgw = msgw_from_json(j["msgw"]);
    }
    if (j.contains("nsga2")) {
        c.nsga2 = nsga2_from_json(j["nsga2"]);
    }
    if (!j.contains("scenarios") || !j["scenarios"].is_array()) {
        throw ConfigError("allocation config needs a 'scenarios' array");
    }
    for (const auto& s : j["scenarios"]) {
        const std::string sw = "scenario";
        reject_unknown(s, {"centers", "sites", "cycles", "horizon", "area", "demand", "supply", "penalty"}, sw);
        allocation::ScenarioConfig sc;
        read_field(s, "centers", sc.centers, sw);
        read_field(s, "sites", sc.sites, sw);
        read_field(s, "cycles", sc.cycles, sw);
        read_field(s, "horizon", sc.horizon, sw);
        read_field(s, "area", sc.area, sw);
        read_field(s, "penalty", sc.penalty, sw);
        for (const auto* key : {"demand", "supply"}) {
            if (!s.contains(key)) {
                continue;
            }
            std::vector<double> range;
            read_field(s, key, range, sw);
            if (range.size() != 2) {
                throw ConfigError(std::string("scenario.") + key + " must be a [min, max] pair");
            }
            auto& lo = std::string_view(key) == "demand" ? sc.demand_min : sc.supply_min;
            auto& hi = std::string_view(key) == "demand" ? sc.demand_max : sc.supply_max;
            lo = range[0];
            hi = range[1];
        }
        c.scenarios.push_back(sc);
    }
    return c;
}

auto load_alloc_config(const fs::path& path) -> AllocConfig
{
    return alloc_config_from_json(read_text(path));
}

auto AllocTraceSet::mean_trace() const -> std::vector<double>
{
    std::vector<double> mean(scenario.cycles, 0.0);
    if (traces.empty()) {
        return mean;
    }
    for (const auto& t : traces) {
        for (std::size_t i = 0; i < mean.size(); ++i) {
            mean[i] += t.loss.at(i);
        }
    }
    for (auto& m : mean) {
        m /= static_cast<double>(traces.size());
    }
    return mean;
}

auto run_allocation_campaign(const AllocConfig& config) -> AllocCampaignResult
{
    config.validate();
    ensure_dir(config.output_dir);
    const Algorithm algorithm = parse_algorithm(config.algorithm);

    AllocCampaignResult result;
    struct Task {
        std::size_t set;
        std::size_t index;
    };
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < config.scenarios.size(); ++k) {
        AllocTraceSet set;
        set.scenario = config.scenarios[k];
        const std::string exp = "alloc/" + set.scenario.label();
        for (std::size_t i = 0; i < config.seeds; ++i) {
            set.seeds.push_back(repetition_seed(config.base_seed, exp, i));
            tasks.push_back({k, i});
        }
        set.traces.resize(config.seeds);
        result.sets.push_back(std::move(set));
    }

    parallel_for(tasks.size(), config.parallel, [&](std::size_t n) {
        auto& set = result.sets[tasks[n].set];
        const auto seed = set.seeds[tasks[n].index];
        const auto scenario = allocation::generate_scenario(set.scenario, seed);
        allocation::CycleOptimizer opt;
        if (algorithm == Algorithm::kMsgwFlm) {
            opt = [&](const Problem& p, std::uint64_t s) { return run(p, config.msgw, s); };
        } else {
            opt = [&](const Problem& p, std::uint64_t s) { return nsga2_run(p, config.nsga2, s); };
        }
        set.traces[tasks[n].index] = allocation::rolling_horizon_run(scenario, set.scenario, opt, seed);
    });

    std::string traces = "configuration,centers,sites,seed,cycle,loss,zero_cycle\n";
    std::string means = "configuration,centers,sites,cycle,mean_loss,seeds,zero_fraction\n";
    for (const auto& set : result.sets) {
        const auto& sc = set.scenario;
        const std::string prefix = sc.label() + "," + std::to_string(sc.centers) + "," + std::to_string(sc.sites) + ",";
        std::vector<std::size_t> zero_by(sc.cycles + 1, 0);
        for (std::size_t i = 0; i < set.traces.size(); ++i) {
            const auto zc = set.traces[i].zero_cycle();
            if (zc) {
                ++zero_by[*zc];
            }
            for (std::size_t c = 0; c < set.traces[i].loss.size(); ++c) {
                traces += prefix + std::to_string(set.seeds[i]) + "," + std::to_string(c + 1) + ","
                          + format_double(set.traces[i].loss[c]) + "," + (zc ? std::to_string(*zc) : "") + "\n";
            }
        }
        const auto mean = set.mean_trace();
        std::size_t reached = 0;
        for (std::size_t c = 0; c < mean.size(); ++c) {
            reached += zero_by[c + 1];
            means += prefix + std::to_string(c + 1) + "," + format_double(mean[c]) + ","
                     + std::to_string(set.traces.size()) + ","
                     + format_double(static_cast<double>(reached) / static_cast<double>(set.traces.size())) + "\n";
        }
    }
    result.traces_csv = config.output_dir / "alloc_traces.csv";
    result.mean_csv = config.output_dir / "alloc_mean.csv";
    write_atomically(result.traces_csv, traces);
    write_atomically(result.mean_csv, means);
    return result;
}

// --- fronts --------------------------------------------------------------

auto generate_fronts(const std::vector<std::string>& ids, std::size_t points, const fs::path& output_dir)
    -> std::vector<fs::path>
{
    if (points < 2) {
        throw ConfigError("front generation needs at least 2 points");
    }
    for (const auto& id : ids) {
        if (!is_benchmark_id(id)) {
            throw ConfigError("unknown problem '" + id + "'");
        }
        if (!has_bundled_front(id)) {
            throw ConfigError(id + " has an analytic front; nothing to generate");
        }
    }
    ensure_dir(output_dir);
    std::vector<fs::path> written;
    for (const auto& id : ids) {
        const auto path = output_dir / (id + ".txt");
        write_front_file(path, generate_front(id, points));
        written.push_back(path);
    }
    return written;
}

}  // namespace msgw::harness
