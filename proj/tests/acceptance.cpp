// Runs acceptance criteria 1-10 and prints one PASS/FAIL line for each.
// By default the exit status is nonzero only when a criterion could not be
// evaluated (it threw). With --strict it is the number of FAIL lines.
//
//   acceptance [--only 3,8] [--seeds-scale 1.0] [--strict] [--report file]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msgw/allocation.hpp"
#include "msgw/harness.hpp"
#include "msgw/nsga2.hpp"
#include "msgw/optimizer.hpp"
#include "msgw/ranking.hpp"
#include "oracles.hpp"

using namespace msgw;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

auto fmt(double v, int prec = 4) -> std::string
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    return buf;
}

auto mean(const std::vector<double>& v) -> double
{
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

auto median(std::vector<double> v) -> double
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

auto seconds_since(std::chrono::steady_clock::time_point t0) -> double
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

auto hv_raw(const std::vector<ObjectiveVector>& front) -> double
{
    const std::vector<double> ref(front.empty() ? 2 : front[0].size(), 1.0);
    return hypervolume(std::span<const ObjectiveVector>(front), std::span<const double>(ref));
}

auto criterion1() -> Outcome
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 gen(1001);
    std::size_t mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + gen() % 50;
        const std::size_t m = t % 2 ? 3 : 2;
        const auto pts = oracle::random_points(n, m, gen);
        const auto want = oracle::front_indices(pts);
        const auto part = fast_nondominated_sort(std::span<const ObjectiveVector>(pts));
        std::vector<std::size_t> got(n, SIZE_MAX);
        for (std::size_t f = 0; f < part.fronts.size(); ++f) {
            for (auto i : part.fronts[f]) {
                got[i] = f;
            }
        }
        mismatches += got == want ? 0 : 1;
    }
    const double secs = seconds_since(t0);
    return {mismatches == 0 && secs < 5.0,
            std::to_string(mismatches) + " mismatching populations of 200, " + fmt(secs, 3) + " s"};
}

auto criterion2() -> Outcome
{
    const std::vector<ObjectiveVector> two = {{0, 0.5}, {0.5, 0}};
    const double hv2 = hv_raw(two);
    const double zdt1 = hv_raw(make_problem("ZDT1").reference_front(1000).points);
    std::mt19937_64 gen(1002);
    std::size_t outside = 0;
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const auto front = oracle::random_front2(5 + gen() % 30, gen);
        const auto mc = oracle::mc_hypervolume(front, {1.0, 1.0}, 1'000'000, 5000 + t);
        const double z = std::fabs(hv_raw(front) - mc.value) / mc.std_error;
        worst = std::max(worst, z);
        outside += z > 3.0 ? 1 : 0;
    }
    const bool pass = std::fabs(hv2 - 0.75) <= 1e-12 && std::fabs(zdt1 - 2.0 / 3.0) <= 1e-3 && outside == 0;
    return {pass, "HV{(0,.5),(.5,0)}=" + fmt(hv2, 17) + ", ZDT1 front " + fmt(zdt1, 6) + ", MC worst " + fmt(worst, 3)
                      + " SE"};
}

struct SeedStats {
    std::vector<double> hv;
    std::vector<double> igd;
    std::vector<double> igd_rss;
};

auto msgw_stats(const std::string& id, std::size_t seeds) -> SeedStats
{
    const auto problem = make_problem(id);
    const auto ref = problem.reference_front().points;
    SeedStats s;
    const AlgorithmParams params;
    for (std::size_t k = 0; k < seeds; ++k) {
        const auto seed = harness::repetition_seed(0, harness::experiment_id(id, kMsgwName), k);
        const auto front = run(problem, params, seed).archive_objectives();
        s.hv.push_back(hv_raw(front));
        s.igd.push_back(igd(front, ref));
        s.igd_rss.push_back(igd(front, ref, DistanceAggregate::kRootSumSquares));
    }
    return s;
}

auto criterion3(std::size_t seeds) -> Outcome
{
    const std::vector<std::pair<std::string, double>> targets = {{"ZDT1", 0.661}, {"ZDT2", 0.328}, {"ZDT4", 0.661}};
    bool pass = true;
    std::string detail;
    for (const auto& [id, published] : targets) {
        const auto s = msgw_stats(id, seeds);
        const double hv = mean(s.hv);
        const double ig = mean(s.igd);
        const bool ok = std::fabs(hv - published) <= 0.02 && ig <= 1e-3;
        pass = pass && ok;
        detail += (detail.empty() ? "" : "; ") + id + " HV " + fmt(hv) + " (published " + fmt(published, 3) + ") IGD "
                  + fmt(ig, 3) + " [rss " + fmt(mean(s.igd_rss), 3) + "]" + (ok ? "" : " x");
    }
    return {pass, detail};
}

auto criterion4(std::size_t seeds) -> Outcome
{
    const auto problem = make_problem("ZDT1");
    std::vector<double> hv;
    for (std::size_t k = 0; k < seeds; ++k) {
        const auto seed = harness::repetition_seed(0, harness::experiment_id("ZDT1", kNsga2Name), k);
        hv.push_back(hv_raw(nsga2_run(problem, Nsga2Params{}, seed).archive_objectives()));
    }
    const double m = mean(hv);
    return {m >= 0.64, "NSGA-II ZDT1 mean HV " + fmt(m) + " over " + std::to_string(seeds) + " seeds"};
}

auto criterion5() -> Outcome
{
    RunOptions opts;
    opts.check_invariants = true;
    const auto rec = run(make_problem("ZDT1"), AlgorithmParams{}, 5, opts);
    std::size_t over = 0;
    for (const auto& g : rec.generations) {
        over += g.archive_size > 100 ? 1 : 0;
    }
    return {rec.invariant_violations == 0 && over == 0,
            std::to_string(rec.invariant_violations) + " violations over " + std::to_string(rec.generations.size())
                + " archive updates"};
}

auto slurp(const fs::path& p) -> std::string
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

auto criterion6() -> Outcome
{
    const auto problem = make_problem("ZDT3");
    AlgorithmParams p;
    p.max_fitness_evals = 5000;
    const bool records = to_json(run(problem, p, 66)) == to_json(run(problem, p, 66))
                         && to_json(nsga2_run(problem, Nsga2Params{}, 66)) == to_json(nsga2_run(problem, Nsga2Params{}, 66));

    const fs::path root = fs::temp_directory_path() / "msgw-acceptance-determinism";
    fs::remove_all(root);
    harness::BenchConfig c;
    c.problems = {"ZDT1", "DTLZ2"};
    c.algorithms = {kMsgwName, kNsga2Name};
    c.repetitions = 2;
    c.record_wallclock = false;
    c.msgw.max_fitness_evals = 2000;
    c.nsga2.max_fitness_evals = 2000;
    std::vector<std::string> outputs;
    for (const char* sub : {"a", "b"}) {
        c.output_dir = root / sub;
        const auto r = harness::run_benchmark_campaign(c);
        outputs.push_back(slurp(r.runs_csv) + slurp(r.summary_csv));
    }
    fs::remove_all(root);
    const bool csv = outputs[0] == outputs[1];
    return {records && csv, std::string("run records ") + (records ? "identical" : "DIFFER") + ", campaign CSVs "
                                + (csv ? "identical" : "DIFFER")};
}

// IGD of the whole random initial population, replayed from the run seed.
auto initial_population_igd(const Problem& problem, std::uint64_t seed, std::size_t size,
                            const std::vector<ObjectiveVector>& ref) -> double
{
    RandomSource rng(seed);
    const auto& b = problem.bounds();
    std::vector<ObjectiveVector> pop;
    for (std::size_t i = 0; i < size; ++i) {
        DecisionVector x(problem.dimension());
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = rng.uniform(b.lower[j], b.upper[j]);
        }
        pop.push_back(problem.evaluate(x));
    }
    return igd(pop, ref);
}

auto criterion7(std::size_t seeds) -> Outcome
{
    const AlgorithmParams params;
    std::string failing;
    std::size_t checked = 0;
    double worst = std::numeric_limits<double>::infinity();
    std::string worst_id;
    for (const auto& id : benchmark_ids()) {
        if (id.starts_with("ZDT")) {
            continue;
        }
        const auto problem = make_problem(id);
        const auto ref = problem.reference_front().points;
        std::vector<double> ratios;
        for (std::size_t k = 0; k < seeds; ++k) {
            const auto seed = harness::repetition_seed(0, harness::experiment_id(id, kMsgwName), k);
            const double before = initial_population_igd(problem, seed, params.population_size, ref);
            const double after = igd(run(problem, params, seed).archive_objectives(), ref);
            ratios.push_back(after > 0.0 ? before / after : std::numeric_limits<double>::infinity());
        }
        const double med = median(ratios);
        ++checked;
        if (med < worst) {
            worst = med;
            worst_id = id;
        }
        if (med < 5.0) {
            failing += (failing.empty() ? "" : " ") + id + "(" + fmt(med, 3) + "x)";
        }
    }
    return {failing.empty(), std::to_string(checked) + " problems; weakest " + worst_id + " " + fmt(worst, 3) + "x"
                                 + (failing.empty() ? "" : "; below 5x: " + failing)};
}

auto criterion8(std::size_t seeds) -> Outcome
{
    const allocation::ScenarioConfig cfg;
    const AlgorithmParams params;
    std::vector<allocation::LossTrace> traces;
    std::map<std::size_t, std::size_t> zero_at;
    std::size_t never = 0;
    for (std::size_t k = 0; k < seeds; ++k) {
        const auto seed = harness::repetition_seed(0, "alloc/" + cfg.label(), k);
        const auto sc = allocation::generate_scenario(cfg, seed);
        traces.push_back(allocation::rolling_horizon_run(sc, cfg, params, seed));
        if (const auto z = traces.back().zero_cycle()) {
            ++zero_at[*z];
        } else {
            ++never;
        }
    }
    std::vector<double> m(cfg.cycles, 0.0);
    std::size_t final_zero = 0;
    for (const auto& t : traces) {
        for (std::size_t c = 0; c < cfg.cycles; ++c) {
            m[c] += t.loss[c] / static_cast<double>(traces.size());
        }
        final_zero += t.loss.back() == 0.0 ? 1 : 0;
    }
    std::size_t pairs = 0;
    std::size_t down = 0;
    for (std::size_t c = 1; c < m.size(); ++c) {
        ++pairs;
        down += m[c] <= m[c - 1] ? 1 : 0;
    }
    const double monotone = static_cast<double>(down) / static_cast<double>(pairs);
    const double zero_frac = static_cast<double>(final_zero) / static_cast<double>(traces.size());
    std::string trace;
    for (double v : m) {
        trace += (trace.empty() ? "" : " ") + fmt(v, 3);
    }
    std::string dist;
    for (const auto& [cycle, count] : zero_at) {
        dist += " c" + std::to_string(cycle) + ":" + std::to_string(count);
    }
    dist += " never:" + std::to_string(never);
    return {monotone >= 0.9 && zero_frac >= 0.5, "mean loss [" + trace + "], non-increasing pairs " + fmt(monotone, 3)
                                                     + ", zero at final cycle " + fmt(zero_frac, 3)
                                                     + ", first-zero cycles" + dist};
}

auto criterion9() -> Outcome
{
    std::mt19937_64 gen(1009);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t m = t % 4 == 3 ? 3 : 2;
        const auto approx = oracle::random_points(5 + gen() % 60, m, gen);
        const auto ref = oracle::random_points(20 + gen() % 200, m, gen);
        const double sp = m == 2 ? oracle::spread2(approx, ref) : oracle::spread_nn(approx, ref);
        worst = std::max({worst, std::fabs(igd(approx, ref) - oracle::igd(approx, ref)),
                          std::fabs(generational_distance(approx, ref) - oracle::gd(approx, ref)),
                          std::fabs(spread(approx, ref) - sp)});
    }
    return {worst <= 1e-12, "largest deviation " + fmt(worst, 3) + " over 100 instance pairs"};
}

auto criterion10() -> Outcome
{
    std::vector<std::string> failed;
    auto expect = [&](bool ok, const char* name) {
        if (!ok) {
            failed.emplace_back(name);
        }
    };
    auto close = [](const std::vector<double>& a, const std::vector<double>& b) {
        if (a.size() != b.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (std::fabs(a[i] - b[i]) > 1e-12) {
                return false;
            }
        }
        return true;
    };
    auto pinned = [](double a, double r1, double r2, std::size_t d) {
        return WolfCoefficients::from_draws(a, std::vector<double>(d, r1), std::vector<double>(d, r2));
    };

    const std::vector<double> x = {0.9, 0.1, 0.4};
    const std::vector<double> al = {0.2, 0.3, 0.7};
    const std::vector<double> be = {0.5, 0.8, 0.1};
    const std::vector<double> de = {0.6, 0.2, 0.9};
    std::vector<double> avg(3);
    for (std::size_t i = 0; i < 3; ++i) {
        avg[i] = (al[i] + be[i] + de[i]) / 3.0;
    }
    const auto half = pinned(2.0, 0.5, 0.5, 3);
    expect(close(wolf_move(x, al, be, de, {half, half, half}), avg), "wolf r1=r2=0.5 a=2");
    const auto a0 = pinned(1.0, 0.5, 0.8, 3);
    expect(close(wolf_move(x, al, al, al, {a0, a0, a0}), al), "wolf identical leaders A=0");
    const auto z1 = pinned(0.0, 0.13, 0.6, 3);
    const auto z2 = pinned(0.0, 0.91, 0.6, 3);
    expect(close(wolf_move(x, al, be, de, {z1, z1, z1}), wolf_move(x, al, be, de, {z2, z2, z2})), "wolf a=0");

    RandomSource rng(10);
    const std::vector<double> cand = {1, 2, 3, 4, 5};
    const std::vector<double> par = {-1, -2, -3, -4, -5};
    bool cr1 = true;
    bool cr0 = true;
    bool same = true;
    for (int t = 0; t < 1000; ++t) {
        cr1 = cr1 && crossover(cand, par, 1.0, rng) == cand;
        const auto o = crossover(cand, par, 0.0, rng);
        std::size_t from = 0;
        for (std::size_t i = 0; i < 5; ++i) {
            from += o[i] == cand[i] ? 1 : 0;
            cr0 = cr0 && (o[i] == cand[i] || o[i] == par[i]);
        }
        cr0 = cr0 && from == 1;
        same = same && crossover(cand, cand, 0.5, rng) == cand;
    }
    expect(cr1, "crossover CR=1");
    expect(cr0, "crossover CR=0");
    expect(same, "crossover identical parents");

    expect(std::fabs(levy_sigma(1.4) - 0.7596786792539806) <= 1e-12, "levy sigma 1.4");
    const auto steps = levy_step(100000, 2.0, rng);
    double sq = 0.0;
    for (double s : steps) {
        sq += s * s;
    }
    expect(std::isfinite(sq), "levy beta 2 variance");
    const auto st = levy_step(3, 1.4, rng);
    expect(levy_move(x, x, st, 0.01) == x, "levy at alpha");

    std::vector<Individual> pop;
    for (int i = 1; i <= 9; ++i) {
        Individual ind;
        ind.decision = {static_cast<double>(i)};
        ind.objectives = {static_cast<double>(i), 0.0};
        pop.push_back(ind);
    }
    const auto plex = partition_memeplexes(pop, 3);
    expect(plex[0].members[1].decision[0] == 4 && plex[2].members[2].decision[0] == 9, "memeplex 9/3");

    ParetoArchive arc(3);
    std::vector<Individual> four;
    for (const auto& f : std::vector<ObjectiveVector>{{0, 3}, {1, 1}, {1.1, 0.9}, {3, 0}}) {
        Individual ind;
        ind.decision = {f[0]};
        ind.objectives = f;
        four.push_back(ind);
    }
    arc.update(four);
    auto kept = arc.objectives();
    std::sort(kept.begin(), kept.end());
    expect(kept == std::vector<ObjectiveVector>{{0, 3}, {1, 1}, {3, 0}}, "archive eviction");

    AlgorithmParams once;
    once.max_fitness_evals = once.population_size;
    expect(run(make_problem("ZDT1"), once, 4).evaluations == 100, "MaxFit == P");

    std::string detail = std::to_string(13 - failed.size()) + "/13 examples";
    for (const auto& f : failed) {
        detail += "; failed: " + f;
    }
    return {failed.empty(), detail};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::vector<int> only;
    double scale = 1.0;
    app.add_option("--only", only, "Criteria to run (default: all)")->delimiter(',')->check(CLI::Range(1, 10));
    app.add_option("--seeds-scale", scale, "Multiply every seed count (for quick checks)")->check(CLI::Range(0.01, 10.0));
    bool strict = false;
    std::string report;
    app.add_flag("--strict", strict, "Exit nonzero when any criterion fails");
    app.add_option("--report", report, "Also write the result lines to this file");
    CLI11_PARSE(app, argc, argv);

    auto seeds = [scale](std::size_t n) { return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(n * scale))); };
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, criterion1},
        {2, criterion2},
        {3, [&] { return criterion3(seeds(20)); }},
        {4, [&] { return criterion4(seeds(20)); }},
        {5, criterion5},
        {6, criterion6},
        {7, [&] { return criterion7(seeds(10)); }},
        {8, [&] { return criterion8(seeds(30)); }},
        {9, criterion9},
        {10, criterion10},
    };
    const std::set<int> wanted(only.begin(), only.end());
    int failures = 0;
    int errors = 0;
    std::string lines;
    for (const auto& [n, fn] : criteria) {
        if (!wanted.empty() && !wanted.contains(n)) {
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
            ++errors;
        }
        failures += o.pass ? 0 : 1;
        char head[64];
        std::snprintf(head, sizeof head, "criterion %2d: %s  ", n, o.pass ? "PASS" : "FAIL");
        char tail[32];
        std::snprintf(tail, sizeof tail, "  (%.1f s)\n", seconds_since(t0));
        const std::string line = head + o.detail + tail;
        std::fputs(line.c_str(), stdout);
        std::fflush(stdout);
        lines += line;
    }
    std::printf("%d of %zu criteria failed\n", failures, wanted.empty() ? criteria.size() : wanted.size());
    if (!report.empty()) {
        std::ofstream(report) << lines;
    }
    if (errors > 0) {
        return 2;
    }
    return strict ? std::min(failures, 125) : 0;
}
