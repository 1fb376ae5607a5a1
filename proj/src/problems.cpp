#include "msgw/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "suites/suites.hpp"

#ifndef MSGW_DEFAULT_DATA_DIR
#define MSGW_DEFAULT_DATA_DIR "data/fronts"
#endif

namespace msgw {

Problem::Problem(std::string id, std::size_t objectives, Bounds bounds, Evaluator evaluator, FrontSampler sampler)
    : id_(std::move(id)),
      objectives_(objectives),
      bounds_(std::move(bounds)),
      evaluator_(std::make_shared<const Evaluator>(std::move(evaluator)))
{
    if (objectives_ == 0 || bounds_.size() == 0) {
        throw ContractViolation("problem " + id_ + ": dimension and objective count must be positive");
    }
    if (sampler) {
        sampler_ = std::make_shared<const FrontSampler>(std::move(sampler));
    }
}

auto Problem::evaluate(std::span<const double> x) const -> ObjectiveVector
{
    ObjectiveVector f(objectives_);
    evaluate(x, f);
    return f;
}

void Problem::evaluate(std::span<const double> x, std::span<double> out) const
{
    if (x.size() != dimension()) {
        throw ContractViolation("evaluate " + id_ + ": expected " + std::to_string(dimension()) + " variables, got "
                                + std::to_string(x.size()));
    }
    if (out.size() != objectives_) {
        throw ContractViolation("evaluate " + id_ + ": output has wrong objective count");
    }
    (*evaluator_)(x, out);
}

auto Problem::reference_front(std::size_t n) const -> ReferenceFront
{
    if (!sampler_) {
        throw ContractViolation("problem " + id_ + " has no reference front");
    }
    return (*sampler_)(n);
}

// --- registry ------------------------------------------------------------

auto benchmark_ids() -> const std::vector<std::string>&
{
    static const std::vector<std::string> ids = {
        "ZDT1",    "ZDT2",    "ZDT3",    "ZDT4",    "ZDT6",    "WFG1",    "WFG2",
        "WFG3",    "WFG4",    "WFG5",    "WFG6",    "WFG7",    "WFG9",    "DTLZ1",
        "DTLZ2",   "DTLZ4",   "DTLZ5",   "DTLZ6",   "DTLZ7",   "LZ09_F1", "LZ09_F2",
        "LZ09_F3", "LZ09_F4", "LZ09_F5", "LZ09_F6", "LZ09_F7", "LZ09_F8", "LZ09_F9",
    };
    return ids;
}

auto is_benchmark_id(std::string_view id) -> bool
{
    const auto& ids = benchmark_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

auto make_problem(std::string_view id) -> Problem
{
    if (!is_benchmark_id(id)) {
        std::string msg = "unknown problem id '" + std::string(id) + "'; valid ids:";
        for (const auto& v : benchmark_ids()) {
            msg += " " + v;
        }
        throw ConfigError(msg);
    }
    if (id.starts_with("ZDT")) {
        return suites::make_zdt(id);
    }
    if (id.starts_with("DTLZ")) {
        return suites::make_dtlz(id);
    }
    if (id.starts_with("WFG")) {
        return suites::make_wfg(id);
    }
    return suites::make_lz09(id);
}

// --- front helpers -------------------------------------------------------

auto nondominated_filter(std::vector<ObjectiveVector> points) -> std::vector<ObjectiveVector>
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<ObjectiveVector> kept;
    if (!points.empty() && points.front().size() == 2) {
        // sweep: a point survives only if it improves the best f2 so far
        double best = std::numeric_limits<double>::infinity();
        for (auto& p : points) {
            if (p[1] < best) {
                best = p[1];
                kept.push_back(std::move(p));
            }
        }
        return kept;
    }
    // After a lexicographic sort a point can only be dominated by an earlier
    // one, and then also by an earlier kept one.
    for (auto& p : points) {
        bool dominated = false;
        for (const auto& q : kept) {
            if (dominates(q, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            kept.push_back(std::move(p));
        }
    }
    return kept;
}

namespace {

auto distance(const ObjectiveVector& a, const ObjectiveVector& b) -> double
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

auto thin_arc_length(std::vector<ObjectiveVector> points, std::size_t n) -> std::vector<ObjectiveVector>
{
    std::sort(points.begin(), points.end());
    const std::size_t size = points.size();
    std::vector<double> steps(size - 1);
    for (std::size_t i = 0; i + 1 < size; ++i) {
        steps[i] = distance(points[i], points[i + 1]);
    }
    std::vector<double> sorted_steps = steps;
    std::nth_element(sorted_steps.begin(), sorted_steps.begin() + static_cast<std::ptrdiff_t>(sorted_steps.size() / 2),
                     sorted_steps.end());
    const double jump = 50.0 * sorted_steps[sorted_steps.size() / 2];
    std::vector<double> cum(size, 0.0);
    for (std::size_t i = 0; i + 1 < size; ++i) {
        cum[i + 1] = cum[i] + (jump > 0.0 && steps[i] > jump ? 0.0 : steps[i]);
    }
    const double total = cum.back();
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < n; ++i) {
        const double target = total * static_cast<double>(i) / static_cast<double>(n - 1);
        auto it = std::lower_bound(cum.begin(), cum.end(), target);
        std::size_t idx = it == cum.end() ? size - 1 : static_cast<std::size_t>(it - cum.begin());
        if (idx > 0 && target - cum[idx - 1] < cum[idx] - target) {
            --idx;
        }
        if (i == 0) {
            idx = 0;
        } else if (i + 1 == n) {
            idx = size - 1;
        }
        if (chosen.empty() || chosen.back() != idx) {
            chosen.push_back(idx);
        }
    }
    std::vector<ObjectiveVector> out;
    out.reserve(chosen.size());
    for (auto idx : chosen) {
        out.push_back(points[idx]);
    }
    return out;
}

auto thin_farthest(std::vector<ObjectiveVector> points, std::size_t n) -> std::vector<ObjectiveVector>
{
    std::sort(points.begin(), points.end());
    const std::size_t size = points.size();
    std::vector<double> nearest(size, kInfinity);
    std::vector<bool> taken(size, false);
    std::vector<std::size_t> chosen;
    std::size_t next = 0;
    for (std::size_t c = 0; c < n; ++c) {
        chosen.push_back(next);
        taken[next] = true;
        double best = -1.0;
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < size; ++i) {
            if (taken[i]) {
                continue;
            }
            nearest[i] = std::min(nearest[i], distance(points[i], points[next]));
            if (nearest[i] > best) {
                best = nearest[i];
                best_idx = i;
            }
        }
        next = best_idx;
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<ObjectiveVector> out;
    out.reserve(chosen.size());
    for (auto idx : chosen) {
        out.push_back(points[idx]);
    }
    return out;
}

}  // namespace

auto thin_front(std::vector<ObjectiveVector> points, std::size_t n) -> std::vector<ObjectiveVector>
{
    if (n == 0 || points.size() <= n) {
        std::sort(points.begin(), points.end());
        return points;
    }
    if (n == 1) {
        std::sort(points.begin(), points.end());
        points.resize(1);
        return points;
    }
    if (points.front().size() == 2) {
        return thin_arc_length(std::move(points), n);
    }
    return thin_farthest(std::move(points), n);
}

// --- bundled files -------------------------------------------------------

namespace {

std::mutex g_front_mutex;
std::map<std::string, std::vector<ObjectiveVector>> g_front_cache;
std::filesystem::path g_data_dir_override;

}  // namespace

auto front_data_dir() -> std::filesystem::path
{
    std::lock_guard lock(g_front_mutex);
    if (!g_data_dir_override.empty()) {
        return g_data_dir_override;
    }
    if (const char* env = std::getenv("MSGW_DATA_DIR"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env) / "fronts";
    }
    return MSGW_DEFAULT_DATA_DIR;
}

void set_front_data_dir(std::filesystem::path dir)
{
    std::lock_guard lock(g_front_mutex);
    g_data_dir_override = std::move(dir);
    g_front_cache.clear();
}

auto has_bundled_front(std::string_view id) -> bool
{
    return id.starts_with("WFG") || id.starts_with("LZ09");
}

auto read_front_file(const std::filesystem::path& path) -> std::vector<ObjectiveVector>
{
    std::ifstream in(path);
    if (!in) {
        throw LoadError("cannot open reference front file " + path.string());
    }
    std::vector<ObjectiveVector> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        ObjectiveVector p;
        double v = 0.0;
        while (row >> v) {
            p.push_back(v);
        }
        if (!row.eof()) {
            throw LoadError(path.string() + ":" + std::to_string(line_no) + ": malformed value");
        }
        if (p.empty()) {
            continue;
        }
        if (!points.empty() && p.size() != points.front().size()) {
            throw LoadError(path.string() + ":" + std::to_string(line_no) + ": inconsistent objective count");
        }
        points.push_back(std::move(p));
    }
    if (points.empty()) {
        throw LoadError("reference front file " + path.string() + " is empty");
    }
    return points;
}

void write_front_file(const std::filesystem::path& path, std::span<const ObjectiveVector> points)
{
    std::ofstream out(path);
    if (!out) {
        throw LoadError("cannot write reference front file " + path.string());
    }
    char buf[64];
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.15f", p[i]);
            out << (i ? " " : "") << buf;
        }
        out << '\n';
    }
}

auto generate_front(std::string_view id, std::size_t n) -> std::vector<ObjectiveVector>
{
    std::vector<ObjectiveVector> dense;
    if (id.starts_with("WFG")) {
        dense = suites::wfg_front_dense(id, 200001);
    } else if (id.starts_with("LZ09")) {
        dense = suites::lz09_front_dense(id, id == "LZ09_F6" ? n : 200001);
    } else {
        throw ConfigError("no generated front for " + std::string(id));
    }
    auto front = thin_front(nondominated_filter(std::move(dense)), n);
    // round to the file precision so that the written front is exactly
    // what readers see, then re-filter
    char buf[64];
    for (auto& p : front) {
        for (auto& v : p) {
            std::snprintf(buf, sizeof buf, "%.15f", v);
            v = std::strtod(buf, nullptr);
        }
    }
    return nondominated_filter(std::move(front));
}

namespace suites {

auto bundled_sampler(std::string id) -> FrontSampler
{
    return [id = std::move(id)](std::size_t n) -> ReferenceFront {
        const auto dir = front_data_dir();
        std::vector<ObjectiveVector> points;
        {
            std::lock_guard lock(g_front_mutex);
            auto it = g_front_cache.find(id);
            if (it != g_front_cache.end()) {
                points = it->second;
            }
        }
        if (points.empty()) {
            const auto path = dir / (id + ".txt");
            if (!std::filesystem::exists(path)) {
                throw LoadError("missing bundled reference front for " + id + " (expected " + path.string() + ")");
            }
            points = read_front_file(path);
            std::lock_guard lock(g_front_mutex);
            g_front_cache.emplace(id, points);
        }
        return {thin_front(std::move(points), n), FrontSource::kBundledFile};
    };
}

}  // namespace suites
}  // namespace msgw
