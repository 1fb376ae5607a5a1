#include "msgw/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace msgw {
namespace {

auto euclid(std::span<const double> a, std::span<const double> b) -> double
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

auto nearest(std::span<const double> p, std::span<const ObjectiveVector> set) -> double
{
    double best = kInfinity;
    for (const auto& q : set) {
        best = std::min(best, euclid(p, q));
    }
    return best;
}

auto aggregate(const std::vector<double>& d, DistanceAggregate form) -> double
{
    const auto n = static_cast<double>(d.size());
    if (form == DistanceAggregate::kMean) {
        return std::accumulate(d.begin(), d.end(), 0.0) / n;
    }
    double s = 0.0;
    for (double v : d) {
        s += v * v;
    }
    return std::sqrt(s) / n;
}

void check_same_width(std::span<const ObjectiveVector> a, std::span<const ObjectiveVector> b, const char* what)
{
    const std::size_t m = a.front().size();
    for (const auto& p : a) {
        if (p.size() != m) {
            throw ContractViolation(std::string(what) + ": inconsistent objective count");
        }
    }
    for (const auto& p : b) {
        if (p.size() != m) {
            throw ContractViolation(std::string(what) + ": inconsistent objective count");
        }
    }
}

// 2-D sweep over (x, y) pairs already restricted to the reference box.
auto hv2d(std::vector<std::pair<double, double>> pts, double rx, double ry) -> double
{
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double level = ry;
    for (const auto& [x, y] : pts) {
        if (y < level) {
            area += (rx - x) * (level - y);
            level = y;
        }
    }
    return area;
}

}  // namespace

auto hypervolume(std::span<const ObjectiveVector> front, std::span<const double> ref) -> double
{
    const std::size_t m = ref.size();
    if (m != 2 && m != 3) {
        throw ContractViolation("hypervolume: only two or three objectives are supported");
    }
    std::vector<ObjectiveVector> inside;
    for (const auto& p : front) {
        if (p.size() != m) {
            throw ContractViolation("hypervolume: point and reference differ in length");
        }
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i) {
            ok = ok && p[i] < ref[i];
        }
        if (ok) {
            inside.push_back(p);
        }
    }
    if (inside.empty()) {
        return 0.0;
    }
    if (m == 2) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(inside.size());
        for (const auto& p : inside) {
            pts.emplace_back(p[0], p[1]);
        }
        return hv2d(std::move(pts), ref[0], ref[1]);
    }
    // slice along the third objective
    std::sort(inside.begin(), inside.end(), [](const auto& a, const auto& b) { return a[2] < b[2]; });
    double volume = 0.0;
    std::vector<std::pair<double, double>> active;
    for (std::size_t i = 0; i < inside.size(); ++i) {
        active.emplace_back(inside[i][0], inside[i][1]);
        const double top = i + 1 < inside.size() ? inside[i + 1][2] : ref[2];
        const double depth = top - inside[i][2];
        if (depth > 0.0) {
            volume += depth * hv2d(active, ref[0], ref[1]);
        }
    }
    return volume;
}

auto igd(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference, DistanceAggregate form)
    -> double
{
    if (approx.empty() || reference.empty()) {
        throw ContractViolation("igd: approximation and reference sets must be non-empty");
    }
    check_same_width(approx, reference, "igd");
    std::vector<double> d;
    d.reserve(reference.size());
    for (const auto& r : reference) {
        d.push_back(nearest(r, approx));
    }
    return aggregate(d, form);
}

auto generational_distance(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference,
                           DistanceAggregate form) -> double
{
    if (approx.empty() || reference.empty()) {
        throw ContractViolation("generational_distance: approximation and reference sets must be non-empty");
    }
    check_same_width(approx, reference, "generational_distance");
    std::vector<double> d;
    d.reserve(approx.size());
    for (const auto& a : approx) {
        d.push_back(nearest(a, reference));
    }
    return aggregate(d, form);
}

auto spread(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference) -> double
{
    if (reference.empty()) {
        throw ContractViolation("spread: reference front must be non-empty");
    }
    if (approx.size() < 2) {
        return 1.0;
    }
    check_same_width(approx, reference, "spread");
    const std::size_t m = approx.front().size();
    std::vector<ObjectiveVector> a(approx.begin(), approx.end());
    std::vector<ObjectiveVector> r(reference.begin(), reference.end());
    std::sort(a.begin(), a.end());
    std::sort(r.begin(), r.end());
    double numerator = 0.0;
    double denominator = 0.0;
    if (m == 2) {
        const double df = euclid(a.front(), r.front());
        const double dl = euclid(a.back(), r.back());
        std::vector<double> gaps;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            gaps.push_back(euclid(a[i], a[i + 1]));
        }
        const double mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());
        double dev = 0.0;
        for (double g : gaps) {
            dev += std::fabs(g - mean);
        }
        numerator = df + dl + dev;
        denominator = df + dl + static_cast<double>(gaps.size()) * mean;
    } else {
        double extremes = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const auto it = std::max_element(r.begin(), r.end(), [k](const auto& x, const auto& y) { return x[k] < y[k]; });
            extremes += nearest(*it, a);
        }
        std::vector<double> nn(a.size(), kInfinity);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (i != j) {
                    nn[i] = std::min(nn[i], euclid(a[i], a[j]));
                }
            }
        }
        const double mean = std::accumulate(nn.begin(), nn.end(), 0.0) / static_cast<double>(nn.size());
        double dev = 0.0;
        for (double v : nn) {
            dev += std::fabs(v - mean);
        }
        numerator = extremes + dev;
        denominator = extremes + static_cast<double>(a.size()) * mean;
    }
    if (denominator <= 0.0) {
        return 1.0;
    }
    return numerator / denominator;
}

auto scale_of(std::span<const ObjectiveVector> reference) -> ObjectiveScale
{
    if (reference.empty()) {
        throw ContractViolation("scale_of: empty reference front");
    }
    ObjectiveScale s{reference.front(), reference.front()};
    for (const auto& p : reference) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            s.ideal[i] = std::min(s.ideal[i], p[i]);
            s.nadir[i] = std::max(s.nadir[i], p[i]);
        }
    }
    return s;
}

auto normalize(std::span<const ObjectiveVector> points, const ObjectiveScale& scale) -> std::vector<ObjectiveVector>
{
    std::vector<ObjectiveVector> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        ObjectiveVector q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double range = scale.nadir[i] - scale.ideal[i];
            q[i] = (p[i] - scale.ideal[i]) / (range > 0.0 ? range : 1.0);
        }
        out.push_back(std::move(q));
    }
    return out;
}

auto hypervolume(std::span<const ObjectiveVector> front, HvReference mode,
                 std::span<const ObjectiveVector> reference_front) -> double
{
    if (front.empty()) {
        return 0.0;
    }
    const std::size_t m = front.front().size();
    if (mode == HvReference::kRaw) {
        const std::vector<double> ref(m, 1.0);
        return hypervolume(front, ref);
    }
    const auto scaled = normalize(front, scale_of(reference_front));
    const std::vector<double> ref(m, 1.1);
    return hypervolume(scaled, ref);
}

auto to_string(Indicator i) -> std::string
{
    switch (i) {
    case Indicator::kHv:
        return "hv";
    case Indicator::kIgd:
        return "igd";
    case Indicator::kSpread:
        return "spread";
    case Indicator::kGd:
        return "gd";
    }
    return "?";
}

auto to_string(HvReference r) -> std::string
{
    return r == HvReference::kRaw ? "raw" : "normalized";
}

auto parse_hv_reference(std::string_view s) -> HvReference
{
    if (s == "raw") {
        return HvReference::kRaw;
    }
    if (s == "normalized") {
        return HvReference::kNormalized;
    }
    throw ConfigError("hv reference must be 'raw' or 'normalized', got '" + std::string(s) + "'");
}

auto to_string(DistanceAggregate d) -> std::string
{
    return d == DistanceAggregate::kMean ? "mean" : "rss";
}

auto parse_distance_aggregate(std::string_view s) -> DistanceAggregate
{
    if (s == "mean") {
        return DistanceAggregate::kMean;
    }
    if (s == "rss") {
        return DistanceAggregate::kRootSumSquares;
    }
    throw ConfigError("distance form must be 'mean' or 'rss', got '" + std::string(s) + "'");
}

}  // namespace msgw
