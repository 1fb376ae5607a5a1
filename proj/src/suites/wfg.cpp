#include <algorithm>
#include <cmath>
#include <numbers>

#include "suites.hpp"

namespace msgw::suites {
namespace {

using std::numbers::pi;

constexpr std::size_t kObjectives = 2;
constexpr std::size_t kPosition = 4;
constexpr std::size_t kDistance = 20;

auto to_unit(double v) -> double { return std::clamp(v, 0.0, 1.0); }

// --- transformation functions -------------------------------------------

auto b_poly(double y, double alpha) -> double { return to_unit(std::pow(y, alpha)); }

auto b_flat(double y, double a, double b, double c) -> double
{
    const double t1 = std::min(0.0, std::floor(y - b)) * a * (b - y) / b;
    const double t2 = std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
    return to_unit(a + t1 - t2);
}

auto b_param(double y, double u, double a, double b, double c) -> double
{
    const double v = a - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + a);
    return to_unit(std::pow(y, b + (c - b) * v));
}

auto s_linear(double y, double a) -> double
{
    return to_unit(std::fabs(y - a) / std::fabs(std::floor(a - y) + a));
}

auto s_decept(double y, double a, double b, double c) -> double
{
    const double t1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    const double t2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return to_unit(1.0 + (std::fabs(y - a) - b) * (t1 + t2 + 1.0 / b));
}

auto s_multi(double y, double a, double b, double c) -> double
{
    const double tmp = std::fabs(y - c) / (2.0 * (std::floor(c - y) + c));
    return to_unit((1.0 + std::cos((4.0 * a + 2.0) * pi * (0.5 - tmp)) + 4.0 * b * tmp * tmp) / (b + 2.0));
}

auto r_sum(std::span<const double> y, std::span<const double> w) -> double
{
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return to_unit(num / den);
}

auto r_sum(std::span<const double> y) -> double
{
    std::vector<double> w(y.size(), 1.0);
    return r_sum(y, w);
}

auto r_nonsep(std::span<const double> y, std::size_t a) -> double
{
    const std::size_t n = y.size();
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 2 <= a; ++k) {
            num += std::fabs(y[j] - y[(j + k + 1) % n]);
        }
    }
    const double half = std::ceil(static_cast<double>(a) / 2.0);
    const double den = static_cast<double>(n) / static_cast<double>(a) * half
                       * (1.0 + 2.0 * static_cast<double>(a) - 2.0 * half);
    return to_unit(num / den);
}

// --- shape functions (m is 1-based) ------------------------------------

auto convex(std::span<const double> x, std::size_t m) -> double
{
    const std::size_t big_m = x.size();
    double r = 1.0;
    for (std::size_t i = 1; i <= big_m - m; ++i) {
        r *= 1.0 - std::cos(x[i - 1] * pi / 2.0);
    }
    if (m != 1) {
        r *= 1.0 - std::sin(x[big_m - m] * pi / 2.0);
    }
    return r;
}

auto concave(std::span<const double> x, std::size_t m) -> double
{
    const std::size_t big_m = x.size();
    double r = 1.0;
    for (std::size_t i = 1; i <= big_m - m; ++i) {
        r *= std::sin(x[i - 1] * pi / 2.0);
    }
    if (m != 1) {
        r *= std::cos(x[big_m - m] * pi / 2.0);
    }
    return r;
}

auto linear(std::span<const double> x, std::size_t m) -> double
{
    const std::size_t big_m = x.size();
    double r = 1.0;
    for (std::size_t i = 1; i <= big_m - m; ++i) {
        r *= x[i - 1];
    }
    if (m != 1) {
        r *= 1.0 - x[big_m - m];
    }
    return r;
}

auto mixed(std::span<const double> x, double a, double alpha) -> double
{
    const double tmp = 2.0 * a * pi;
    return std::pow(1.0 - x[0] - std::cos(tmp * x[0] + pi / 2.0) / tmp, alpha);
}

auto disc(std::span<const double> x, double a, double alpha, double beta) -> double
{
    const double c = std::cos(a * std::pow(x[0], beta) * pi);
    return 1.0 - std::pow(x[0], alpha) * c * c;
}

enum class Shape { kConvexMixed, kConvexDisc, kLinear, kConcave };

// Maps the reduced parameter vector t (length M) to objectives.
void finish(std::span<const double> t, Shape shape, bool degenerate, std::span<double> f)
{
    const std::size_t m = f.size();
    std::vector<double> x(m);
    x[m - 1] = t[m - 1];
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double a = (degenerate && i > 0) ? 0.0 : 1.0;
        x[i] = std::max(t[m - 1], a) * (t[i] - 0.5) + 0.5;
    }
    std::vector<double> h(m);
    for (std::size_t k = 1; k <= m; ++k) {
        switch (shape) {
        case Shape::kConvexMixed:
            h[k - 1] = k < m ? convex(x, k) : mixed(x, 5.0, 1.0);
            break;
        case Shape::kConvexDisc:
            h[k - 1] = k < m ? convex(x, k) : disc(x, 5.0, 1.0, 1.0);
            break;
        case Shape::kLinear:
            h[k - 1] = linear(x, k);
            break;
        case Shape::kConcave:
            h[k - 1] = concave(x, k);
            break;
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        f[k] = x[m - 1] + 2.0 * static_cast<double>(k + 1) * h[k];
    }
}

// Reduction over position groups and the distance block.
auto reduce_sum(std::span<const double> y, std::size_t k, std::size_t m, bool index_weights) -> std::vector<double>
{
    std::vector<double> t(m);
    const std::size_t group = k / (m - 1);
    auto weights = [&](std::size_t from, std::size_t to) {
        std::vector<double> w;
        for (std::size_t i = from; i < to; ++i) {
            w.push_back(index_weights ? 2.0 * static_cast<double>(i + 1) : 1.0);
        }
        return w;
    };
    for (std::size_t i = 0; i + 1 < m; ++i) {
        auto w = weights(i * group, (i + 1) * group);
        t[i] = r_sum(y.subspan(i * group, group), w);
    }
    auto w = weights(k, y.size());
    t[m - 1] = r_sum(y.subspan(k), w);
    return t;
}

auto reduce_nonsep(std::span<const double> y, std::size_t k, std::size_t m) -> std::vector<double>
{
    std::vector<double> t(m);
    const std::size_t group = k / (m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        t[i] = r_nonsep(y.subspan(i * group, group), group);
    }
    t[m - 1] = r_nonsep(y.subspan(k), y.size() - k);
    return t;
}

// Pairs distance variables for WFG2/3.
auto pair_nonsep(std::span<const double> y, std::size_t k) -> std::vector<double>
{
    std::vector<double> out(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k));
    const std::size_t l = y.size() - k;
    for (std::size_t i = 0; i < l / 2; ++i) {
        out.push_back(r_nonsep(y.subspan(k + 2 * i, 2), 2));
    }
    return out;
}

auto wfg_number(std::string_view id) -> int
{
    if (id.size() == 4 && id.substr(0, 3) == "WFG" && id[3] >= '1' && id[3] <= '9' && id[3] != '8') {
        return id[3] - '0';
    }
    return 0;
}

void evaluate_wfg(int number, std::span<const double> z, std::span<double> f)
{
    const std::size_t k = kPosition;
    const std::size_t m = f.size();
    const std::size_t n = z.size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = to_unit(z[i] / (2.0 * static_cast<double>(i + 1)));
    }

    std::vector<double> t;
    Shape shape = Shape::kConcave;
    bool degenerate = false;
    switch (number) {
    case 1:
        for (std::size_t i = k; i < n; ++i) {
            y[i] = s_linear(y[i], 0.35);
        }
        for (std::size_t i = k; i < n; ++i) {
            y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
        }
        for (auto& v : y) {
            v = b_poly(v, 0.02);
        }
        t = reduce_sum(y, k, m, true);
        shape = Shape::kConvexMixed;
        break;
    case 2:
    case 3:
        for (std::size_t i = k; i < n; ++i) {
            y[i] = s_linear(y[i], 0.35);
        }
        y = pair_nonsep(y, k);
        t = reduce_sum(y, k, m, false);
        shape = number == 2 ? Shape::kConvexDisc : Shape::kLinear;
        degenerate = number == 3;
        break;
    case 4:
        for (auto& v : y) {
            v = s_multi(v, 30.0, 10.0, 0.35);
        }
        t = reduce_sum(y, k, m, false);
        break;
    case 5:
        for (auto& v : y) {
            v = s_decept(v, 0.35, 0.001, 0.05);
        }
        t = reduce_sum(y, k, m, false);
        break;
    case 6:
        for (std::size_t i = k; i < n; ++i) {
            y[i] = s_linear(y[i], 0.35);
        }
        t = reduce_nonsep(y, k, m);
        break;
    case 7: {
        std::vector<double> biased = y;
        for (std::size_t i = 0; i < k; ++i) {
            biased[i] = b_param(y[i], r_sum(std::span<const double>(y).subspan(i + 1)), 0.98 / 49.98, 0.02, 50.0);
        }
        y = std::move(biased);
        for (std::size_t i = k; i < n; ++i) {
            y[i] = s_linear(y[i], 0.35);
        }
        t = reduce_sum(y, k, m, false);
        break;
    }
    case 9: {
        std::vector<double> biased = y;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            biased[i] = b_param(y[i], r_sum(std::span<const double>(y).subspan(i + 1)), 0.98 / 49.98, 0.02, 50.0);
        }
        y = std::move(biased);
        for (std::size_t i = 0; i < k; ++i) {
            y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
        }
        for (std::size_t i = k; i < n; ++i) {
            y[i] = s_multi(y[i], 30.0, 95.0, 0.35);
        }
        t = reduce_nonsep(y, k, m);
        break;
    }
    default:
        throw ContractViolation("evaluate_wfg: unsupported instance");
    }
    finish(t, shape, degenerate, f);
}

}  // namespace

auto make_wfg(std::string_view id) -> Problem
{
    const int number = wfg_number(id);
    if (number == 0) {
        throw ConfigError("unknown WFG problem: " + std::string(id));
    }
    const std::size_t d = kPosition + kDistance;
    std::vector<double> lo(d, 0.0);
    std::vector<double> hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        hi[i] = 2.0 * static_cast<double>(i + 1);
    }
    Evaluator eval = [number](std::span<const double> z, std::span<double> f) { evaluate_wfg(number, z, f); };
    return {std::string(id), kObjectives, Bounds(std::move(lo), std::move(hi)), std::move(eval),
            bundled_sampler(std::string(id))};
}

// On the Pareto set every distance parameter sits at its optimum, so the
// reduced distance value is 0 and f = S * h(x1) for x1 in [0, 1].
auto wfg_front_dense(std::string_view id, std::size_t samples) -> std::vector<ObjectiveVector>
{
    const int number = wfg_number(id);
    if (number == 0) {
        throw ConfigError("unknown WFG problem: " + std::string(id));
    }
    Shape shape = Shape::kConcave;
    if (number == 1) {
        shape = Shape::kConvexMixed;
    } else if (number == 2) {
        shape = Shape::kConvexDisc;
    } else if (number == 3) {
        shape = Shape::kLinear;
    }
    std::vector<ObjectiveVector> dense;
    dense.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x1 = static_cast<double>(i) / static_cast<double>(samples - 1);
        const double t[kObjectives] = {x1, 0.0};
        ObjectiveVector f(kObjectives);
        finish(t, shape, number == 3, f);
        dense.push_back(std::move(f));
    }
    return dense;
}

}  // namespace msgw::suites
