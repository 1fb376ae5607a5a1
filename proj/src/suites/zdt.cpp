#include <cmath>
#include <numbers>

#include "suites.hpp"

namespace msgw::suites {
namespace {

using std::numbers::pi;

auto tail_sum(std::span<const double> x) -> double
{
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        s += x[i];
    }
    return s;
}

// Parametrized by t = sqrt(f1) so samples are evenly spaced in f2.
auto convex_front(std::size_t n) -> ReferenceFront
{
    ReferenceFront front;
    if (n < 2) {
        n = 2;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        front.points.push_back({t * t, 1.0 - t});
    }
    return front;
}

auto concave_front(std::size_t n, double f1_min) -> ReferenceFront
{
    ReferenceFront front;
    if (n < 2) {
        n = 2;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        const double f1 = f1_min + (1.0 - f1_min) * t;
        front.points.push_back({f1, 1.0 - f1 * f1});
    }
    return front;
}

auto zdt3_front(std::size_t n) -> ReferenceFront
{
    constexpr std::size_t kDense = 50000;
    std::vector<ObjectiveVector> dense;
    dense.reserve(kDense);
    for (std::size_t i = 0; i < kDense; ++i) {
        const double f1 = static_cast<double>(i) / static_cast<double>(kDense - 1);
        dense.push_back({f1, 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * pi * f1)});
    }
    return {thin_front(nondominated_filter(std::move(dense)), n), FrontSource::kAnalytic};
}

auto zdt6_f1(double x) -> double
{
    return 1.0 - std::exp(-4.0 * x) * std::pow(std::sin(6.0 * pi * x), 6.0);
}

// Smallest attainable f1 for ZDT6; the maximum of exp(-4x)sin^6(6 pi x)
// lies in [0, 1/6] where that product is unimodal.
auto zdt6_f1_min() -> double
{
    double lo = 0.0;
    double hi = 1.0 / 6.0;
    for (int it = 0; it < 200; ++it) {
        const double a = lo + (hi - lo) / 3.0;
        const double b = hi - (hi - lo) / 3.0;
        if (zdt6_f1(a) < zdt6_f1(b)) {
            hi = b;
        } else {
            lo = a;
        }
    }
    return zdt6_f1(0.5 * (lo + hi));
}

}  // namespace

auto make_zdt(std::string_view id) -> Problem
{
    const std::string name(id);
    if (id == "ZDT1" || id == "ZDT2" || id == "ZDT3") {
        const std::size_t d = 30;
        const int kind = id.back() - '0';
        Evaluator eval = [kind](std::span<const double> x, std::span<double> f) {
            const auto n = static_cast<double>(x.size());
            const double g = 1.0 + 9.0 * tail_sum(x) / (n - 1.0);
            const double r = x[0] / g;
            f[0] = x[0];
            if (kind == 1) {
                f[1] = g * (1.0 - std::sqrt(r));
            } else if (kind == 2) {
                f[1] = g * (1.0 - r * r);
            } else {
                f[1] = g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * pi * x[0]));
            }
        };
        FrontSampler sampler;
        if (kind == 1) {
            sampler = convex_front;
        } else if (kind == 2) {
            sampler = [](std::size_t n) { return concave_front(n, 0.0); };
        } else {
            sampler = zdt3_front;
        }
        return {name, 2, Bounds::uniform(d, 0.0, 1.0), std::move(eval), std::move(sampler)};
    }
    if (id == "ZDT4") {
        const std::size_t d = 10;
        std::vector<double> lo(d, -5.0);
        std::vector<double> hi(d, 5.0);
        lo[0] = 0.0;
        hi[0] = 1.0;
        Evaluator eval = [](std::span<const double> x, std::span<double> f) {
            double g = 1.0 + 10.0 * static_cast<double>(x.size() - 1);
            for (std::size_t i = 1; i < x.size(); ++i) {
                g += x[i] * x[i] - 10.0 * std::cos(4.0 * pi * x[i]);
            }
            f[0] = x[0];
            f[1] = g * (1.0 - std::sqrt(x[0] / g));
        };
        return {name, 2, Bounds(std::move(lo), std::move(hi)), std::move(eval), convex_front};
    }
    if (id == "ZDT6") {
        const std::size_t d = 10;
        Evaluator eval = [](std::span<const double> x, std::span<double> f) {
            const auto n = static_cast<double>(x.size());
            const double g = 1.0 + 9.0 * std::pow(tail_sum(x) / (n - 1.0), 0.25);
            const double f1 = zdt6_f1(x[0]);
            const double r = f1 / g;
            f[0] = f1;
            f[1] = g * (1.0 - r * r);
        };
        const double f1_min = zdt6_f1_min();
        FrontSampler sampler = [f1_min](std::size_t n) { return concave_front(n, f1_min); };
        return {name, 2, Bounds::uniform(d, 0.0, 1.0), std::move(eval), std::move(sampler)};
    }
    throw ConfigError("unknown ZDT problem: " + name);
}

}  // namespace msgw::suites
