#include <cmath>
#include <numbers>

#include "suites.hpp"

namespace msgw::suites {
namespace {

using std::numbers::pi;

constexpr std::size_t kObjectives = 3;

// Sum of squared offsets from 0.5 over the distance variables.
auto sphere_g(std::span<const double> tail) -> double
{
    double g = 0.0;
    for (double v : tail) {
        g += (v - 0.5) * (v - 0.5);
    }
    return g;
}

// f_i = (1+g) * prod cos(theta_j) * sin(theta_{M-i}) for the angles given.
void spherical(std::span<const double> theta, double radius, std::span<double> f)
{
    const std::size_t m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
        double v = radius;
        for (std::size_t j = 0; j + i + 1 < m; ++j) {
            v *= std::cos(theta[j]);
        }
        if (i > 0) {
            v *= std::sin(theta[m - i - 1]);
        }
        f[i] = v;
    }
}

auto corners(std::size_t n, double scale) -> ReferenceFront
{
    ReferenceFront front;
    for (std::size_t i = 0; i < n && i < kObjectives; ++i) {
        ObjectiveVector p(kObjectives, 0.0);
        p[i] = scale;
        front.points.push_back(std::move(p));
    }
    return front;
}

auto simplex_front(std::size_t n) -> ReferenceFront
{
    if (n <= kObjectives) {
        return corners(n, 0.5);
    }
    ReferenceFront front;
    for (auto w : simplex_lattice(n)) {
        for (auto& v : w) {
            v *= 0.5;
        }
        front.points.push_back(std::move(w));
    }
    return front;
}

auto sphere_front(std::size_t n) -> ReferenceFront
{
    if (n <= kObjectives) {
        return corners(n, 1.0);
    }
    ReferenceFront front;
    for (auto w : simplex_lattice(n)) {
        const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
        for (auto& v : w) {
            v /= norm;
        }
        front.points.push_back(std::move(w));
    }
    return front;
}

// DTLZ5/6 collapse to a quarter circle with f1 == f2.
auto curve_front(std::size_t n) -> ReferenceFront
{
    ReferenceFront front;
    if (n < 2) {
        n = 2;
    }
    const double c = std::cos(pi / 4.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(n - 1 - i) / static_cast<double>(n - 1);
        const double th = t * pi / 2.0;
        front.points.push_back({std::cos(th) * c, std::cos(th) * c, std::sin(th)});
    }
    return front;
}

auto dtlz7_h(std::span<const double> f, double g) -> double
{
    double h = static_cast<double>(f.size() + 1);
    for (double fi : f) {
        h -= fi / (1.0 + g) * (1.0 + std::sin(3.0 * pi * fi));
    }
    return h;
}

auto dtlz7_front(std::size_t n) -> ReferenceFront
{
    const std::size_t grid = 160;
    std::vector<ObjectiveVector> dense;
    dense.reserve(grid * grid);
    for (std::size_t i = 0; i < grid; ++i) {
        for (std::size_t j = 0; j < grid; ++j) {
            const double a = static_cast<double>(i) / static_cast<double>(grid - 1);
            const double b = static_cast<double>(j) / static_cast<double>(grid - 1);
            const double pos[2] = {a, b};
            dense.push_back({a, b, 2.0 * dtlz7_h(pos, 1.0)});
        }
    }
    return {thin_front(nondominated_filter(std::move(dense)), n), FrontSource::kAnalytic};
}

auto position_dims() -> std::size_t { return kObjectives - 1; }

}  // namespace

auto make_dtlz(std::string_view id) -> Problem
{
    const std::string name(id);
    const std::size_t mpos = position_dims();
    if (id == "DTLZ1") {
        const std::size_t d = kObjectives + 5 - 1;
        Evaluator eval = [mpos](std::span<const double> x, std::span<double> f) {
            const auto tail = x.subspan(mpos);
            double g = static_cast<double>(tail.size());
            for (double v : tail) {
                g += (v - 0.5) * (v - 0.5) - std::cos(20.0 * pi * (v - 0.5));
            }
            g *= 100.0;
            const std::size_t m = f.size();
            for (std::size_t i = 0; i < m; ++i) {
                double v = 0.5 * (1.0 + g);
                for (std::size_t j = 0; j + i + 1 < m; ++j) {
                    v *= x[j];
                }
                if (i > 0) {
                    v *= 1.0 - x[m - i - 1];
                }
                f[i] = v;
            }
        };
        return {name, kObjectives, Bounds::uniform(d, 0.0, 1.0), std::move(eval), simplex_front};
    }
    if (id == "DTLZ2" || id == "DTLZ4") {
        const std::size_t d = kObjectives + 10 - 1;
        const double alpha = id == "DTLZ4" ? 100.0 : 1.0;
        Evaluator eval = [mpos, alpha](std::span<const double> x, std::span<double> f) {
            const double g = sphere_g(x.subspan(mpos));
            double theta[kObjectives - 1];
            for (std::size_t j = 0; j < mpos; ++j) {
                theta[j] = std::pow(x[j], alpha) * pi / 2.0;
            }
            spherical({theta, mpos}, 1.0 + g, f);
        };
        return {name, kObjectives, Bounds::uniform(d, 0.0, 1.0), std::move(eval), sphere_front};
    }
    if (id == "DTLZ5" || id == "DTLZ6") {
        const std::size_t d = kObjectives + 10 - 1;
        const bool six = id == "DTLZ6";
        Evaluator eval = [mpos, six](std::span<const double> x, std::span<double> f) {
            const auto tail = x.subspan(mpos);
            double g = 0.0;
            if (six) {
                for (double v : tail) {
                    g += std::pow(v, 0.1);
                }
            } else {
                g = sphere_g(tail);
            }
            double theta[kObjectives - 1];
            theta[0] = x[0] * pi / 2.0;
            for (std::size_t j = 1; j < mpos; ++j) {
                theta[j] = pi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[j]);
            }
            spherical({theta, mpos}, 1.0 + g, f);
        };
        return {name, kObjectives, Bounds::uniform(d, 0.0, 1.0), std::move(eval), curve_front};
    }
    if (id == "DTLZ7") {
        const std::size_t d = kObjectives + 20 - 1;
        Evaluator eval = [mpos](std::span<const double> x, std::span<double> f) {
            const auto tail = x.subspan(mpos);
            double g = 0.0;
            for (double v : tail) {
                g += v;
            }
            g = 1.0 + 9.0 * g / static_cast<double>(tail.size());
            for (std::size_t j = 0; j < mpos; ++j) {
                f[j] = x[j];
            }
            f[mpos] = (1.0 + g) * dtlz7_h(x.first(mpos), g);
        };
        return {name, kObjectives, Bounds::uniform(d, 0.0, 1.0), std::move(eval), dtlz7_front};
    }
    throw ConfigError("unknown DTLZ problem: " + name);
}

auto simplex_lattice(std::size_t n) -> std::vector<ObjectiveVector>
{
    // choose divisions H so that (H+1)(H+2)/2 is closest to n
    std::size_t best_h = 1;
    std::size_t best_gap = static_cast<std::size_t>(-1);
    for (std::size_t h = 1; h < 4096; ++h) {
        const std::size_t count = (h + 1) * (h + 2) / 2;
        const std::size_t gap = count > n ? count - n : n - count;
        if (gap < best_gap) {
            best_gap = gap;
            best_h = h;
        }
        if (count > n) {
            break;
        }
    }
    std::vector<ObjectiveVector> points;
    const auto h = static_cast<double>(best_h);
    for (std::size_t i = 0; i <= best_h; ++i) {
        for (std::size_t j = 0; i + j <= best_h; ++j) {
            const std::size_t k = best_h - i - j;
            points.push_back({static_cast<double>(i) / h, static_cast<double>(j) / h, static_cast<double>(k) / h});
        }
    }
    return points;
}

}  // namespace msgw::suites
