#include <cmath>
#include <numbers>

#include "suites.hpp"

namespace msgw::suites {
namespace {

using std::numbers::pi;

auto lz_number(std::string_view id) -> int
{
    if (id.size() == 7 && id.substr(0, 6) == "LZ09_F" && id[6] >= '1' && id[6] <= '9') {
        return id[6] - '0';
    }
    return 0;
}

auto dimension_of(int number) -> std::size_t
{
    return (number >= 6 && number <= 8) ? 10 : 30;
}

// Pareto-set offset of variable j (1-based) for the two-objective
// instances; x1 is the position variable.
auto shift(int number, std::size_t j, std::size_t n, double x1, bool odd) -> double
{
    const double jn = static_cast<double>(j) * pi / static_cast<double>(n);
    switch (number) {
    case 1:
    case 7:
    case 8:
        return std::pow(x1, 0.5 * (1.0 + 3.0 * (static_cast<double>(j) - 2.0) / (static_cast<double>(n) - 2.0)));
    case 2:
    case 9:
        return std::sin(6.0 * pi * x1 + jn);
    case 3:
        return odd ? 0.8 * x1 * std::cos(6.0 * pi * x1 + jn) : 0.8 * x1 * std::sin(6.0 * pi * x1 + jn);
    case 4:
        return odd ? 0.8 * x1 * std::cos((6.0 * pi * x1 + jn) / 3.0) : 0.8 * x1 * std::sin(6.0 * pi * x1 + jn);
    case 5: {
        const double r = 0.3 * x1 * x1 * std::cos(24.0 * pi * x1 + 4.0 * jn) + 0.6 * x1;
        return odd ? r * std::cos(6.0 * pi * x1 + jn) : r * std::sin(6.0 * pi * x1 + jn);
    }
    default:
        return 0.0;
    }
}

// Mean-scaled penalty 2/|J| * sum(...) over the residuals of one group.
auto group_penalty(int number, const std::vector<double>& y, const std::vector<std::size_t>& js) -> double
{
    if (y.empty()) {
        return 0.0;
    }
    const double scale = 2.0 / static_cast<double>(y.size());
    if (number == 7) {
        double s = 0.0;
        for (double v : y) {
            s += 4.0 * v * v - std::cos(8.0 * v * pi) + 1.0;
        }
        return scale * s;
    }
    if (number == 8) {
        double s = 0.0;
        double p = 1.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            s += y[i] * y[i];
            p *= std::cos(20.0 * y[i] * pi / std::sqrt(static_cast<double>(js[i])));
        }
        return scale * (4.0 * s - 2.0 * p + 2.0);
    }
    double s = 0.0;
    for (double v : y) {
        s += v * v;
    }
    return scale * s;
}

void evaluate_two(int number, std::span<const double> x, std::span<double> f)
{
    const std::size_t n = x.size();
    std::vector<double> odd_y;
    std::vector<double> even_y;
    std::vector<std::size_t> odd_j;
    std::vector<std::size_t> even_j;
    for (std::size_t j = 2; j <= n; ++j) {
        const bool odd = j % 2 == 1;
        const double y = x[j - 1] - shift(number, j, n, x[0], odd);
        (odd ? odd_y : even_y).push_back(y);
        (odd ? odd_j : even_j).push_back(j);
    }
    f[0] = x[0] + group_penalty(number, odd_y, odd_j);
    const double base = number == 9 ? 1.0 - x[0] * x[0] : 1.0 - std::sqrt(x[0]);
    f[1] = base + group_penalty(number, even_y, even_j);
}

void evaluate_f6(std::span<const double> x, std::span<double> f)
{
    const std::size_t n = x.size();
    double sums[3] = {0.0, 0.0, 0.0};
    std::size_t counts[3] = {0, 0, 0};
    for (std::size_t j = 3; j <= n; ++j) {
        const double y = x[j - 1] - 2.0 * x[1] * std::sin(2.0 * pi * x[0] + static_cast<double>(j) * pi / static_cast<double>(n));
        // J1: j-1 divisible by 3, J2: j-2 divisible by 3, J3: j divisible by 3
        const std::size_t g = (j - 1) % 3 == 0 ? 0 : ((j - 2) % 3 == 0 ? 1 : 2);
        sums[g] += y * y;
        ++counts[g];
    }
    auto pen = [&](std::size_t g) { return counts[g] ? 2.0 * sums[g] / static_cast<double>(counts[g]) : 0.0; };
    const double c1 = std::cos(0.5 * x[0] * pi);
    f[0] = c1 * std::cos(0.5 * x[1] * pi) + pen(0);
    f[1] = c1 * std::sin(0.5 * x[1] * pi) + pen(1);
    f[2] = std::sin(0.5 * x[0] * pi) + pen(2);
}

}  // namespace

auto make_lz09(std::string_view id) -> Problem
{
    const int number = lz_number(id);
    if (number == 0) {
        throw ConfigError("unknown LZ09 problem: " + std::string(id));
    }
    const std::size_t d = dimension_of(number);
    std::vector<double> lo(d, 0.0);
    std::vector<double> hi(d, 1.0);
    if ((number >= 2 && number <= 5) || number == 9) {
        for (std::size_t i = 1; i < d; ++i) {
            lo[i] = -1.0;
        }
    } else if (number == 6) {
        for (std::size_t i = 2; i < d; ++i) {
            lo[i] = -2.0;
            hi[i] = 2.0;
        }
    }
    Evaluator eval;
    std::size_t m = 2;
    if (number == 6) {
        m = 3;
        eval = evaluate_f6;
    } else {
        eval = [number](std::span<const double> x, std::span<double> f) { evaluate_two(number, x, f); };
    }
    return {std::string(id), m, Bounds(std::move(lo), std::move(hi)), std::move(eval),
            bundled_sampler(std::string(id))};
}

auto lz09_front_dense(std::string_view id, std::size_t samples) -> std::vector<ObjectiveVector>
{
    const int number = lz_number(id);
    if (number == 0) {
        throw ConfigError("unknown LZ09 problem: " + std::string(id));
    }
    std::vector<ObjectiveVector> dense;
    if (number == 6) {
        for (auto w : simplex_lattice(samples)) {
            const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
            for (auto& v : w) {
                v /= norm;
            }
            dense.push_back(std::move(w));
        }
        return dense;
    }
    dense.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
        if (number == 9) {
            dense.push_back({t, 1.0 - t * t});
        } else {
            dense.push_back({t * t, 1.0 - t});
        }
    }
    return dense;
}

}  // namespace msgw::suites
