#include "msgw/core.hpp"

#include <algorithm>
#include <cmath>

namespace msgw {

Bounds::Bounds(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi))
{
    if (lower.size() != upper.size()) {
        throw ContractViolation("bounds: lower and upper differ in length");
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) || lower[i] > upper[i]) {
            throw ContractViolation("bounds: interval " + std::to_string(i) + " is not a finite closed interval");
        }
    }
}

auto Bounds::uniform(std::size_t dim, double lo, double hi) -> Bounds
{
    return {std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
}

auto Bounds::contains(std::span<const double> x) const -> bool
{
    if (x.size() != size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower[i] && x[i] <= upper[i])) {
            return false;
        }
    }
    return true;
}

auto dominates(std::span<const double> a, std::span<const double> b) -> bool
{
    if (a.size() != b.size()) {
        throw ContractViolation("dominates: objective vectors differ in length");
    }
    bool strictly = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        strictly = strictly || a[i] < b[i];
    }
    return strictly;
}

auto repair_bounds(DecisionVector x, const Bounds& bounds) -> DecisionVector
{
    if (x.size() != bounds.size()) {
        throw ContractViolation("repair_bounds: dimension mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], bounds.lower[i], bounds.upper[i]);
    }
    return x;
}

auto splitmix64(std::uint64_t x) noexcept -> std::uint64_t
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

auto fnv1a64(std::string_view text) noexcept -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

auto RandomSource::uniform() -> double
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

auto RandomSource::uniform(double lo, double hi) -> double
{
    return lo + (hi - lo) * uniform();
}

auto RandomSource::uniform_int(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t
{
    if (lo > hi) {
        throw ContractViolation("uniform_int: empty range");
    }
    const std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max()) {
        return engine_();
    }
    const std::uint64_t n = span + 1;
    // rejection sampling keeps the result unbiased
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r = engine_();
    while (r >= limit) {
        r = engine_();
    }
    return lo + r % n;
}

auto RandomSource::index(std::size_t n) -> std::size_t
{
    if (n == 0) {
        throw ContractViolation("index: empty range");
    }
    return static_cast<std::size_t>(uniform_int(0, n - 1));
}

auto RandomSource::normal() -> double
{
    if (spare_normal_) {
        double v = *spare_normal_;
        spare_normal_.reset();
        return v;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * f;
    return u * f;
}

auto RandomSource::child(std::uint64_t stream) const -> RandomSource
{
    return RandomSource(splitmix64(seed_ ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)));
}

}  // namespace msgw
