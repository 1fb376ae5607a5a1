#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace msgw {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

// Raised when a caller breaks a documented precondition (length mismatch,
// out-of-range parameter, empty input where one is required).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Invalid user-supplied configuration: parameters, ids, config files.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Missing or unreadable data file.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Individual {
    DecisionVector decision;
    ObjectiveVector objectives;
    std::optional<std::size_t> front_index;
    std::optional<double> crowding;
};

// Closed per-dimension box.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    Bounds() = default;
    Bounds(std::vector<double> lo, std::vector<double> hi);
    static auto uniform(std::size_t dim, double lo, double hi) -> Bounds;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return lower.size(); }
    [[nodiscard]] auto contains(std::span<const double> x) const -> bool;
};

// Minimization: a is no worse everywhere and strictly better somewhere.
[[nodiscard]] auto dominates(std::span<const double> a, std::span<const double> b) -> bool;

// Clamps each coordinate into its interval.
[[nodiscard]] auto repair_bounds(DecisionVector x, const Bounds& bounds) -> DecisionVector;

// Deterministic random stream. The engine is mt19937_64, whose output
// sequence is fixed by the standard; the derived distributions are
// implemented here rather than taken from <random> so that draws are
// identical across standard library implementations.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    [[nodiscard]] auto seed() const noexcept -> std::uint64_t { return seed_; }

    // Uniform on [0, 1) with 53 bits of resolution.
    auto uniform() -> double;
    auto uniform(double lo, double hi) -> double;
    // Uniform integer in [lo, hi], both inclusive.
    auto uniform_int(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t;
    auto index(std::size_t n) -> std::size_t;
    // Standard normal deviate (Marsaglia polar method).
    auto normal() -> double;

    // Independent stream for a sub-task, without consuming from this one.
    [[nodiscard]] auto child(std::uint64_t stream) const -> RandomSource;

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) {
            auto j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

auto splitmix64(std::uint64_t x) noexcept -> std::uint64_t;
auto fnv1a64(std::string_view text) noexcept -> std::uint64_t;

}  // namespace msgw
