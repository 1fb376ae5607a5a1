#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "msgw/core.hpp"
#include "msgw/indicators.hpp"
#include "msgw/problems.hpp"
#include "msgw/run_record.hpp"

namespace msgw {

// Which distance vector scales the beta and delta moves. kPerLeader pairs
// each leader with its own distance |C*X_leader - X|. kAlphaOnly reuses the
// alpha distance for all three moves.
enum class WolfDistance { kPerLeader, kAlphaOnly };

// How a member's offspring takes its place. kAlways replaces unconditionally;
// kUnlessDominated keeps the parent when it dominates the offspring.
enum class Replacement { kAlways, kUnlessDominated };

struct AlgorithmParams {
    std::size_t population_size = 100;
    std::size_t archive_max = 100;
    std::size_t max_fitness_evals = 20000;
    std::size_t memeplex_count = 5;
    double crossover_rate = 0.4;
    double levy_beta = 1.4;
    double levy_scale = 0.01;
    WolfDistance distance = WolfDistance::kPerLeader;
    Replacement replacement = Replacement::kAlways;

    // Throws ConfigError on an inconsistent configuration.
    void validate() const;
};

// Sub-population in quality-rank order; the first two members lead.
struct Memeplex {
    std::vector<Individual> members;

    [[nodiscard]] auto beta_leader() const -> const Individual& { return members.at(0); }
    [[nodiscard]] auto delta_leader() const -> const Individual&
    {
        return members.size() > 1 ? members[1] : members.at(0);
    }
};

// A = 2a*r1 - a and C = 2*r2, componentwise.
struct WolfCoefficients {
    double a = 0.0;
    std::vector<double> A;
    std::vector<double> C;

    static auto from_draws(double a, std::span<const double> r1, std::span<const double> r2) -> WolfCoefficients;
    static auto draw(double a, std::size_t dim, RandomSource& rng) -> WolfCoefficients;
};

// a(t) = 2 (1 - t / max_evals), from 2 at the start to 0 at the budget.
[[nodiscard]] auto encircling_a(std::size_t evaluations_used, std::size_t max_evals) -> double;

// Bounded archive of mutually non-dominated individuals.
class ParetoArchive {
public:
    explicit ParetoArchive(std::size_t capacity);

    // Merges entrants, keeps the non-dominated subset and truncates by
    // iterative minimum-crowding removal. Returns true when truncation
    // removed at least one member. Entrants whose objective vector equals a
    // member already present are skipped.
    auto update(std::span<const Individual> entrants) -> bool;

    [[nodiscard]] auto members() const noexcept -> const std::vector<Individual>& { return members_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return members_.size(); }
    [[nodiscard]] auto capacity() const noexcept -> std::size_t { return capacity_; }
    [[nodiscard]] auto objectives() const -> std::vector<ObjectiveVector>;
    // Counts dominated pairs and capacity overflow; zero when healthy.
    [[nodiscard]] auto violations() const -> std::size_t;

private:
    std::size_t capacity_;
    std::vector<Individual> members_;
};

auto update_archive(ParetoArchive archive, std::span<const Individual> entrants) -> ParetoArchive;

// Memeplex k (0-based) receives sorted ranks k, k+m, k+2m, ...
auto partition_memeplexes(std::span<const Individual> sorted_pop, std::size_t m) -> std::vector<Memeplex>;

// Concatenates memeplexes in order and shuffles the result.
auto gather_and_shuffle(std::vector<Memeplex> memeplexes, RandomSource& rng) -> std::vector<Individual>;

// Mean of the three leader-guided moves, without bound repair.
auto wolf_move(std::span<const double> x, std::span<const double> alpha, std::span<const double> beta,
               std::span<const double> delta, const std::array<WolfCoefficients, 3>& coeffs,
               WolfDistance mode = WolfDistance::kPerLeader) -> DecisionVector;

// Draws fresh (r1, r2) per leader in alpha, beta, delta order and returns
// the bound-repaired mean move.
auto wolf_update(std::span<const double> x, std::span<const double> alpha, std::span<const double> beta,
                 std::span<const double> delta, double a, RandomSource& rng, const Bounds& bounds,
                 WolfDistance mode = WolfDistance::kPerLeader) -> DecisionVector;

// Binomial crossover with one coordinate forced from the candidate.
auto crossover(std::span<const double> candidate, std::span<const double> parent, double cr, RandomSource& rng)
    -> DecisionVector;

// Mantegna scale for the numerator normal of a Levy-stable step.
[[nodiscard]] auto levy_sigma(double beta) -> double;
auto levy_step(std::size_t dim, double beta, RandomSource& rng) -> std::vector<double>;
// x + scale * step .* (x - alpha)
auto levy_move(std::span<const double> x, std::span<const double> alpha, std::span<const double> step, double scale)
    -> DecisionVector;

struct SnapshotSpec {
    std::vector<ObjectiveVector> reference_front;
    HvReference hv_mode = HvReference::kRaw;
    DistanceAggregate igd_form = DistanceAggregate::kMean;
};

struct RunOptions {
    // Per-generation HV/IGD/Spread of the archive; archive size and
    // truncation flags are always recorded.
    std::optional<SnapshotSpec> snapshots;
    // Count archive invariant violations after every update.
    bool check_invariants = false;
};

auto params_map(const AlgorithmParams& params) -> std::map<std::string, double>;
auto snapshot_of(std::size_t generation, std::size_t evaluations, bool truncated,
                 std::span<const ObjectiveVector> front, const std::optional<SnapshotSpec>& spec)
    -> GenerationSnapshot;

// Full MSGW-FLM run. Deterministic in (problem, params, seed).
auto run(const Problem& problem, const AlgorithmParams& params, std::uint64_t seed, const RunOptions& options = {})
    -> RunRecord;

inline constexpr const char* kMsgwName = "MSGW-FLM";

}  // namespace msgw
