#pragma once

#include <cstdint>

#include "msgw/optimizer.hpp"

namespace msgw {

struct Nsga2Params {
    std::size_t population_size = 100;
    std::size_t max_fitness_evals = 20000;
    double crossover_probability = 0.9;
    // Negative means 1/D.
    double mutation_probability = -1.0;
    double sbx_eta = 20.0;
    double mutation_eta = 20.0;

    void validate() const;
};

// Simulated binary crossover on one parent pair, bounded form.
auto sbx_crossover(std::span<const double> p1, std::span<const double> p2, const Bounds& bounds, double probability,
                   double eta, RandomSource& rng) -> std::pair<DecisionVector, DecisionVector>;

// Bounded polynomial mutation, applied per coordinate with `probability`.
auto polynomial_mutation(DecisionVector x, const Bounds& bounds, double probability, double eta, RandomSource& rng)
    -> DecisionVector;

// Picks population_size survivors by front, then crowding within the
// splitting front. The result is ranked.
auto environmental_selection(std::vector<Individual> merged, std::size_t size) -> std::vector<Individual>;

// The archive of the returned record holds the final first front.
auto nsga2_run(const Problem& problem, const Nsga2Params& params, std::uint64_t seed, const RunOptions& options = {})
    -> RunRecord;

inline constexpr const char* kNsga2Name = "NSGA-II";

}  // namespace msgw
