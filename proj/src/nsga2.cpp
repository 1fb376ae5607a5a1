#include "msgw/nsga2.hpp"

#include <algorithm>
#include <cmath>

#include "msgw/ranking.hpp"

namespace msgw {

void Nsga2Params::validate() const
{
    if (population_size < 2 || population_size % 2 != 0) {
        throw ConfigError("NSGA-II: population size must be an even number of at least 2");
    }
    if (max_fitness_evals < population_size) {
        throw ConfigError("NSGA-II: evaluation budget is smaller than the population");
    }
    if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0)) {
        throw ConfigError("NSGA-II: crossover probability must lie in [0, 1]");
    }
    if (mutation_probability > 1.0 || std::isnan(mutation_probability)) {
        throw ConfigError("NSGA-II: mutation probability must be at most 1");
    }
    if (!(sbx_eta >= 0.0) || !(mutation_eta >= 0.0)) {
        throw ConfigError("NSGA-II: distribution indices must be non-negative");
    }
}

namespace {

constexpr double kEps = 1e-14;

auto sbx_beta_q(double rand, double beta, double eta) -> double
{
    const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
    if (rand <= 1.0 / alpha) {
        return std::pow(rand * alpha, 1.0 / (eta + 1.0));
    }
    return std::pow(1.0 / (2.0 - rand * alpha), 1.0 / (eta + 1.0));
}

auto tournament(const std::vector<Individual>& pop, RandomSource& rng) -> const Individual&
{
    const auto& a = pop[rng.index(pop.size())];
    const auto& b = pop[rng.index(pop.size())];
    return qr_better(b, a) ? b : a;
}

}  // namespace

auto sbx_crossover(std::span<const double> p1, std::span<const double> p2, const Bounds& bounds, double probability,
                   double eta, RandomSource& rng) -> std::pair<DecisionVector, DecisionVector>
{
    if (p1.size() != p2.size() || p1.size() != bounds.size()) {
        throw ContractViolation("sbx_crossover: dimension mismatch");
    }
    DecisionVector c1(p1.begin(), p1.end());
    DecisionVector c2(p2.begin(), p2.end());
    if (rng.uniform() > probability) {
        return {c1, c2};
    }
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (rng.uniform() > 0.5 || std::fabs(p1[i] - p2[i]) <= kEps) {
            continue;
        }
        const double y1 = std::min(p1[i], p2[i]);
        const double y2 = std::max(p1[i], p2[i]);
        const double lo = bounds.lower[i];
        const double hi = bounds.upper[i];
        const double rand = rng.uniform();

        const double beta1 = 1.0 + 2.0 * (y1 - lo) / (y2 - y1);
        const double v1 = 0.5 * ((y1 + y2) - sbx_beta_q(rand, beta1, eta) * (y2 - y1));
        const double beta2 = 1.0 + 2.0 * (hi - y2) / (y2 - y1);
        const double v2 = 0.5 * ((y1 + y2) + sbx_beta_q(rand, beta2, eta) * (y2 - y1));

        const double a = std::clamp(v1, lo, hi);
        const double b = std::clamp(v2, lo, hi);
        if (rng.uniform() <= 0.5) {
            c1[i] = b;
            c2[i] = a;
        } else {
            c1[i] = a;
            c2[i] = b;
        }
    }
    return {c1, c2};
}

auto polynomial_mutation(DecisionVector x, const Bounds& bounds, double probability, double eta, RandomSource& rng)
    -> DecisionVector
{
    if (x.size() != bounds.size()) {
        throw ContractViolation("polynomial_mutation: dimension mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (rng.uniform() > probability) {
            continue;
        }
        const double lo = bounds.lower[i];
        const double hi = bounds.upper[i];
        if (hi <= lo) {
            continue;
        }
        const double d1 = (x[i] - lo) / (hi - lo);
        const double d2 = (hi - x[i]) / (hi - lo);
        const double rand = rng.uniform();
        const double pow_exp = 1.0 / (eta + 1.0);
        double dq = 0.0;
        if (rand < 0.5) {
            const double xy = 1.0 - d1;
            const double val = 2.0 * rand + (1.0 - 2.0 * rand) * std::pow(xy, eta + 1.0);
            dq = std::pow(val, pow_exp) - 1.0;
        } else {
            const double xy = 1.0 - d2;
            const double val = 2.0 * (1.0 - rand) + 2.0 * (rand - 0.5) * std::pow(xy, eta + 1.0);
            dq = 1.0 - std::pow(val, pow_exp);
        }
        x[i] = std::clamp(x[i] + dq * (hi - lo), lo, hi);
    }
    return x;
}

auto environmental_selection(std::vector<Individual> merged, std::size_t size) -> std::vector<Individual>
{
    auto ranked = qr_sort(std::move(merged));
    if (ranked.size() > size) {
        ranked.resize(size);
    }
    return ranked;
}

auto nsga2_run(const Problem& problem, const Nsga2Params& params, std::uint64_t seed, const RunOptions& options)
    -> RunRecord
{
    params.validate();
    RandomSource rng(seed);
    const Bounds& bounds = problem.bounds();
    const std::size_t dim = problem.dimension();
    const std::size_t budget = params.max_fitness_evals;
    const double pm = params.mutation_probability < 0.0 ? 1.0 / static_cast<double>(dim) : params.mutation_probability;

    RunRecord record;
    record.algorithm = kNsga2Name;
    record.problem = problem.id();
    record.seed = seed;
    record.params = {
        {"population_size", static_cast<double>(params.population_size)},
        {"max_fitness_evals", static_cast<double>(params.max_fitness_evals)},
        {"crossover_probability", params.crossover_probability},
        {"mutation_probability", pm},
        {"sbx_eta", params.sbx_eta},
        {"mutation_eta", params.mutation_eta},
    };

    std::vector<Individual> pop(params.population_size);
    for (auto& ind : pop) {
        ind.decision.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            ind.decision[i] = rng.uniform(bounds.lower[i], bounds.upper[i]);
        }
        ind.objectives = problem.evaluate(ind.decision);
    }
    std::size_t evals = pop.size();
    pop = qr_sort(std::move(pop));

    auto first_front = [](const std::vector<Individual>& ranked) {
        std::vector<ObjectiveVector> out;
        for (const auto& ind : ranked) {
            if (ind.front_index == 0) {
                out.push_back(ind.objectives);
            }
        }
        return out;
    };
    record.generations.push_back(snapshot_of(0, evals, false, first_front(pop), options.snapshots));

    std::size_t generation = 0;
    while (evals < budget) {
        ++generation;
        std::vector<Individual> offspring;
        offspring.reserve(params.population_size);
        while (offspring.size() < params.population_size && evals < budget) {
            const auto& a = tournament(pop, rng);
            const auto& b = tournament(pop, rng);
            auto [c1, c2] = sbx_crossover(a.decision, b.decision, bounds, params.crossover_probability,
                                          params.sbx_eta, rng);
            for (auto* c : {&c1, &c2}) {
                if (offspring.size() >= params.population_size || evals >= budget) {
                    break;
                }
                Individual child;
                child.decision = polynomial_mutation(std::move(*c), bounds, pm, params.mutation_eta, rng);
                child.objectives = problem.evaluate(child.decision);
                ++evals;
                offspring.push_back(std::move(child));
            }
        }
        for (auto& c : offspring) {
            pop.push_back(std::move(c));
        }
        pop = environmental_selection(std::move(pop), params.population_size);
        record.generations.push_back(snapshot_of(generation, evals, false, first_front(pop), options.snapshots));
    }

    record.evaluations = evals;
    for (const auto& ind : pop) {
        if (ind.front_index == 0) {
            record.archive.push_back(ind);
        }
    }
    return record;
}

}  // namespace msgw
