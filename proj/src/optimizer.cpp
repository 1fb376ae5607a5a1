#include "msgw/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "msgw/ranking.hpp"

namespace msgw {

void AlgorithmParams::validate() const
{
    if (population_size == 0 || archive_max == 0 || max_fitness_evals == 0 || memeplex_count == 0) {
        throw ConfigError("MSGW-FLM: population, archive size, budget and memeplex count must be positive");
    }
    if (population_size % memeplex_count != 0) {
        throw ConfigError("MSGW-FLM: population size " + std::to_string(population_size)
                          + " is not divisible by memeplex count " + std::to_string(memeplex_count));
    }
    if (max_fitness_evals < population_size) {
        throw ConfigError("MSGW-FLM: evaluation budget is smaller than the population");
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
        throw ConfigError("MSGW-FLM: crossover rate must lie in [0, 1]");
    }
    if (!(levy_beta > 1.0 && levy_beta <= 2.0)) {
        throw ConfigError("MSGW-FLM: Levy beta must lie in (1, 2]");
    }
    if (!(levy_scale >= 0.0) || !std::isfinite(levy_scale)) {
        throw ConfigError("MSGW-FLM: Levy scale must be a non-negative number");
    }
}

auto WolfCoefficients::from_draws(double a, std::span<const double> r1, std::span<const double> r2) -> WolfCoefficients
{
    if (r1.size() != r2.size()) {
        throw ContractViolation("wolf coefficients: r1 and r2 differ in length");
    }
    WolfCoefficients c;
    c.a = a;
    c.A.resize(r1.size());
    c.C.resize(r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        c.A[i] = 2.0 * a * r1[i] - a;
        c.C[i] = 2.0 * r2[i];
    }
    return c;
}

auto WolfCoefficients::draw(double a, std::size_t dim, RandomSource& rng) -> WolfCoefficients
{
    std::vector<double> r1(dim);
    std::vector<double> r2(dim);
    for (auto& v : r1) {
        v = rng.uniform();
    }
    for (auto& v : r2) {
        v = rng.uniform();
    }
    return from_draws(a, r1, r2);
}

auto encircling_a(std::size_t evaluations_used, std::size_t max_evals) -> double
{
    if (max_evals == 0) {
        throw ContractViolation("encircling_a: zero budget");
    }
    const double t = std::min(1.0, static_cast<double>(evaluations_used) / static_cast<double>(max_evals));
    return 2.0 * (1.0 - t);
}

// --- archive -------------------------------------------------------------

ParetoArchive::ParetoArchive(std::size_t capacity) : capacity_(capacity)
{
    if (capacity_ == 0) {
        throw ContractViolation("archive capacity must be positive");
    }
}

auto ParetoArchive::objectives() const -> std::vector<ObjectiveVector>
{
    std::vector<ObjectiveVector> out;
    out.reserve(members_.size());
    for (const auto& m : members_) {
        out.push_back(m.objectives);
    }
    return out;
}

auto ParetoArchive::update(std::span<const Individual> entrants) -> bool
{
    std::vector<Individual> pool = members_;
    for (const auto& e : entrants) {
        const bool duplicate = std::any_of(pool.begin(), pool.end(),
                                           [&](const Individual& p) { return p.objectives == e.objectives; });
        if (!duplicate) {
            pool.push_back(e);
        }
    }
    std::vector<bool> dominated(pool.size(), false);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size() && !dominated[i]; ++j) {
            dominated[i] = j != i && dominates(pool[j].objectives, pool[i].objectives);
        }
    }
    std::vector<Individual> kept;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!dominated[i]) {
            kept.push_back(std::move(pool[i]));
        }
    }
    bool truncated = false;
    while (kept.size() > capacity_) {
        std::vector<ObjectiveVector> pts;
        pts.reserve(kept.size());
        for (const auto& k : kept) {
            pts.push_back(k.objectives);
        }
        const auto cd = crowding_distance(pts);
        const auto victim = std::min_element(cd.begin(), cd.end()) - cd.begin();
        kept.erase(kept.begin() + victim);
        truncated = true;
    }
    for (auto& k : kept) {
        k.front_index = 0;
        k.crowding.reset();
    }
    members_ = std::move(kept);
    return truncated;
}

auto ParetoArchive::violations() const -> std::size_t
{
    std::size_t bad = members_.size() > capacity_ ? 1 : 0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (std::size_t j = 0; j < members_.size(); ++j) {
            if (i != j && dominates(members_[i].objectives, members_[j].objectives)) {
                ++bad;
            }
        }
    }
    return bad;
}

auto update_archive(ParetoArchive archive, std::span<const Individual> entrants) -> ParetoArchive
{
    archive.update(entrants);
    return archive;
}

// --- memeplexes ----------------------------------------------------------

auto partition_memeplexes(std::span<const Individual> sorted_pop, std::size_t m) -> std::vector<Memeplex>
{
    if (m == 0 || sorted_pop.size() % m != 0) {
        throw ConfigError("partition_memeplexes: population of " + std::to_string(sorted_pop.size())
                          + " cannot be split into " + std::to_string(m) + " memeplexes");
    }
    std::vector<Memeplex> plexes(m);
    const std::size_t n = sorted_pop.size() / m;
    for (std::size_t k = 0; k < m; ++k) {
        plexes[k].members.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            plexes[k].members.push_back(sorted_pop[k + m * i]);
        }
    }
    return plexes;
}

auto gather_and_shuffle(std::vector<Memeplex> memeplexes, RandomSource& rng) -> std::vector<Individual>
{
    std::vector<Individual> pop;
    for (auto& plex : memeplexes) {
        for (auto& ind : plex.members) {
            pop.push_back(std::move(ind));
        }
    }
    rng.shuffle(pop);
    return pop;
}

// --- variation -----------------------------------------------------------

auto wolf_move(std::span<const double> x, std::span<const double> alpha, std::span<const double> beta,
               std::span<const double> delta, const std::array<WolfCoefficients, 3>& coeffs, WolfDistance mode)
    -> DecisionVector
{
    const std::size_t d = x.size();
    if (alpha.size() != d || beta.size() != d || delta.size() != d) {
        throw ContractViolation("wolf_move: leader positions differ in dimension");
    }
    for (const auto& c : coeffs) {
        if (c.A.size() != d || c.C.size() != d) {
            throw ContractViolation("wolf_move: coefficient vectors differ in dimension");
        }
    }
    const std::array<std::span<const double>, 3> leaders = {alpha, beta, delta};
    DecisionVector out(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        const double d_alpha = std::fabs(coeffs[0].C[i] * alpha[i] - x[i]);
        double sum = 0.0;
        for (std::size_t l = 0; l < 3; ++l) {
            const double dist = (mode == WolfDistance::kAlphaOnly || l == 0)
                                    ? d_alpha
                                    : std::fabs(coeffs[l].C[i] * leaders[l][i] - x[i]);
            sum += leaders[l][i] - coeffs[l].A[i] * dist;
        }
        out[i] = sum / 3.0;
    }
    return out;
}

auto wolf_update(std::span<const double> x, std::span<const double> alpha, std::span<const double> beta,
                 std::span<const double> delta, double a, RandomSource& rng, const Bounds& bounds, WolfDistance mode)
    -> DecisionVector
{
    if (!(a >= 0.0 && a <= 2.0)) {
        throw ContractViolation("wolf_update: a must lie in [0, 2]");
    }
    const std::array<WolfCoefficients, 3> coeffs = {WolfCoefficients::draw(a, x.size(), rng),
                                                    WolfCoefficients::draw(a, x.size(), rng),
                                                    WolfCoefficients::draw(a, x.size(), rng)};
    return repair_bounds(wolf_move(x, alpha, beta, delta, coeffs, mode), bounds);
}

auto crossover(std::span<const double> candidate, std::span<const double> parent, double cr, RandomSource& rng)
    -> DecisionVector
{
    if (candidate.size() != parent.size()) {
        throw ContractViolation("crossover: candidate and parent differ in dimension");
    }
    if (!(cr >= 0.0 && cr <= 1.0)) {
        throw ContractViolation("crossover: rate must lie in [0, 1]");
    }
    const std::size_t d = candidate.size();
    DecisionVector out(parent.begin(), parent.end());
    if (d == 0) {
        return out;
    }
    const std::size_t forced = rng.index(d);
    for (std::size_t i = 0; i < d; ++i) {
        const bool take = rng.uniform() < cr || i == forced;
        if (take) {
            out[i] = candidate[i];
        }
    }
    return out;
}

auto levy_sigma(double beta) -> double
{
    if (!(beta > 1.0 && beta <= 2.0)) {
        throw ContractViolation("levy_sigma: beta must lie in (1, 2]");
    }
    using std::numbers::pi;
    const double num = std::tgamma(1.0 + beta) * std::sin(pi * beta / 2.0);
    const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

auto levy_step(std::size_t dim, double beta, RandomSource& rng) -> std::vector<double>
{
    const double sigma = levy_sigma(beta);
    std::vector<double> step(dim);
    for (auto& s : step) {
        const double u = rng.normal() * sigma;
        const double v = rng.normal();
        s = u / std::pow(std::fabs(v), 1.0 / beta);
    }
    return step;
}

auto levy_move(std::span<const double> x, std::span<const double> alpha, std::span<const double> step, double scale)
    -> DecisionVector
{
    if (alpha.size() != x.size() || step.size() != x.size()) {
        throw ContractViolation("levy_move: dimension mismatch");
    }
    DecisionVector out(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] += scale * step[i] * (x[i] - alpha[i]);
    }
    return out;
}

// --- run -----------------------------------------------------------------

auto params_map(const AlgorithmParams& p) -> std::map<std::string, double>
{
    return {
        {"population_size", static_cast<double>(p.population_size)},
        {"archive_max", static_cast<double>(p.archive_max)},
        {"max_fitness_evals", static_cast<double>(p.max_fitness_evals)},
        {"memeplex_count", static_cast<double>(p.memeplex_count)},
        {"crossover_rate", p.crossover_rate},
        {"levy_beta", p.levy_beta},
        {"levy_scale", p.levy_scale},
        {"alpha_only_distance", p.distance == WolfDistance::kAlphaOnly ? 1.0 : 0.0},
        {"replace_unless_dominated", p.replacement == Replacement::kUnlessDominated ? 1.0 : 0.0},
    };
}

auto snapshot_of(std::size_t generation, std::size_t evaluations, bool truncated,
                 std::span<const ObjectiveVector> front, const std::optional<SnapshotSpec>& spec)
    -> GenerationSnapshot
{
    GenerationSnapshot s;
    s.generation = generation;
    s.evaluations = evaluations;
    s.archive_size = front.size();
    s.truncated = truncated;
    if (spec && !front.empty()) {
        s.hv = hypervolume(front, spec->hv_mode, spec->reference_front);
        s.igd = igd(front, spec->reference_front, spec->igd_form);
        s.spread = spread(front, spec->reference_front);
    } else {
        s.hv = s.igd = s.spread = std::nan("");
    }
    return s;
}

auto run(const Problem& problem, const AlgorithmParams& params, std::uint64_t seed, const RunOptions& options)
    -> RunRecord
{
    params.validate();
    RandomSource rng(seed);
    const Bounds& bounds = problem.bounds();
    const std::size_t dim = problem.dimension();
    const std::size_t budget = params.max_fitness_evals;

    RunRecord record;
    record.algorithm = kMsgwName;
    record.problem = problem.id();
    record.seed = seed;
    record.params = params_map(params);

    std::vector<Individual> pop(params.population_size);
    for (auto& ind : pop) {
        ind.decision.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            ind.decision[i] = rng.uniform(bounds.lower[i], bounds.upper[i]);
        }
        ind.objectives = problem.evaluate(ind.decision);
    }
    std::size_t evals = pop.size();

    ParetoArchive archive(params.archive_max);
    const auto initial = fast_nondominated_sort(std::span<Individual>(pop));
    std::vector<Individual> first_front;
    for (auto i : initial.fronts.front()) {
        first_front.push_back(pop[i]);
    }
    bool truncated = archive.update(first_front);
    if (options.check_invariants) {
        record.invariant_violations += archive.violations();
    }
    record.generations.push_back(snapshot_of(0, evals, truncated, archive.objectives(), options.snapshots));

    std::size_t generation = 0;
    while (evals < budget) {
        ++generation;
        const auto sorted = qr_sort(std::move(pop));
        auto plexes = partition_memeplexes(sorted, params.memeplex_count);
        for (auto& plex : plexes) {
            const DecisionVector beta = plex.beta_leader().decision;
            const DecisionVector delta = plex.delta_leader().decision;
            for (auto& member : plex.members) {
                if (evals >= budget) {
                    break;
                }
                if (archive.size() == 0) {
                    throw std::logic_error("MSGW-FLM: archive empty while selecting alpha");
                }
                const auto& alpha = archive.members()[rng.index(archive.size())].decision;
                const double a = encircling_a(evals, budget);
                auto cand = wolf_update(member.decision, alpha, beta, delta, a, rng, bounds, params.distance);
                cand = crossover(cand, member.decision, params.crossover_rate, rng);
                const auto step = levy_step(dim, params.levy_beta, rng);
                cand = repair_bounds(levy_move(cand, alpha, step, params.levy_scale), bounds);
                auto fnew = problem.evaluate(cand);
                ++evals;
                if (params.replacement == Replacement::kUnlessDominated && dominates(member.objectives, fnew)) {
                    continue;
                }
                member.decision = std::move(cand);
                member.objectives = std::move(fnew);
                member.front_index.reset();
                member.crowding.reset();
            }
        }
        pop = gather_and_shuffle(std::move(plexes), rng);
        fast_nondominated_sort(std::span<Individual>(pop));
        truncated = archive.update(pop);
        if (options.check_invariants) {
            record.invariant_violations += archive.violations();
        }
        record.generations.push_back(
            snapshot_of(generation, evals, truncated, archive.objectives(), options.snapshots));
    }

    record.evaluations = evals;
    record.archive = archive.members();
    return record;
}

}  // namespace msgw
