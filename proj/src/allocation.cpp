#include "msgw/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace msgw::allocation {

void ScenarioConfig::validate() const
{
    if (centers == 0 || sites == 0 || cycles == 0 || horizon == 0) {
        throw ConfigError("allocation: centers, sites, cycles and horizon must be positive");
    }
    if (!(area > 0.0) || !std::isfinite(area)) {
        throw ConfigError("allocation: area must be a positive number");
    }
    if (!(demand_min >= 0.0 && demand_min <= demand_max && std::isfinite(demand_max))) {
        throw ConfigError("allocation: demand range must satisfy 0 <= min <= max");
    }
    if (!(supply_min >= 0.0 && supply_min <= supply_max && std::isfinite(supply_max))) {
        throw ConfigError("allocation: supply range must satisfy 0 <= min <= max");
    }
    if (!(penalty >= 0.0) || !std::isfinite(penalty)) {
        throw ConfigError("allocation: penalty must be a non-negative number");
    }
}

auto ScenarioConfig::label() const -> std::string
{
    return std::to_string(centers) + "/" + std::to_string(sites);
}

auto Scenario::distance(std::size_t center, std::size_t site) const -> double
{
    const auto& a = centers.at(center);
    const auto& b = sites.at(site);
    return std::hypot(a.x - b.x, a.y - b.y);
}

auto CycleState::fresh(std::size_t sites) -> CycleState
{
    CycleState s;
    s.deficit.assign(sites, 0.0);
    return s;
}

auto generate_scenario(const ScenarioConfig& config, std::uint64_t seed) -> Scenario
{
    config.validate();
    const RandomSource root(seed);
    auto place = root.child(1);
    auto need = root.child(2);
    auto stock = root.child(3);

    Scenario sc;
    sc.seed = seed;
    auto point = [&] { return Point2{place.uniform(0.0, config.area), place.uniform(0.0, config.area)}; };
    for (std::size_t c = 0; c < config.centers; ++c) {
        sc.centers.push_back(point());
    }
    for (std::size_t s = 0; s < config.sites; ++s) {
        sc.sites.push_back(point());
    }
    sc.demand.assign(config.cycles, std::vector<double>(config.sites));
    sc.supply.assign(config.cycles, std::vector<double>(config.centers));
    for (std::size_t t = 0; t < config.cycles; ++t) {
        for (auto& d : sc.demand[t]) {
            d = need.uniform(config.demand_min, config.demand_max);
        }
        for (auto& s : sc.supply[t]) {
            s = stock.uniform(config.supply_min, config.supply_max);
        }
    }
    return sc;
}

auto forecast(const Scenario& scenario, const CycleState& state, std::size_t horizon) -> CycleForecast
{
    if (state.cycle >= scenario.cycles()) {
        throw ContractViolation("forecast: cycle index past the scenario end");
    }
    CycleForecast fc;
    fc.demand.assign(horizon, scenario.demand[state.cycle]);
    fc.supply.assign(horizon, scenario.supply[state.cycle]);
    return fc;
}

auto plan_from_decision(std::span<const double> x, std::size_t horizon, std::size_t centers, std::size_t sites)
    -> Plan
{
    if (x.size() != horizon * centers * sites) {
        throw ContractViolation("plan_from_decision: decision length does not match the plan shape");
    }
    return Plan{horizon, centers, sites, std::vector<double>(x.begin(), x.end())};
}

auto repair_plan(Plan& plan, const CycleForecast& fc) -> double
{
    double overshoot = 0.0;
    for (std::size_t h = 0; h < plan.horizon; ++h) {
        for (std::size_t c = 0; c < plan.centers; ++c) {
            double row = 0.0;
            for (std::size_t s = 0; s < plan.sites; ++s) {
                plan.at(h, c, s) = std::max(0.0, plan.at(h, c, s));
                row += plan.at(h, c, s);
            }
            const double cap = fc.supply[h][c];
            if (row > cap) {
                overshoot += row - cap;
                const double f = row > 0.0 ? cap / row : 0.0;
                for (std::size_t s = 0; s < plan.sites; ++s) {
                    plan.at(h, c, s) *= f;
                }
            }
        }
    }
    return overshoot;
}

auto plan_objectives(const Plan& plan, const Scenario& scenario, const CycleState& state, const CycleForecast& fc)
    -> ObjectiveVector
{
    double total = 0.0;
    double transport = 0.0;
    for (std::size_t h = 0; h < plan.horizon; ++h) {
        for (std::size_t s = 0; s < plan.sites; ++s) {
            double received = 0.0;
            for (std::size_t c = 0; c < plan.centers; ++c) {
                received += plan.at(h, c, s);
                transport += plan.at(h, c, s) * scenario.distance(c, s);
            }
            const double carried = h == 0 ? state.deficit[s] : 0.0;
            total += std::max(0.0, carried + fc.demand[h][s] - received);
        }
    }
    return {total, transport};
}

auto encode_cycle_problem(const Scenario& scenario, const CycleState& state, std::size_t horizon, double penalty)
    -> Problem
{
    if (horizon == 0) {
        throw ContractViolation("encode_cycle_problem: horizon must be positive");
    }
    if (state.deficit.size() != scenario.sites.size()) {
        throw ContractViolation("encode_cycle_problem: state does not match the scenario");
    }
    const std::size_t nc = scenario.centers.size();
    const std::size_t ns = scenario.sites.size();
    auto fc = forecast(scenario, state, horizon);

    std::vector<double> lo(horizon * nc * ns, 0.0);
    std::vector<double> hi(lo.size());
    for (std::size_t h = 0; h < horizon; ++h) {
        for (std::size_t c = 0; c < nc; ++c) {
            for (std::size_t s = 0; s < ns; ++s) {
                hi[(h * nc + c) * ns + s] = fc.supply[h][c];
            }
        }
    }

    auto eval = [scenario, state, fc, horizon, nc, ns, penalty](std::span<const double> x, std::span<double> out) {
        auto plan = plan_from_decision(x, horizon, nc, ns);
        const double q = repair_plan(plan, fc);
        const auto f = plan_objectives(plan, scenario, state, fc);
        out[0] = f[0] + penalty * q;
        out[1] = f[1] + penalty * q;
    };
    return Problem("ALLOC", 2, Bounds(std::move(lo), std::move(hi)), std::move(eval));
}

auto system_loss(const Plan& plan, const Scenario& scenario, const CycleState& state) -> double
{
    const auto& demand = scenario.demand.at(state.cycle);
    double loss = 0.0;
    for (std::size_t s = 0; s < plan.sites; ++s) {
        double received = 0.0;
        for (std::size_t c = 0; c < plan.centers; ++c) {
            received += plan.at(0, c, s);
        }
        loss += std::max(0.0, state.deficit[s] + demand[s] - received);
    }
    return loss;
}

auto execute(const Plan& plan, const Scenario& scenario, CycleState state) -> CycleState
{
    const auto& demand = scenario.demand.at(state.cycle);
    double loss = 0.0;
    for (std::size_t s = 0; s < plan.sites; ++s) {
        double received = 0.0;
        for (std::size_t c = 0; c < plan.centers; ++c) {
            received += plan.at(0, c, s);
        }
        state.deficit[s] = std::max(0.0, state.deficit[s] + demand[s] - received);
        loss += state.deficit[s];
    }
    state.cumulative_loss += loss;
    ++state.cycle;
    return state;
}

auto select_plan(std::span<const Individual> archive, const Scenario& scenario, const CycleState& state,
                 std::size_t horizon) -> Plan
{
    if (archive.empty()) {
        throw std::logic_error("allocation: empty archive at plan selection");
    }
    const auto fc = forecast(scenario, state, horizon);
    const std::size_t nc = scenario.centers.size();
    const std::size_t ns = scenario.sites.size();
    Plan best;
    double best_loss = std::numeric_limits<double>::infinity();
    double best_cost = std::numeric_limits<double>::infinity();
    for (const auto& ind : archive) {
        auto plan = plan_from_decision(ind.decision, horizon, nc, ns);
        repair_plan(plan, fc);
        const double loss = system_loss(plan, scenario, state);
        const double cost = plan_objectives(plan, scenario, state, fc)[1];
        if (loss < best_loss || (loss == best_loss && cost < best_cost)) {
            best = std::move(plan);
            best_loss = loss;
            best_cost = cost;
        }
    }
    return best;
}

auto LossTrace::zero_cycle() const -> std::optional<std::size_t>
{
    for (std::size_t i = 0; i < loss.size(); ++i) {
        if (loss[i] == 0.0) {
            return i + 1;
        }
    }
    return std::nullopt;
}

auto rolling_horizon_run(const Scenario& scenario, const ScenarioConfig& config, const CycleOptimizer& optimizer,
                         std::uint64_t seed) -> LossTrace
{
    config.validate();
    LossTrace trace;
    auto state = CycleState::fresh(scenario.sites.size());
    while (state.cycle < scenario.cycles()) {
        const std::size_t horizon = std::min(config.horizon, scenario.cycles() - state.cycle);
        const auto problem = encode_cycle_problem(scenario, state, horizon, config.penalty);
        const auto record = optimizer(problem, splitmix64(seed + state.cycle));
        const auto plan = select_plan(record.archive, scenario, state, horizon);
        state = execute(plan, scenario, std::move(state));
        double loss = 0.0;
        for (double d : state.deficit) {
            loss += d;
        }
        trace.loss.push_back(loss);
    }
    return trace;
}

auto rolling_horizon_run(const Scenario& scenario, const ScenarioConfig& config, const AlgorithmParams& params,
                         std::uint64_t seed) -> LossTrace
{
    params.validate();
    return rolling_horizon_run(
        scenario, config, [&params](const Problem& p, std::uint64_t s) { return run(p, params, s); }, seed);
}

}  // namespace msgw::allocation
