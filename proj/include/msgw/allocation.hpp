#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "msgw/optimizer.hpp"

namespace msgw::allocation {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Every constant of the allocation model. Ranges are closed intervals of
// units per site (demand) or per center (supply) per cycle.
struct ScenarioConfig {
    std::size_t centers = 5;
    std::size_t sites = 5;
    std::size_t cycles = 5;
    std::size_t horizon = 2;
    double area = 100.0;
    double demand_min = 20.0;
    double demand_max = 60.0;
    double supply_min = 30.0;
    double supply_max = 80.0;
    double penalty = 1000.0;

    void validate() const;
    [[nodiscard]] auto label() const -> std::string;
};

struct Scenario {
    std::vector<Point2> centers;
    std::vector<Point2> sites;
    // demand[cycle][site], supply[cycle][center]
    std::vector<std::vector<double>> demand;
    std::vector<std::vector<double>> supply;
    std::uint64_t seed = 0;

    [[nodiscard]] auto cycles() const noexcept -> std::size_t { return demand.size(); }
    [[nodiscard]] auto distance(std::size_t center, std::size_t site) const -> double;
};

struct CycleState {
    std::size_t cycle = 0;
    std::vector<double> deficit;
    double cumulative_loss = 0.0;

    static auto fresh(std::size_t sites) -> CycleState;
};

// Shipments over the planning domain, indexed [h][center][site].
struct Plan {
    std::size_t horizon = 0;
    std::size_t centers = 0;
    std::size_t sites = 0;
    std::vector<double> shipments;

    [[nodiscard]] auto at(std::size_t h, std::size_t c, std::size_t s) const -> double
    {
        return shipments[(h * centers + c) * sites + s];
    }
    [[nodiscard]] auto at(std::size_t h, std::size_t c, std::size_t s) -> double&
    {
        return shipments[(h * centers + c) * sites + s];
    }
};

auto generate_scenario(const ScenarioConfig& config, std::uint64_t seed) -> Scenario;

// Demand and supply the planner sees for each cycle of the domain that
// starts at state.cycle. Only the current cycle is revealed; later cycles
// repeat it.
struct CycleForecast {
    std::vector<std::vector<double>> demand;
    std::vector<std::vector<double>> supply;
};
auto forecast(const Scenario& scenario, const CycleState& state, std::size_t horizon) -> CycleForecast;

auto plan_from_decision(std::span<const double> x, std::size_t horizon, std::size_t centers, std::size_t sites)
    -> Plan;

// Scales each over-committed center row down to its supply. Returns the
// total overshoot that was removed.
auto repair_plan(Plan& plan, const CycleForecast& fc) -> double;

// Objectives of a feasible plan: unmet demand summed over the domain's
// cycles (the carried deficit counts toward the first), and
// shipment-weighted distance.
auto plan_objectives(const Plan& plan, const Scenario& scenario, const CycleState& state, const CycleForecast& fc)
    -> ObjectiveVector;

auto encode_cycle_problem(const Scenario& scenario, const CycleState& state, std::size_t horizon, double penalty)
    -> Problem;

// Unmet demand after executing the first cycle of `plan`.
auto system_loss(const Plan& plan, const Scenario& scenario, const CycleState& state) -> double;

// Applies the first cycle of a repaired plan and advances the state.
auto execute(const Plan& plan, const Scenario& scenario, CycleState state) -> CycleState;

// Lexicographic choice from the archive: smallest executed-cycle loss,
// then smallest transport effort, then archive order.
auto select_plan(std::span<const Individual> archive, const Scenario& scenario, const CycleState& state,
                 std::size_t horizon) -> Plan;

struct LossTrace {
    std::vector<double> loss;

    // First 1-based cycle with zero loss, if any.
    [[nodiscard]] auto zero_cycle() const -> std::optional<std::size_t>;
};

// Optimizes one encoded cycle problem from a seed.
using CycleOptimizer = std::function<RunRecord(const Problem&, std::uint64_t)>;

auto rolling_horizon_run(const Scenario& scenario, const ScenarioConfig& config, const CycleOptimizer& optimizer,
                         std::uint64_t seed) -> LossTrace;
// Same, with MSGW-FLM as the cycle optimizer.
auto rolling_horizon_run(const Scenario& scenario, const ScenarioConfig& config, const AlgorithmParams& params,
                         std::uint64_t seed) -> LossTrace;

}  // namespace msgw::allocation
