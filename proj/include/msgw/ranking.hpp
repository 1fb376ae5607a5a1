#pragma once

#include <span>
#include <vector>

#include "msgw/core.hpp"

namespace msgw {

// Fronts of population indices, best first.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
};

// Deb's fast non-dominated sort. Writes front_index into each individual.
auto fast_nondominated_sort(std::span<Individual> pop) -> FrontPartition;
auto fast_nondominated_sort(std::span<const ObjectiveVector> points) -> FrontPartition;

// Crowding distance over one front of mutually non-dominated points.
// Per-objective extremes get +inf; fronts of two or fewer are all +inf.
auto crowding_distance(std::span<const ObjectiveVector> front) -> std::vector<double>;

// Runs the sort, assigns crowding per front, and returns the population
// ordered by quality rank: front ascending, crowding descending, then
// input order.
auto qr_sort(std::vector<Individual> pop) -> std::vector<Individual>;

// Crowded comparison between two ranked individuals.
[[nodiscard]] auto qr_better(const Individual& a, const Individual& b) -> bool;

}  // namespace msgw
