#pragma once

#include <span>
#include <string>
#include <vector>

#include "msgw/core.hpp"

namespace msgw {

enum class Indicator { kHv, kIgd, kSpread, kGd };

struct IndicatorResult {
    Indicator indicator;
    double value;
    std::string reference;
};

// Exact hypervolume for two or three objectives (minimization). Points
// that do not strictly dominate ref contribute nothing.
auto hypervolume(std::span<const ObjectiveVector> front, std::span<const double> ref) -> double;

// How distances are aggregated for IGD/GD. kMean is the arithmetic mean of
// nearest-neighbour distances; kRootSumSquares is sqrt(sum d^2) / N, the
// form jMetal reports.
enum class DistanceAggregate { kMean, kRootSumSquares };

// Distance from each reference point to its nearest approximation point.
auto igd(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference,
         DistanceAggregate form = DistanceAggregate::kMean) -> double;

// Distance from each approximation point to its nearest reference point.
auto generational_distance(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference,
                           DistanceAggregate form = DistanceAggregate::kMean) -> double;

// Deb's Delta for two objectives; the generalized nearest-neighbour form
// for three. Sets of fewer than two points score 1.
auto spread(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference) -> double;

// Ideal and nadir of a reference front, used for the normalized HV mode.
struct ObjectiveScale {
    ObjectiveVector ideal;
    ObjectiveVector nadir;
};
auto scale_of(std::span<const ObjectiveVector> reference) -> ObjectiveScale;
auto normalize(std::span<const ObjectiveVector> points, const ObjectiveScale& scale) -> std::vector<ObjectiveVector>;

enum class HvReference {
    kRaw,         // ref = (1, ..., 1) on raw objectives
    kNormalized,  // normalize by the reference front, ref = (1.1, ..., 1.1)
};

auto hypervolume(std::span<const ObjectiveVector> front, HvReference mode,
                 std::span<const ObjectiveVector> reference_front) -> double;

auto to_string(Indicator i) -> std::string;
auto to_string(HvReference r) -> std::string;
auto parse_hv_reference(std::string_view s) -> HvReference;
auto to_string(DistanceAggregate d) -> std::string;
auto parse_distance_aggregate(std::string_view s) -> DistanceAggregate;

}  // namespace msgw
