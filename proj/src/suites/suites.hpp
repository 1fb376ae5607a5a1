#pragma once

#include <string_view>
#include <vector>

#include "msgw/problems.hpp"

namespace msgw::suites {

auto make_zdt(std::string_view id) -> Problem;
auto make_dtlz(std::string_view id) -> Problem;
auto make_wfg(std::string_view id) -> Problem;
auto make_lz09(std::string_view id) -> Problem;

// Dense samples of the true fronts, before filtering and thinning.
auto wfg_front_dense(std::string_view id, std::size_t samples) -> std::vector<ObjectiveVector>;
auto lz09_front_dense(std::string_view id, std::size_t samples) -> std::vector<ObjectiveVector>;

// Simplex lattice with about n points on the M=3 unit simplex.
auto simplex_lattice(std::size_t n) -> std::vector<ObjectiveVector>;

// File-backed sampler for a bundled front.
auto bundled_sampler(std::string id) -> FrontSampler;

}  // namespace msgw::suites
