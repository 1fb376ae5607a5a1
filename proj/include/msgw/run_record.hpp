#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "msgw/core.hpp"

namespace msgw {

// One row of per-generation progress. Indicator fields are NaN when the
// run was not given a reference front.
struct GenerationSnapshot {
    std::size_t generation = 0;
    std::size_t evaluations = 0;
    std::size_t archive_size = 0;
    bool truncated = false;
    double hv = 0.0;
    double igd = 0.0;
    double spread = 0.0;
};

struct RunRecord {
    std::string algorithm;
    std::string problem;
    std::uint64_t seed = 0;
    std::map<std::string, double> params;
    std::size_t evaluations = 0;
    std::size_t invariant_violations = 0;
    std::vector<GenerationSnapshot> generations;
    std::vector<Individual> archive;

    [[nodiscard]] auto archive_objectives() const -> std::vector<ObjectiveVector>;
};

// One JSON document per run. Doubles are written in shortest round-trip
// form, so equal records serialize to equal bytes.
auto to_json(const RunRecord& record) -> std::string;
auto run_record_from_json(std::string_view text) -> RunRecord;

}  // namespace msgw
