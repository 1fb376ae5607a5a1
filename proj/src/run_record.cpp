#include "msgw/run_record.hpp"

#include <cmath>

#include "json.hpp"

namespace msgw {
namespace {

using nlohmann::json;

// JSON has no NaN; missing indicators are written as null.
auto num(double v) -> json
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

auto get_num(const json& j) -> double
{
    return j.is_null() ? std::nan("") : j.get<double>();
}

}  // namespace

auto RunRecord::archive_objectives() const -> std::vector<ObjectiveVector>
{
    std::vector<ObjectiveVector> out;
    out.reserve(archive.size());
    for (const auto& ind : archive) {
        out.push_back(ind.objectives);
    }
    return out;
}

auto to_json(const RunRecord& record) -> std::string
{
    json doc;
    doc["algorithm"] = record.algorithm;
    doc["problem"] = record.problem;
    doc["seed"] = record.seed;
    doc["params"] = record.params;
    doc["evaluations"] = record.evaluations;
    doc["invariant_violations"] = record.invariant_violations;
    json gens = json::array();
    for (const auto& g : record.generations) {
        gens.push_back({{"generation", g.generation},
                        {"evaluations", g.evaluations},
                        {"archive_size", g.archive_size},
                        {"truncated", g.truncated},
                        {"hv", num(g.hv)},
                        {"igd", num(g.igd)},
                        {"spread", num(g.spread)}});
    }
    doc["generations"] = std::move(gens);
    json archive = json::array();
    for (const auto& ind : record.archive) {
        archive.push_back({{"x", ind.decision}, {"f", ind.objectives}});
    }
    doc["archive"] = std::move(archive);
    return doc.dump(1);
}

auto run_record_from_json(std::string_view text) -> RunRecord
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw LoadError(std::string("run record: ") + e.what());
    }
    RunRecord r;
    try {
        r.algorithm = doc.at("algorithm").get<std::string>();
        r.problem = doc.at("problem").get<std::string>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.params = doc.at("params").get<std::map<std::string, double>>();
        r.evaluations = doc.at("evaluations").get<std::size_t>();
        r.invariant_violations = doc.value("invariant_violations", std::size_t{0});
        for (const auto& g : doc.at("generations")) {
            r.generations.push_back({g.at("generation").get<std::size_t>(), g.at("evaluations").get<std::size_t>(),
                                     g.at("archive_size").get<std::size_t>(), g.at("truncated").get<bool>(),
                                     get_num(g.at("hv")), get_num(g.at("igd")), get_num(g.at("spread"))});
        }
        for (const auto& a : doc.at("archive")) {
            Individual ind;
            ind.decision = a.at("x").get<DecisionVector>();
            ind.objectives = a.at("f").get<ObjectiveVector>();
            r.archive.push_back(std::move(ind));
        }
    } catch (const json::exception& e) {
        throw LoadError(std::string("run record: ") + e.what());
    }
    return r;
}

}  // namespace msgw
