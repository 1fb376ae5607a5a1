#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "msgw/core.hpp"

namespace msgw {

enum class FrontSource { kAnalytic, kBundledFile };

struct ReferenceFront {
    std::vector<ObjectiveVector> points;
    FrontSource source = FrontSource::kAnalytic;
};

// Writes the objective values of x into out (length = objective count).
using Evaluator = std::function<void(std::span<const double> x, std::span<double> out)>;
// Samples n points of the true front; n == 0 asks for the sampler's default.
using FrontSampler = std::function<ReferenceFront(std::size_t n)>;

// Box-constrained minimization problem. Immutable once built; copies share
// the evaluator.
class Problem {
public:
    Problem(std::string id, std::size_t objectives, Bounds bounds, Evaluator evaluator,
            FrontSampler sampler = {});

    [[nodiscard]] auto id() const noexcept -> const std::string& { return id_; }
    [[nodiscard]] auto dimension() const noexcept -> std::size_t { return bounds_.size(); }
    [[nodiscard]] auto objectives() const noexcept -> std::size_t { return objectives_; }
    [[nodiscard]] auto bounds() const noexcept -> const Bounds& { return bounds_; }
    [[nodiscard]] auto has_reference_front() const noexcept -> bool { return static_cast<bool>(sampler_); }

    [[nodiscard]] auto evaluate(std::span<const double> x) const -> ObjectiveVector;
    void evaluate(std::span<const double> x, std::span<double> out) const;

    // Throws LoadError if the front is file-backed and the file is missing.
    [[nodiscard]] auto reference_front(std::size_t n = kDefaultFrontPoints) const -> ReferenceFront;

    static constexpr std::size_t kDefaultFrontPoints = 1000;

private:
    std::string id_;
    std::size_t objectives_;
    Bounds bounds_;
    std::shared_ptr<const Evaluator> evaluator_;
    std::shared_ptr<const FrontSampler> sampler_;
};

// The 28 benchmark problems, in table order.
[[nodiscard]] auto benchmark_ids() -> const std::vector<std::string>&;
[[nodiscard]] auto is_benchmark_id(std::string_view id) -> bool;
// Throws ConfigError listing the valid ids when id is unknown.
[[nodiscard]] auto make_problem(std::string_view id) -> Problem;

// Directory holding the bundled WFG/LZ09 front files. Defaults to the
// compiled-in data path; MSGW_DATA_DIR overrides it.
[[nodiscard]] auto front_data_dir() -> std::filesystem::path;
void set_front_data_dir(std::filesystem::path dir);

// Dense analytic sample of the WFG / LZ09 fronts used to produce the
// bundled files (non-dominated filtered and thinned to n points).
[[nodiscard]] auto generate_front(std::string_view id, std::size_t n) -> std::vector<ObjectiveVector>;
[[nodiscard]] auto has_bundled_front(std::string_view id) -> bool;

// Reference-front file format: one point per line, space-separated values.
[[nodiscard]] auto read_front_file(const std::filesystem::path& path) -> std::vector<ObjectiveVector>;
void write_front_file(const std::filesystem::path& path, std::span<const ObjectiveVector> points);

// Front helpers shared by the samplers.
[[nodiscard]] auto nondominated_filter(std::vector<ObjectiveVector> points) -> std::vector<ObjectiveVector>;
// Reduces a dense front to about n well-spread points. Two objectives use
// arc-length spacing along the f1-sorted curve; otherwise farthest-point
// selection.
[[nodiscard]] auto thin_front(std::vector<ObjectiveVector> points, std::size_t n) -> std::vector<ObjectiveVector>;

}  // namespace msgw
