#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>

#include "msgw/problems.hpp"
#include "oracles.hpp"

using namespace msgw;

namespace {

auto unit_tail(std::size_t d, double head) -> DecisionVector
{
    DecisionVector x(d, 0.0);
    x[0] = head;
    return x;
}

}  // namespace

TEST_CASE("registry holds the 28 table problems in order")
{
    const auto& ids = benchmark_ids();
    REQUIRE(ids.size() == 28);
    CHECK(ids.front() == "ZDT1");
    CHECK(ids[5] == "WFG1");
    CHECK(ids[13] == "DTLZ1");
    CHECK(ids.back() == "LZ09_F9");
    for (const auto& id : ids) {
        CHECK(is_benchmark_id(id));
        CHECK(make_problem(id).id() == id);
    }
}

TEST_CASE("unknown ids are configuration errors that list the valid ids")
{
    CHECK_FALSE(is_benchmark_id("ZDT5"));
    try {
        (void)make_problem("ZDT5");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("ZDT5") != std::string::npos);
        CHECK(what.find("LZ09_F9") != std::string::npos);
    }
}

TEST_CASE("ZDT1 hand evaluations")
{
    const auto p = make_problem("ZDT1");
    REQUIRE(p.dimension() == 30);
    const auto a = p.evaluate(DecisionVector(30, 0.0));
    CHECK(a[0] == 0.0);
    CHECK(a[1] == doctest::Approx(1.0).epsilon(1e-15));
    const auto b = p.evaluate(unit_tail(30, 1.0));
    CHECK(b[0] == 1.0);
    CHECK(std::fabs(b[1]) < 1e-15);
}

TEST_CASE("DTLZ2 with g = 0 at the first axis")
{
    const auto p = make_problem("DTLZ2");
    REQUIRE(p.objectives() == 3);
    REQUIRE(p.dimension() == 12);
    DecisionVector x(12, 0.5);
    x[0] = 0.0;
    x[1] = 0.0;
    const auto f = p.evaluate(x);
    CHECK(f[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(f[1]) < 1e-15);
    CHECK(std::fabs(f[2]) < 1e-15);
}

TEST_CASE("default dimensions")
{
    const std::pair<const char*, std::size_t> dims[] = {
        {"ZDT1", 30}, {"ZDT2", 30}, {"ZDT3", 30}, {"ZDT4", 10}, {"ZDT6", 10}, {"DTLZ1", 7},
        {"DTLZ2", 12}, {"DTLZ4", 12}, {"DTLZ5", 12}, {"DTLZ6", 12}, {"DTLZ7", 22}, {"WFG1", 24},
        {"WFG9", 24}, {"LZ09_F1", 30}, {"LZ09_F6", 10}, {"LZ09_F9", 30},
    };
    for (const auto& [id, d] : dims) {
        CAPTURE(id);
        CHECK(make_problem(id).dimension() == d);
    }
    CHECK(make_problem("LZ09_F6").objectives() == 3);
    CHECK(make_problem("WFG4").objectives() == 2);
}

TEST_CASE("every problem evaluates finite objectives at random in-bounds points")
{
    RandomSource rng(17);
    for (const auto& id : benchmark_ids()) {
        CAPTURE(id);
        const auto p = make_problem(id);
        for (int t = 0; t < 50; ++t) {
            DecisionVector x(p.dimension());
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] = rng.uniform(p.bounds().lower[i], p.bounds().upper[i]);
            }
            const auto f = p.evaluate(x);
            REQUIRE(f.size() == p.objectives());
            for (double v : f) {
                REQUIRE(std::isfinite(v));
            }
            // purity
            REQUIRE(p.evaluate(x) == f);
        }
    }
}

TEST_CASE("dimension mismatch is a contract violation")
{
    const auto p = make_problem("ZDT1");
    CHECK_THROWS_AS((void)p.evaluate(DecisionVector(29, 0.0)), ContractViolation);
}

TEST_CASE("ZDT1 front sample of three points")
{
    const auto f = make_problem("ZDT1").reference_front(3).points;
    REQUIRE(f.size() == 3);
    CHECK(f[0] == ObjectiveVector{0.0, 1.0});
    CHECK(f[1] == ObjectiveVector{0.25, 0.5});
    CHECK(f[2] == ObjectiveVector{1.0, 0.0});
}

TEST_CASE("ZDT2 front sample of two points is the endpoints")
{
    const auto f = make_problem("ZDT2").reference_front(2).points;
    REQUIRE(f.size() == 2);
    CHECK(f[0] == ObjectiveVector{0.0, 1.0});
    CHECK(f[1] == ObjectiveVector{1.0, 0.0});
}

TEST_CASE("two-point fronts are the extremes of the sampler")
{
    for (const char* id : {"ZDT1", "ZDT2", "ZDT4", "ZDT6"}) {
        CAPTURE(id);
        const auto p = make_problem(id);
        const auto two = p.reference_front(2).points;
        const auto many = p.reference_front(1000).points;
        REQUIRE(two.size() == 2);
        CHECK(two.front() == many.front());
        CHECK(two.back() == many.back());
    }
}

TEST_CASE("analytic fronts are non-dominated and large enough")
{
    for (const auto& id : benchmark_ids()) {
        if (has_bundled_front(id)) {
            continue;
        }
        CAPTURE(id);
        const auto front = make_problem(id).reference_front().points;
        CHECK(front.size() >= 100);
        for (std::size_t i = 0; i < front.size(); ++i) {
            for (std::size_t j = 0; j < front.size(); ++j) {
                REQUIRE_FALSE(oracle::dominates(front[i], front[j]));
            }
        }
    }
}

TEST_CASE("ZDT front points are reproduced by their pre-images")
{
    for (const char* id : {"ZDT1", "ZDT2", "ZDT4"}) {
        CAPTURE(id);
        const auto p = make_problem(id);
        for (const auto& pt : p.reference_front(200).points) {
            const auto f = p.evaluate(unit_tail(p.dimension(), pt[0]));
            CHECK(std::fabs(f[0] - pt[0]) < 1e-12);
            CHECK(std::fabs(f[1] - pt[1]) < 1e-12);
        }
    }
}

TEST_CASE("DTLZ2 front points lie on the unit sphere")
{
    for (const auto& pt : make_problem("DTLZ2").reference_front().points) {
        CHECK(std::fabs(pt[0] * pt[0] + pt[1] * pt[1] + pt[2] * pt[2] - 1.0) < 1e-12);
    }
    for (const auto& pt : make_problem("DTLZ1").reference_front().points) {
        CHECK(std::fabs(pt[0] + pt[1] + pt[2] - 0.5) < 1e-12);
    }
}

TEST_CASE("bundled fronts load, are non-dominated and are read-only data")
{
    for (const auto& id : benchmark_ids()) {
        if (!has_bundled_front(id)) {
            continue;
        }
        CAPTURE(id);
        const auto front = make_problem(id).reference_front();
        CHECK(front.source == FrontSource::kBundledFile);
        CHECK(front.points.size() >= 100);
        const auto& pts = front.points;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = 0; j < pts.size(); ++j) {
                REQUIRE_FALSE(oracle::dominates(pts[i], pts[j]));
            }
        }
    }
}

TEST_CASE("missing bundled file is a load error naming the problem")
{
    const auto saved = front_data_dir();
    const auto empty = std::filesystem::temp_directory_path() / "msgw-empty-fronts";
    std::filesystem::create_directories(empty);
    set_front_data_dir(empty);
    try {
        (void)make_problem("WFG4").reference_front();
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        CHECK(std::string(e.what()).find("WFG4") != std::string::npos);
    }
    set_front_data_dir(saved);
    CHECK_NOTHROW((void)make_problem("WFG4").reference_front());
}

TEST_CASE("front files round-trip")
{
    const auto path = std::filesystem::temp_directory_path() / "msgw-front-roundtrip.txt";
    const std::vector<ObjectiveVector> pts = {{0.0, 1.0}, {0.25, 0.5}, {1.0, 0.0}};
    write_front_file(path, pts);
    CHECK(read_front_file(path) == pts);
    std::filesystem::remove(path);
}

TEST_CASE("nondominated_filter keeps exactly the oracle's first front without duplicates")
{
    std::mt19937_64 gen(8);
    for (int t = 0; t < 50; ++t) {
        auto pts = oracle::random_points(60, t % 2 ? 2 : 3, gen);
        pts.push_back(pts.front());
        const auto rank = oracle::front_indices(pts);
        std::set<ObjectiveVector> expected;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (rank[i] == 0) {
                expected.insert(pts[i]);
            }
        }
        const auto got = nondominated_filter(pts);
        CHECK(std::set<ObjectiveVector>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
    }
}

TEST_CASE("thin_front keeps endpoints and reduces to the requested size")
{
    std::vector<ObjectiveVector> dense;
    for (int i = 0; i <= 10000; ++i) {
        const double t = i / 10000.0;
        dense.push_back({t, 1.0 - t});
    }
    const auto thin = thin_front(dense, 101);
    REQUIRE(thin.size() == 101);
    CHECK(thin.front() == dense.front());
    CHECK(thin.back() == dense.back());
}
