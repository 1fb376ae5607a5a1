#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "msgw/ranking.hpp"
#include "oracles.hpp"

using namespace msgw;

namespace {

auto individuals(const std::vector<ObjectiveVector>& pts) -> std::vector<Individual>
{
    std::vector<Individual> pop;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Individual ind;
        ind.decision = {static_cast<double>(i)};
        ind.objectives = pts[i];
        pop.push_back(ind);
    }
    return pop;
}

const double inf = kInfinity;

}  // namespace

TEST_CASE("three mutually non-dominated points form one front")
{
    const std::vector<ObjectiveVector> pts = {{0, 2}, {1, 1}, {2, 0}};
    const auto p = fast_nondominated_sort(std::span<const ObjectiveVector>(pts));
    REQUIRE(p.fronts.size() == 1);
    CHECK(p.fronts[0].size() == 3);
}

TEST_CASE("a dominance chain gives singleton fronts in order")
{
    const std::vector<ObjectiveVector> pts = {{2, 2}, {0, 0}, {1, 1}};
    const auto p = fast_nondominated_sort(std::span<const ObjectiveVector>(pts));
    REQUIRE(p.fronts.size() == 3);
    CHECK(p.fronts[0] == std::vector<std::size_t>{1});
    CHECK(p.fronts[1] == std::vector<std::size_t>{2});
    CHECK(p.fronts[2] == std::vector<std::size_t>{0});
}

TEST_CASE("empty population gives an empty partition")
{
    const std::vector<ObjectiveVector> pts;
    CHECK(fast_nondominated_sort(std::span<const ObjectiveVector>(pts)).fronts.empty());
}

TEST_CASE("sorting writes front indices onto individuals")
{
    auto pop = individuals({{2, 2}, {0, 0}, {1, 3}, {3, 1}});
    fast_nondominated_sort(std::span<Individual>(pop));
    CHECK(pop[1].front_index == 0);
    CHECK(pop[0].front_index == 1);
    CHECK(pop[2].front_index == 1);
    CHECK(pop[3].front_index == 1);
}

TEST_CASE("fast sort agrees with the brute-force oracle on random populations")
{
    std::mt19937_64 gen(2024);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + gen() % 50;
        const std::size_t m = t % 2 ? 3 : 2;
        auto pts = oracle::random_points(n, m, gen);
        // snap to a grid so equal coordinates appear
        for (auto& p : pts) {
            for (auto& v : p) {
                v = std::floor(v * 8.0) / 8.0;
            }
        }
        const auto expected = oracle::front_indices(pts);
        const auto part = fast_nondominated_sort(std::span<const ObjectiveVector>(pts));
        std::vector<std::size_t> got(n, SIZE_MAX);
        std::size_t covered = 0;
        for (std::size_t f = 0; f < part.fronts.size(); ++f) {
            for (auto i : part.fronts[f]) {
                REQUIRE(got[i] == SIZE_MAX);
                got[i] = f;
                ++covered;
            }
        }
        REQUIRE(covered == n);
        REQUIRE(got == expected);
    }
}

TEST_CASE("crowding of a three-point front")
{
    const std::vector<ObjectiveVector> pts = {{0, 1}, {0.5, 0.5}, {1, 0}};
    const auto cd = crowding_distance(pts);
    CHECK(cd[0] == inf);
    CHECK(cd[1] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(cd[2] == inf);
}

TEST_CASE("crowding of one and two points is infinite")
{
    CHECK(crowding_distance(std::vector<ObjectiveVector>{{0.3, 0.2}}) == std::vector<double>{inf});
    CHECK(crowding_distance(std::vector<ObjectiveVector>{{0, 1}, {1, 0}}) == std::vector<double>{inf, inf});
}

TEST_CASE("interior duplicates get zero crowding")
{
    const std::vector<ObjectiveVector> pts = {{0, 1}, {0.5, 0.5}, {0.5, 0.5}, {1, 0}};
    const auto cd = crowding_distance(pts);
    CHECK(cd[0] == inf);
    CHECK(cd[3] == inf);
    // each duplicate sees the other as one neighbour
    CHECK(std::min(cd[1], cd[2]) < 2.0);
    CHECK(cd[1] + cd[2] == doctest::Approx(2.0));
}

TEST_CASE("crowding matches the definition on random fronts")
{
    std::mt19937_64 gen(5);
    for (int t = 0; t < 100; ++t) {
        const auto front = oracle::random_front2(3 + gen() % 30, gen);
        const auto got = crowding_distance(front);
        const auto want = oracle::crowding(front);
        for (std::size_t i = 0; i < front.size(); ++i) {
            if (want[i] == inf) {
                CHECK(got[i] == inf);
            } else {
                CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("crowding is invariant under positive affine rescaling of one objective")
{
    std::mt19937_64 gen(6);
    for (int t = 0; t < 50; ++t) {
        auto front = oracle::random_front2(10, gen);
        const auto before = crowding_distance(front);
        for (auto& p : front) {
            p[1] = 3.5 * p[1] + 7.0;
        }
        const auto after = crowding_distance(front);
        for (std::size_t i = 0; i < front.size(); ++i) {
            if (before[i] == inf) {
                CHECK(after[i] == inf);
            } else {
                CHECK(after[i] == doctest::Approx(before[i]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("qr order: infinite crowding first in input order, then descending")
{
    std::vector<Individual> pop(4);
    const double cds[] = {inf, 2.0, inf, 1.0};
    for (std::size_t i = 0; i < 4; ++i) {
        pop[i].decision = {static_cast<double>(i)};
        pop[i].front_index = 0;
        pop[i].crowding = cds[i];
    }
    std::stable_sort(pop.begin(), pop.end(), qr_better);
    CHECK(pop[0].decision[0] == 0);
    CHECK(pop[1].decision[0] == 2);
    CHECK(pop[2].decision[0] == 1);
    CHECK(pop[3].decision[0] == 3);
}

TEST_CASE("qr_sort puts every front-0 member before front 1")
{
    // front 1 members would have larger crowding than the interior of front 0
    auto pop = individuals({{5, 5}, {0, 1}, {0.4, 0.6}, {0.5, 0.5}, {1, 0}, {6, 4}});
    const auto sorted = qr_sort(pop);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(sorted[i].front_index == 0);
    }
    CHECK(sorted[4].front_index == 1);
    CHECK(sorted[5].front_index == 1);
}

TEST_CASE("qr_sort equals a tuple sort on (front, -crowding, position)")
{
    std::mt19937_64 gen(9);
    for (int t = 0; t < 50; ++t) {
        const auto pts = oracle::random_points(50, 2, gen);
        const auto sorted = qr_sort(individuals(pts));
        const auto rank = oracle::front_indices(pts);
        std::vector<double> cd(pts.size());
        for (std::size_t f = 0; f <= *std::max_element(rank.begin(), rank.end()); ++f) {
            std::vector<std::size_t> members;
            std::vector<ObjectiveVector> front;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (rank[i] == f) {
                    members.push_back(i);
                    front.push_back(pts[i]);
                }
            }
            const auto c = oracle::crowding(front);
            for (std::size_t k = 0; k < members.size(); ++k) {
                cd[members[k]] = c[k];
            }
        }
        std::vector<std::tuple<std::size_t, double, std::size_t>> keys;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            keys.emplace_back(rank[i], -cd[i], i);
        }
        std::sort(keys.begin(), keys.end());
        REQUIRE(sorted.size() == pts.size());
        for (std::size_t k = 0; k < keys.size(); ++k) {
            REQUIRE(sorted[k].decision[0] == static_cast<double>(std::get<2>(keys[k])));
        }
    }
}
