#include "msgw/ranking.hpp"

#include <algorithm>
#include <numeric>

namespace msgw {

auto fast_nondominated_sort(std::span<const ObjectiveVector> points) -> FrontPartition
{
    const std::size_t n = points.size();
    FrontPartition partition;
    if (n == 0) {
        return partition;
    }
    std::vector<std::vector<std::size_t>> dominated_by_me(n);
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(points[p], points[q])) {
                dominated_by_me[p].push_back(q);
                ++domination_count[q];
            } else if (dominates(points[q], points[p])) {
                dominated_by_me[q].push_back(p);
                ++domination_count[p];
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (domination_count[p] == 0) {
            current.push_back(p);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto p : current) {
            for (auto q : dominated_by_me[p]) {
                if (--domination_count[q] == 0) {
                    next.push_back(q);
                }
            }
        }
        std::sort(next.begin(), next.end());
        partition.fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return partition;
}

auto fast_nondominated_sort(std::span<Individual> pop) -> FrontPartition
{
    std::vector<ObjectiveVector> points;
    points.reserve(pop.size());
    for (const auto& ind : pop) {
        points.push_back(ind.objectives);
    }
    auto partition = fast_nondominated_sort(points);
    for (std::size_t f = 0; f < partition.fronts.size(); ++f) {
        for (auto i : partition.fronts[f]) {
            pop[i].front_index = f;
        }
    }
    return partition;
}

auto crowding_distance(std::span<const ObjectiveVector> front) -> std::vector<double>
{
    const std::size_t n = front.size();
    if (n <= 2) {
        return std::vector<double>(n, kInfinity);
    }
    const std::size_t m = front.front().size();
    std::vector<double> dist(n, 0.0);
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < m; ++k) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return front[a][k] < front[b][k]; });
        const double lo = front[order.front()][k];
        const double hi = front[order.back()][k];
        dist[order.front()] = kInfinity;
        dist[order.back()] = kInfinity;
        const double range = hi - lo;
        if (range <= 0.0) {
            continue;
        }
        for (std::size_t i = 1; i + 1 < n; ++i) {
            dist[order[i]] += (front[order[i + 1]][k] - front[order[i - 1]][k]) / range;
        }
    }
    return dist;
}

auto qr_better(const Individual& a, const Individual& b) -> bool
{
    const auto fa = a.front_index.value_or(static_cast<std::size_t>(-1));
    const auto fb = b.front_index.value_or(static_cast<std::size_t>(-1));
    if (fa != fb) {
        return fa < fb;
    }
    return a.crowding.value_or(0.0) > b.crowding.value_or(0.0);
}

auto qr_sort(std::vector<Individual> pop) -> std::vector<Individual>
{
    const auto partition = fast_nondominated_sort(std::span<Individual>(pop));
    for (const auto& front : partition.fronts) {
        std::vector<ObjectiveVector> pts;
        pts.reserve(front.size());
        for (auto i : front) {
            pts.push_back(pop[i].objectives);
        }
        const auto cd = crowding_distance(pts);
        for (std::size_t j = 0; j < front.size(); ++j) {
            pop[front[j]].crowding = cd[j];
        }
    }
    std::stable_sort(pop.begin(), pop.end(), qr_better);
    return pop;
}

}  // namespace msgw
