#pragma once

#include "concyclic/triangulation.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace concyclic::oracle {

/// Catalan growth makes larger sizes meaningless at desk scale.
inline constexpr int kMaxOracleSize = 16;

/// Visits each triangulation of the convex n-gon exactly once
/// (Catalan(n-2) of them). Accepts 3 <= n <= kMaxOracleSize.
void for_each_triangulation(int n, const std::function<void(const Triangulation&)>& visit);

/// Materialized variant; mind the memory for n close to the guard.
std::vector<Triangulation> enumerate_triangulations(int n);

std::uint64_t count_triangulations(int n);

struct OptimalSet {
    ScoreVector score; // LengthVector of the winners
    std::vector<Triangulation> winners; // sorted by diagonal set
};

/// Scores every triangulation and keeps all lexicographic maxima.
/// cross_check_angles re-derives the winner set under angle scoring and
/// throws on disagreement. Parallelized over the top-level apex choice
/// when built with OpenMP; the reduction order is deterministic.
OptimalSet optimal_set(const CirclePointSet& points, bool cross_check_angles = true);

/// Serial reference implementation, kept for testing and benchmarking.
OptimalSet optimal_set_serial(const CirclePointSet& points, bool cross_check_angles = true);

bool is_unique_optimum(const CirclePointSet& points);

} // namespace concyclic::oracle
