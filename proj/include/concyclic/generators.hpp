#pragma once

#include "concyclic/circle_model.hpp"

#include <cstdint>
#include <vector>

namespace concyclic::gen {

std::vector<Rational> regular_polygon_turns(int n);

/// Regular n-gon on the unit circle, exact turn fractions i/n.
CirclePointSet regular_polygon(int n);

/// Seeded uniform angles in Float mode. With verify_distinct, classifies
/// the instance and resamples until it is DistinctDiagonals (keep n small
/// enough for the O(n^2 log n) classifier).
CirclePointSet random_instance(int n, std::uint64_t seed, bool verify_distinct);

/// Seeded uniform angles as exact turn fractions k / 2^62. Meant for
/// large-n benchmarking: Float-mode tolerance makes near-ties certain
/// once n is in the tens of thousands, while exact random fractions
/// collide with probability ~ 2^-62 per comparison.
CirclePointSet random_instance_exact(int n, std::uint64_t seed);

struct EqualEarsInstance {
    CirclePointSet points;
    /// Apexes of the engineered equal-length ear pair (sharing a vertex).
    int apex_a = -1;
    int apex_b = -1;
};

/// Exact-mode instance with |ear(apex_a)| == |ear(apex_b)| sharing a
/// vertex, no symmetric quadruple, and the pair among the four longest
/// initial ears. n >= 6.
EqualEarsInstance equal_ears_instance(int n, std::uint64_t seed);

} // namespace concyclic::gen
