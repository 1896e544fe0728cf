#pragma once

#include "concyclic/triangulation.hpp"

#include <cstdint>
#include <vector>

namespace concyclic::degenerate {

inline constexpr std::size_t kDefaultLimit = 4096;

struct EnumerateResult {
    std::vector<Triangulation> winners; // sorted by diagonal set
    bool truncated = false;
};

/// Enumerates every length-maximal triangulation by layer-synchronized
/// expansion of the ear-choice tree: at each layer every branch proposes
/// the ears that can be the next (smallest remaining) diagonal of an
/// optimal completion; branches whose emitted key is strictly beaten are
/// pruned, duplicates merged. Truncated to `limit` leaves.
EnumerateResult enumerate_optimal(const CirclePointSet& points,
                                  std::size_t limit = kDefaultLimit);

/// Number of optimal triangulations of the regular n-gon: n * 2^(n-5).
/// n >= 5 (for n = 4 the count is 2, by symmetry).
std::uint64_t regular_count(int n);

/// Deterministic single-output tie-break: relabels the points starting
/// from the lexicographically smallest Cartesian point (x, then y) in CCW
/// direction, expands the choice tree with children ordered by relabeled
/// apex, and returns the leftmost surviving leaf. The result is stated in
/// the point set's sorted indices, so it is invariant under permutations
/// of the input point order (but deliberately tied to the coordinate
/// frame).
Triangulation solve_canonical(const CirclePointSet& points);

} // namespace concyclic::degenerate
