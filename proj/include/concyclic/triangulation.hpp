#pragma once

#include "concyclic/circle_model.hpp"

#include <array>
#include <utility>
#include <vector>

namespace concyclic {

/// Triangulation of the convex n-gon inscribed in the circle, stored as
/// its n-3 diagonals (normalized: i < j, sorted).
struct Triangulation {
    int n = 0;
    std::vector<std::pair<int, int>> diagonals;

    void normalize();

    bool operator==(const Triangulation& other) const {
        return n == other.n && diagonals == other.diagonals;
    }
    bool operator<(const Triangulation& other) const {
        return diagonals < other.diagonals;
    }
};

Triangulation make_triangulation(int n, std::vector<std::pair<int, int>> diagonals);

/// True iff x lies strictly between a and b walking CCW from a to b.
bool cyclic_between(int n, int a, int x, int b);

/// True iff the diagonals (a1,b1) and (a2,b2) cross in the open disk.
bool diagonals_cross(int n, std::pair<int, int> d1, std::pair<int, int> d2);

/// True iff (i,j) is a chord, i.e. cyclically adjacent indices.
bool is_chord(int n, int i, int j);

/// Checks the Triangulation invariants: n-3 distinct diagonals, none a
/// chord, pairwise non-crossing.
bool validate(const Triangulation& t, int n);

/// Diagonals of the form (i-1, i+1) mod n: those cutting off one vertex.
std::vector<std::pair<int, int>> ears_of(const Triangulation& t);

/// The n-2 triangles induced by a valid triangulation, each as sorted
/// index triple, in unspecified order.
std::vector<std::array<int, 3>> triangles_of(const Triangulation& t);

struct DualPathResult {
    bool is_path = false;
    /// Ordered along the path when is_path; arbitrary otherwise.
    std::vector<std::array<int, 3>> triangles;
    /// A triangle with three diagonal-neighbors, when !is_path.
    std::array<int, 3> branching{-1, -1, -1};
};

DualPathResult dual_path(const Triangulation& t);

enum class ScoreKind { AngleVector, LengthVector };

/// Sorted comparison-key list of a triangulation.
///  - LengthVector: n-3 chord keys of the diagonals, ascending by length.
///  - AngleVector: 3n-6 subtended arcs, ascending (angle = arc/2 turn).
struct ScoreVector {
    ScoreKind kind = ScoreKind::LengthVector;
    NumericMode mode = NumericMode::Exact;
    std::vector<TurnFraction> entries;
};

ScoreVector length_vector(const Triangulation& t, const CirclePointSet& points);
ScoreVector angle_vector(const Triangulation& t, const CirclePointSet& points);

/// Lexicographic three-way comparison of two score vectors of the same
/// kind and length.
int compare_lex(const ScoreVector& a, const ScoreVector& b);

/// The double-fan triangulation containing the ears at apexes i and j.
Triangulation fan_pair_triangulation(const CirclePointSet& points, int i, int j);

} // namespace concyclic
