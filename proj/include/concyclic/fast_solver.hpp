#pragma once

#include "concyclic/triangulation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace concyclic {

struct SolveStats {
    std::uint64_t chord_comparisons = 0;
    std::uint64_t arcs_built = 0;
};

struct SolveOptions {
    /// Cross-check the maintained top-ear list against a full scan and
    /// the emitted ear against the maximal-pair property at every step.
    /// O(k^2) per step; for tests only.
    bool verify_invariants = false;
};

struct EarRecord {
    int apex = -1;
    std::pair<int, int> endpoints{-1, -1}; // cyclic neighbors of apex
    TurnFraction key;                      // chord key; larger = longer
};

/// Sweep state shared by the two solvers: a doubly-linked ring of the
/// surviving points plus a bounded list of the longest live ears.
///
/// After removing apex i, the three ears at apexes i-1, i, i+1 vanish or
/// change and two new ears appear; the top list is rebuilt from the old
/// survivors and the two new records only, in constant time.
class EarSolver {
public:
    EarSolver(const CirclePointSet& points, SolveStats* stats, SolveOptions options);

    int ring_size() const { return ring_size_; }
    int next(int i) const { return next_[i]; }
    int prev(int i) const { return prev_[i]; }
    bool alive(int i) const { return alive_[i]; }

    EarRecord ear_at(int apex) const;
    /// Longest live ears, sorted by descending key (ties by apex).
    const std::vector<EarRecord>& top() const { return top_; }

    /// True iff the ears at the two apexes cross (apexes ring-adjacent).
    bool ears_cross(int apex_a, int apex_b) const;

    /// Emits the ear at `apex` into the output and removes the apex.
    void remove_apex(int apex);

    /// Undoes the most recent remove_apex (used by the one-step lookahead).
    void undo_last_removal();

    const std::vector<std::pair<int, int>>& output() const { return output_; }
    std::vector<int> ring_indices() const; // surviving points in cyclic order

    int compare_keys(const TurnFraction& a, const TurnFraction& b);

    const CirclePointSet& points() const { return points_; }

private:
    void rebuild_top(const std::vector<EarRecord>& candidates);
    void verify_top() const;
    void verify_maximal_pair(int apex) const;

    static constexpr int kTopKeep = 8;

    const CirclePointSet& points_;
    SolveStats* stats_;
    SolveOptions options_;
    std::vector<int> next_, prev_;
    std::vector<char> alive_;
    int ring_size_ = 0;
    std::vector<EarRecord> top_;
    std::vector<std::pair<int, int>> output_;

    struct UndoRecord {
        int apex;
        int prev, next;
        std::vector<EarRecord> top;
    };
    std::optional<UndoRecord> undo_;
};

/// Quasi-linear solver for inputs whose diagonal lengths are pairwise
/// distinct. Selection per step: if the two longest ears are disjoint,
/// emit the second longest, else the third; brute force below a hexagon.
/// Throws Error(precondition_violated) when an equal chord comparison is
/// encountered (the input was not DistinctDiagonals).
Triangulation solve_simplified(const CirclePointSet& points, SolveStats* stats = nullptr,
                               const SolveOptions& options = {});

/// Solver for inputs without symmetric quadruples: tracks the four
/// longest ears, dispatches on the equal-length casework and uses a
/// one-step lookahead to decide between two equal third ears; exhaustive
/// below ring size 9. Throws Error(precondition_violated) when a
/// detected tie implies a symmetric quadruple.
Triangulation solve_extended(const CirclePointSet& points, SolveStats* stats = nullptr,
                             const SolveOptions& options = {});

/// Length-maximal triangulation of the sub-polygon formed by the listed
/// points (cyclic order, arcs measured on the original circle), found by
/// exhaustive scoring. Requires 4 <= ring.size() <= 8. Returns diagonals
/// in original point indices; throws on a full-score tie.
std::vector<std::pair<int, int>> base_case_small(const CirclePointSet& points,
                                                 const std::vector<int>& ring);

} // namespace concyclic
