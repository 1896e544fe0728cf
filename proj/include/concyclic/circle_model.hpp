#pragma once

#include "concyclic/error.hpp"
#include "concyclic/rational.hpp"

#include <array>
#include <vector>

namespace concyclic {

enum class NumericMode { Exact, Float };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Angular value on the circle, either an exact rational number of full
/// turns in [0,1) or a floating radian value in [0,2pi).
///
/// The same type also carries angular differences (arc spans) and the
/// chord-length comparison keys derived from them.
class TurnFraction {
public:
    TurnFraction() = default;

    static TurnFraction from_turns(Rational turns);
    static TurnFraction from_radians(double radians);

    NumericMode mode() const { return mode_; }
    const Rational& turns() const { return turns_; }
    double radians() const { return radians_; }

    /// Value in radians regardless of mode (approximate for Exact).
    double as_radians() const;
    /// Value in turns regardless of mode (approximate for Float).
    double as_turns_double() const;

    /// CCW angular distance from this value to `other`, in (0,1) turns.
    /// Both values must share a mode and must differ.
    TurnFraction ccw_delta_to(const TurnFraction& other) const;

    /// For an arc span s, min(s, full - s): increases strictly with the
    /// chord length subtended by s, and is equal exactly for equal chords.
    TurnFraction chord_key() const;

    /// Three-way numeric comparison: -1, 0, +1. Exact in Exact mode;
    /// tolerant of kFloatEps (relative to a full turn) in Float mode.
    int compare(const TurnFraction& other) const;

    bool is_zero() const;

    /// Float-mode comparison tolerance, measured relative to a full turn.
    static constexpr double kFloatEps = 1e-9;

private:
    NumericMode mode_ = NumericMode::Exact;
    Rational turns_;       // Exact mode
    double radians_ = 0.0; // Float mode
};

/// Directed circular span between two point indices.
struct Arc {
    int from = -1;
    int to = -1;
    TurnFraction span; // CCW from `from` to `to`, in (0,1) turns
};

enum class DegeneracyClass { DistinctDiagonals, NoSymmetricQuadruple, Degenerate };

const char* degeneracy_name(DegeneracyClass cls);

struct DegeneracyReport {
    DegeneracyClass cls = DegeneracyClass::DistinctDiagonals;
    /// Degenerate: symmetric quadruples (p,q,r,s) in cyclic order.
    /// NoSymmetricQuadruple: equal-length diagonal pairs sharing a vertex,
    /// flattened as (i1,j1,i2,j2).
    std::vector<std::array<int, 4>> witnesses;
};

/// n >= 4 concyclic points, cyclically ordered by angle. Index i refers
/// to the i-th point in sorted CCW order; label(i) recovers the caller's
/// original index.
class CirclePointSet {
public:
    /// Points on the unit circle given as exact turn fractions.
    static CirclePointSet from_turns(std::vector<Rational> turns);
    /// Points on the unit circle given as radians (Float mode).
    static CirclePointSet from_radians(std::vector<double> radians);
    /// Fits the circle through the first three non-collinear points and
    /// validates the rest against it (relative tolerance 1e-9).
    static CirclePointSet fit_circle(const std::vector<Point>& points);

    int size() const { return static_cast<int>(thetas_.size()); }
    NumericMode mode() const { return mode_; }
    Point center() const { return center_; }
    double radius() const { return radius_; }

    const TurnFraction& theta(int i) const { return thetas_.at(i); }
    int label(int i) const { return labels_.at(i); }
    /// Cartesian position of point i (original input coordinates when
    /// ingested through fit_circle, reconstructed otherwise).
    Point point(int i) const;
    bool has_input_points() const { return !input_points_.empty(); }

    Arc arc_between(int i, int j) const;
    /// Comparison key of the chord (i,j); larger key <=> longer chord.
    TurnFraction chord_key(int i, int j) const;

private:
    CirclePointSet() = default;
    void sort_and_check();

    NumericMode mode_ = NumericMode::Exact;
    Point center_{0.0, 0.0};
    double radius_ = 1.0;
    std::vector<TurnFraction> thetas_;
    std::vector<int> labels_;
    std::vector<Point> input_points_; // sorted order; empty unless fitted
};

/// Orders two arcs of the same circle by chord length.
int chord_compare(const Arc& a, const Arc& b);

/// 2 * radius * sin(span/2), as a floating value (reporting only).
double chord_length(const Arc& arc, double radius);

/// Every quadruple (p,q,r,s) in cyclic order whose crossing diagonals
/// pr and qs have equal chord length. Empty iff no symmetric quadruple.
std::vector<std::array<int, 4>> find_symmetric_quadruples(const CirclePointSet& points);

DegeneracyReport classify_degeneracy(const CirclePointSet& points);

} // namespace concyclic
