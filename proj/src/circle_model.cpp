#include "concyclic/circle_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace concyclic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Absolute tolerance for Float-mode angular comparisons (kFloatEps of a turn).
const double kAngleTol = TurnFraction::kFloatEps * kTwoPi;

Rational mod_one(Rational t) {
    BigInt whole = numerator(t) / denominator(t);
    t -= Rational(whole);
    if (t < 0) {
        t += 1;
    }
    return t;
}

double mod_two_pi(double r) {
    r = std::fmod(r, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    return r;
}

} // namespace

TurnFraction TurnFraction::from_turns(Rational turns) {
    TurnFraction f;
    f.mode_ = NumericMode::Exact;
    f.turns_ = mod_one(std::move(turns));
    return f;
}

TurnFraction TurnFraction::from_radians(double radians) {
    if (!std::isfinite(radians)) {
        raise(errc::parse_error, "angle must be finite");
    }
    TurnFraction f;
    f.mode_ = NumericMode::Float;
    f.radians_ = mod_two_pi(radians);
    return f;
}

double TurnFraction::as_radians() const {
    if (mode_ == NumericMode::Exact) {
        return static_cast<double>(turns_) * kTwoPi;
    }
    return radians_;
}

double TurnFraction::as_turns_double() const {
    if (mode_ == NumericMode::Exact) {
        return static_cast<double>(turns_);
    }
    return radians_ / kTwoPi;
}

TurnFraction TurnFraction::ccw_delta_to(const TurnFraction& other) const {
    if (mode_ != other.mode_) {
        throw std::logic_error("mixed-mode angle arithmetic");
    }
    if (mode_ == NumericMode::Exact) {
        return from_turns(other.turns_ - turns_);
    }
    double d = other.radians_ - radians_;
    if (d <= 0.0) {
        d += kTwoPi;
    }
    TurnFraction f;
    f.mode_ = NumericMode::Float;
    f.radians_ = d;
    return f;
}

TurnFraction TurnFraction::chord_key() const {
    if (mode_ == NumericMode::Exact) {
        return from_turns(turns_ <= Rational(1, 2) ? turns_ : Rational(1) - turns_);
    }
    TurnFraction f;
    f.mode_ = NumericMode::Float;
    f.radians_ = std::min(radians_, kTwoPi - radians_);
    return f;
}

int TurnFraction::compare(const TurnFraction& other) const {
    if (mode_ != other.mode_) {
        throw std::logic_error("mixed-mode angle comparison");
    }
    if (mode_ == NumericMode::Exact) {
        if (turns_ < other.turns_) return -1;
        if (turns_ > other.turns_) return 1;
        return 0;
    }
    double d = radians_ - other.radians_;
    if (std::abs(d) <= kAngleTol) return 0;
    return d < 0.0 ? -1 : 1;
}

bool TurnFraction::is_zero() const {
    if (mode_ == NumericMode::Exact) {
        return turns_ == 0;
    }
    return radians_ <= kAngleTol || kTwoPi - radians_ <= kAngleTol;
}

const char* degeneracy_name(DegeneracyClass cls) {
    switch (cls) {
        case DegeneracyClass::DistinctDiagonals: return "DistinctDiagonals";
        case DegeneracyClass::NoSymmetricQuadruple: return "NoSymmetricQuadruple";
        case DegeneracyClass::Degenerate: return "Degenerate";
    }
    return "?";
}

const char* errc_name(errc code) {
    switch (code) {
        case errc::not_concyclic: return "not_concyclic";
        case errc::collinear_input: return "collinear_input";
        case errc::duplicate_point: return "duplicate_point";
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::equal_indices: return "equal_indices";
        case errc::kind_mismatch: return "kind_mismatch";
        case errc::length_mismatch: return "length_mismatch";
        case errc::crossing_ears: return "crossing_ears";
        case errc::same_apex: return "same_apex";
        case errc::precondition_violated: return "precondition_violated";
        case errc::too_large: return "too_large";
        case errc::too_small: return "too_small";
        case errc::limit_is_zero: return "limit_is_zero";
        case errc::parse_error: return "parse";
    }
    return "?";
}

CirclePointSet CirclePointSet::from_turns(std::vector<Rational> turns) {
    CirclePointSet p;
    p.mode_ = NumericMode::Exact;
    p.thetas_.reserve(turns.size());
    for (auto& t : turns) {
        p.thetas_.push_back(TurnFraction::from_turns(std::move(t)));
    }
    p.sort_and_check();
    return p;
}

CirclePointSet CirclePointSet::from_radians(std::vector<double> radians) {
    CirclePointSet p;
    p.mode_ = NumericMode::Float;
    p.thetas_.reserve(radians.size());
    for (double r : radians) {
        p.thetas_.push_back(TurnFraction::from_radians(r));
    }
    p.sort_and_check();
    return p;
}

void CirclePointSet::sort_and_check() {
    const int n = static_cast<int>(thetas_.size());
    if (n < 4) {
        raise(errc::parse_error, "need at least 4 points, got " + std::to_string(n));
    }
    if (labels_.empty()) {
        labels_.resize(n);
        std::iota(labels_.begin(), labels_.end(), 0);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return thetas_[a].compare(thetas_[b]) < 0;
    });
    std::vector<TurnFraction> thetas;
    std::vector<int> labels;
    std::vector<Point> pts;
    for (int k : order) {
        thetas.push_back(thetas_[k]);
        labels.push_back(labels_[k]);
        if (!input_points_.empty()) {
            pts.push_back(input_points_[k]);
        }
    }
    thetas_ = std::move(thetas);
    labels_ = std::move(labels);
    input_points_ = std::move(pts);
    for (int i = 0; i + 1 < n; ++i) {
        if (thetas_[i].compare(thetas_[i + 1]) == 0) {
            raise(errc::duplicate_point,
                  "coincident points at sorted positions " + std::to_string(i) + "," +
                      std::to_string(i + 1));
        }
    }
}

CirclePointSet CirclePointSet::fit_circle(const std::vector<Point>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 4) {
        raise(errc::parse_error, "need at least 4 points, got " + std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (points[i].x == points[j].x && points[i].y == points[j].y) {
                raise(errc::duplicate_point,
                      "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            }
        }
    }

    // The circle is defined by the first three non-collinear points in
    // lexicographic (x, y) order, so the fit does not depend on the order
    // the points were given in.
    double scale = 0.0;
    for (const auto& p : points) {
        scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return std::pair{points[i].x, points[i].y} < std::pair{points[j].x, points[j].y};
    });
    const Point a = points[order[0]];
    const Point b = points[order[1]];
    int third = -1;
    for (int k = 2; k < n; ++k) {
        const Point& q = points[order[k]];
        double cross = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
        if (std::abs(cross) > 1e-12 * scale * scale) {
            third = order[k];
            break;
        }
    }
    if (third < 0) {
        raise(errc::collinear_input, "all points are collinear");
    }
    const Point c = points[third];

    const double d = 2.0 * ((a.x * (b.y - c.y)) + (b.x * (c.y - a.y)) + (c.x * (a.y - b.y)));
    const double a2 = a.x * a.x + a.y * a.y;
    const double b2 = b.x * b.x + b.y * b.y;
    const double c2 = c.x * c.x + c.y * c.y;
    Point center{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                 (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    const double radius = std::hypot(a.x - center.x, a.y - center.y);

    CirclePointSet p;
    p.mode_ = NumericMode::Float;
    p.center_ = center;
    p.radius_ = radius;
    for (int i = 0; i < n; ++i) {
        const double r = std::hypot(points[i].x - center.x, points[i].y - center.y);
        if (std::abs(r - radius) > 1e-9 * radius) {
            raise(errc::not_concyclic,
                  "point " + std::to_string(i) + " deviates from the fitted circle");
        }
        p.thetas_.push_back(
            TurnFraction::from_radians(std::atan2(points[i].y - center.y, points[i].x - center.x)));
    }
    p.input_points_ = points;
    p.sort_and_check();
    return p;
}

Point CirclePointSet::point(int i) const {
    if (i < 0 || i >= size()) {
        raise(errc::index_out_of_range, "point index " + std::to_string(i));
    }
    if (!input_points_.empty()) {
        return input_points_[i];
    }
    const double r = thetas_[i].as_radians();
    return Point{center_.x + radius_ * std::cos(r), center_.y + radius_ * std::sin(r)};
}

Arc CirclePointSet::arc_between(int i, int j) const {
    if (i < 0 || i >= size() || j < 0 || j >= size()) {
        raise(errc::index_out_of_range,
              "arc indices " + std::to_string(i) + "," + std::to_string(j));
    }
    if (i == j) {
        raise(errc::equal_indices, "arc endpoints coincide: " + std::to_string(i));
    }
    return Arc{i, j, thetas_[i].ccw_delta_to(thetas_[j])};
}

TurnFraction CirclePointSet::chord_key(int i, int j) const {
    return arc_between(i, j).span.chord_key();
}

int chord_compare(const Arc& a, const Arc& b) {
    return a.span.chord_key().compare(b.span.chord_key());
}

double chord_length(const Arc& arc, double radius) {
    return 2.0 * radius * std::sin(arc.span.as_radians() / 2.0);
}

namespace {

struct Diagonal {
    int i, j;
    TurnFraction key;
};

std::vector<Diagonal> all_diagonals(const CirclePointSet& p) {
    const int n = p.size();
    std::vector<Diagonal> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 3) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) {
                continue; // chord
            }
            out.push_back({i, j, p.chord_key(i, j)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Diagonal& a, const Diagonal& b) { return a.key.compare(b.key) < 0; });
    return out;
}

bool vertex_disjoint(const Diagonal& a, const Diagonal& b) {
    return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
}

bool crossing(const Diagonal& a, const Diagonal& b) {
    // Both stored with i < j; crossing iff the endpoints interleave.
    return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

template <typename PairFn>
void for_each_equal_pair(const std::vector<Diagonal>& diags, PairFn&& fn) {
    std::size_t lo = 0;
    while (lo < diags.size()) {
        std::size_t hi = lo + 1;
        while (hi < diags.size() && diags[hi].key.compare(diags[hi - 1].key) == 0) {
            ++hi;
        }
        for (std::size_t x = lo; x < hi; ++x) {
            for (std::size_t y = x + 1; y < hi; ++y) {
                fn(diags[x], diags[y]);
            }
        }
        lo = hi;
    }
}

} // namespace

std::vector<std::array<int, 4>> find_symmetric_quadruples(const CirclePointSet& points) {
    auto diags = all_diagonals(points);
    std::vector<std::array<int, 4>> out;
    for_each_equal_pair(diags, [&](const Diagonal& a, const Diagonal& b) {
        if (crossing(a, b)) {
            std::array<int, 4> q{a.i, a.j, b.i, b.j};
            std::sort(q.begin(), q.end());
            out.push_back(q);
        }
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DegeneracyReport classify_degeneracy(const CirclePointSet& points) {
    auto diags = all_diagonals(points);
    DegeneracyReport report;
    bool any_equal = false;
    std::vector<std::array<int, 4>> shared_vertex_pairs;
    for_each_equal_pair(diags, [&](const Diagonal& a, const Diagonal& b) {
        any_equal = true;
        if (vertex_disjoint(a, b)) {
            // Crossing pair: directly a symmetric quadruple. Non-crossing
            // equal pair: the four endpoints form an isosceles trapezoid
            // whose crossing diagonals are equal, same witness.
            report.cls = DegeneracyClass::Degenerate;
            std::array<int, 4> q{a.i, a.j, b.i, b.j};
            std::sort(q.begin(), q.end());
            report.witnesses.push_back(q);
        } else {
            shared_vertex_pairs.push_back({a.i, a.j, b.i, b.j});
        }
    });
    if (report.cls == DegeneracyClass::Degenerate) {
        std::sort(report.witnesses.begin(), report.witnesses.end());
        report.witnesses.erase(std::unique(report.witnesses.begin(), report.witnesses.end()),
                               report.witnesses.end());
        return report;
    }
    if (!any_equal) {
        report.cls = DegeneracyClass::DistinctDiagonals;
        return report;
    }
    report.cls = DegeneracyClass::NoSymmetricQuadruple;
    report.witnesses = std::move(shared_vertex_pairs);
    std::sort(report.witnesses.begin(), report.witnesses.end());
    return report;
}

} // namespace concyclic
