#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "concyclic/circle_model.hpp"
#include "concyclic/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace concyclic;

namespace {

CirclePointSet from_degrees_exact(const std::vector<int>& degrees) {
    std::vector<Rational> turns;
    for (int d : degrees) {
        turns.emplace_back(d, 360);
    }
    return CirclePointSet::from_turns(std::move(turns));
}

TurnFraction span_deg(int d) { return TurnFraction::from_turns(Rational(d, 360)); }

Arc arc_of_span(int d) { return Arc{0, 1, span_deg(d)}; }

} // namespace

TEST_CASE("fit_circle recovers the unit circle from the axis square") {
    auto P = CirclePointSet::fit_circle({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(P.size() == 4);
    CHECK(P.center().x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(P.center().y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(P.radius() == doctest::Approx(1.0).epsilon(1e-12));
    const double expected[] = {0.0, 0.25, 0.5, 0.75};
    for (int i = 0; i < 4; ++i) {
        CHECK(P.theta(i).as_turns_double() == doctest::Approx(expected[i]).epsilon(1e-9));
        CHECK(P.label(i) == i);
    }
}

TEST_CASE("fit_circle rejects a point off the circle") {
    bool threw = false;
    try {
        CirclePointSet::fit_circle({{1, 0}, {0, 1}, {-1, 0}, {0.5, 0.5}});
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == errc::not_concyclic);
    }
    CHECK(threw);
}

TEST_CASE("fit_circle round-trips a shifted, scaled circle") {
    const double cx = 2.0, cy = -1.0, r = 3.0;
    std::vector<Point> pts;
    for (double deg : {0.0, 47.0, 110.0, 162.0}) {
        double a = deg * std::numbers::pi / 180.0;
        pts.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }
    auto P = CirclePointSet::fit_circle(pts);
    CHECK(P.radius() == doctest::Approx(r).epsilon(1e-9));
    CHECK(P.center().x == doctest::Approx(cx).epsilon(1e-9));
    CHECK(P.center().y == doctest::Approx(cy).epsilon(1e-9));
    // point(i) is indexed by sorted angular position; label(i) recovers
    // the input slot.
    for (int i = 0; i < 4; ++i) {
        CHECK(P.point(i).x == doctest::Approx(pts[P.label(i)].x).epsilon(1e-9));
        CHECK(P.point(i).y == doctest::Approx(pts[P.label(i)].y).epsilon(1e-9));
    }
}

TEST_CASE("fit_circle error cases") {
    CHECK_THROWS_AS(CirclePointSet::fit_circle({{0, 0}, {1, 0}, {2, 0}, {3, 0}}), Error);
    CHECK_THROWS_AS(CirclePointSet::fit_circle({{1, 0}, {0, 1}, {1, 0}, {0, -1}}), Error);
    CHECK_THROWS_AS(CirclePointSet::fit_circle({{1, 0}, {0, 1}, {-1, 0}}), Error);
}

TEST_CASE("arc_between measures CCW spans") {
    auto square = from_degrees_exact({0, 90, 180, 270});
    CHECK(square.arc_between(0, 2).span.turns() == Rational(1, 2));
    CHECK(square.arc_between(2, 0).span.turns() == Rational(1, 2));

    auto six = from_degrees_exact({0, 47, 110, 162, 223, 300});
    CHECK(six.arc_between(5, 1).span.turns() == Rational(107, 360));

    CHECK_THROWS_AS(square.arc_between(0, 4), Error);
    CHECK_THROWS_AS(square.arc_between(1, 1), Error);
}

TEST_CASE("chord_compare orders by chord length") {
    CHECK(chord_compare(arc_of_span(60), arc_of_span(90)) < 0);
    CHECK(chord_compare(arc_of_span(90), arc_of_span(270)) == 0);
    CHECK(chord_compare(arc_of_span(180), arc_of_span(174)) > 0);
}

TEST_CASE("chord_compare is a total preorder consistent with chord_length") {
    std::vector<int> spans = {10, 60, 90, 120, 174, 180, 186, 200, 270, 300, 350};
    for (int a : spans) {
        for (int b : spans) {
            int c = chord_compare(arc_of_span(a), arc_of_span(b));
            CHECK(c == -chord_compare(arc_of_span(b), arc_of_span(a)));
            double la = chord_length(arc_of_span(a), 1.0);
            double lb = chord_length(arc_of_span(b), 1.0);
            if (std::abs(la - lb) > 1e-12) {
                CHECK(c == (la < lb ? -1 : 1));
            } else {
                CHECK(c == 0);
            }
            for (int d : spans) {
                if (c == 0 && chord_compare(arc_of_span(b), arc_of_span(d)) == 0) {
                    CHECK(chord_compare(arc_of_span(a), arc_of_span(d)) == 0);
                }
            }
        }
    }
}

TEST_CASE("chord key equality holds exactly for s_a = s_b or s_a + s_b = 1 turn") {
    for (int a = 10; a < 360; a += 17) {
        for (int b = 10; b < 360; b += 17) {
            bool equal = (a == b) || (a + b == 360);
            CHECK((chord_compare(arc_of_span(a), arc_of_span(b)) == 0) == equal);
        }
    }
}

TEST_CASE("chord_length values") {
    CHECK(chord_length(arc_of_span(180), 1.0) == doctest::Approx(2.0));
    CHECK(chord_length(arc_of_span(60), 1.0) == doctest::Approx(1.0));
    CHECK(chord_length(arc_of_span(120), 1.0) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("find_symmetric_quadruples on small fixtures") {
    auto square = from_degrees_exact({0, 90, 180, 270});
    auto qs = find_symmetric_quadruples(square);
    REQUIRE(qs.size() == 1);
    CHECK(qs[0] == std::array<int, 4>{0, 1, 2, 3});

    auto skew = from_degrees_exact({0, 40, 180, 220});
    qs = find_symmetric_quadruples(skew);
    REQUIRE(qs.size() == 1);
    CHECK(qs[0] == std::array<int, 4>{0, 1, 2, 3});

    auto clean = from_degrees_exact({0, 47, 110, 162});
    CHECK(find_symmetric_quadruples(clean).empty());
}

TEST_CASE("classify_degeneracy on the three fixture classes") {
    CHECK(classify_degeneracy(gen::regular_polygon(6)).cls == DegeneracyClass::Degenerate);

    auto distinct = from_degrees_exact({0, 47, 110, 162, 223, 300});
    CHECK(classify_degeneracy(distinct).cls == DegeneracyClass::DistinctDiagonals);

    // Diagonals (0,2) and (2,4) both span 110 degrees and share p2; every
    // other diagonal length is unique.
    auto shared = from_degrees_exact({0, 47, 110, 162, 220, 300});
    auto report = classify_degeneracy(shared);
    CHECK(report.cls == DegeneracyClass::NoSymmetricQuadruple);
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses[0] == std::array<int, 4>{0, 2, 2, 4});
}

TEST_CASE("classification is rotation invariant") {
    std::vector<int> base = {0, 47, 110, 162, 220, 300};
    for (int offset : {13, 90, 181, 275}) {
        std::vector<Rational> turns;
        for (int d : base) {
            turns.emplace_back((d + offset) % 360, 360);
        }
        std::sort(turns.begin(), turns.end());
        auto rotated = CirclePointSet::from_turns(std::move(turns));
        CHECK(classify_degeneracy(rotated).cls == DegeneracyClass::NoSymmetricQuadruple);
    }
}

TEST_CASE("symmetric quadruple detection matches brute force over all pairs") {
    auto brute_has_quadruple = [](const CirclePointSet& P) {
        const int n = P.size();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    for (int l = k + 1; l < n; ++l) {
                        bool disjoint = i != k && i != l && j != k && j != l;
                        if (!disjoint || std::pair{i, j} >= std::pair{k, l}) {
                            continue;
                        }
                        if (chord_compare(P.arc_between(i, j), P.arc_between(k, l)) == 0) {
                            return true;
                        }
                    }
                }
            }
        }
        return false;
    };
    std::vector<CirclePointSet> sets;
    sets.push_back(gen::regular_polygon(8));
    sets.push_back(from_degrees_exact({0, 47, 110, 162, 223, 300}));
    sets.push_back(from_degrees_exact({0, 47, 110, 162, 220, 300}));
    sets.push_back(gen::random_instance(9, 11, false));
    for (const auto& P : sets) {
        CHECK(find_symmetric_quadruples(P).empty() == !brute_has_quadruple(P));
    }
}

TEST_CASE("float mode matches exact mode on the same fixtures") {
    std::vector<int> degs = {0, 47, 110, 162, 220, 300};
    std::vector<double> radians;
    for (int d : degs) {
        radians.push_back(d * std::numbers::pi / 180.0);
    }
    auto F = CirclePointSet::from_radians(std::move(radians));
    CHECK(F.mode() == NumericMode::Float);
    CHECK(classify_degeneracy(F).cls == DegeneracyClass::NoSymmetricQuadruple);
    auto E = from_degrees_exact(degs);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (i == j) {
                continue;
            }
            CHECK(F.arc_between(i, j).span.as_turns_double() ==
                  doctest::Approx(static_cast<double>(E.arc_between(i, j).span.turns()))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("point sets need at least four distinct points") {
    CHECK_THROWS_AS(CirclePointSet::from_turns({Rational(0), Rational(1, 4), Rational(1, 2)}),
                    Error);
    CHECK_THROWS_AS(
        CirclePointSet::from_turns(
            {Rational(0), Rational(1, 4), Rational(1, 4), Rational(1, 2), Rational(3, 4)}),
        Error);
}
