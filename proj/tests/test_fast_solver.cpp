#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "concyclic/fast_solver.hpp"
#include "concyclic/generators.hpp"
#include "concyclic/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace concyclic;

namespace {

CirclePointSet from_degrees_exact(const std::vector<int>& degrees) {
    std::vector<Rational> turns;
    for (int d : degrees) {
        turns.emplace_back(d, 360);
    }
    return CirclePointSet::from_turns(std::move(turns));
}

bool throws_precondition(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == errc::precondition_violated;
    }
    return false;
}

} // namespace

TEST_CASE("simplified solver on the six-point distinct fixture") {
    auto P = from_degrees_exact({0, 47, 110, 162, 223, 300});
    auto t = solve_simplified(P);
    Triangulation expected{6, {{1, 3}, {0, 3}, {3, 5}}};
    expected.normalize();
    CHECK(t == expected);
    CHECK(t == oracle::optimal_set(P).winners.at(0));
}

TEST_CASE("simplified solver picks the longer diagonal of a quad") {
    auto P = from_degrees_exact({0, 90, 180, 200});
    auto t = solve_simplified(P);
    CHECK(t.diagonals == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("simplified solver rejects degenerate inputs") {
    CHECK(throws_precondition([] { solve_simplified(gen::regular_polygon(6)); }));
    CHECK(throws_precondition([] { solve_simplified(from_degrees_exact({0, 90, 180, 270})); }));
}

TEST_CASE("pentagon base case picks the fan from p3") {
    auto P = from_degrees_exact({0, 47, 110, 162, 223, 300});
    auto rest = base_case_small(P, {0, 1, 3, 4, 5});
    std::set<std::pair<int, int>> got(rest.begin(), rest.end());
    CHECK(got == std::set<std::pair<int, int>>{{0, 3}, {3, 5}});
}

TEST_CASE("base case rejects out-of-range ring sizes") {
    auto P = gen::regular_polygon(12);
    CHECK(throws_precondition([&] {
        base_case_small(P, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    }));
}

TEST_CASE("simplified solver matches the oracle on random distinct instances") {
    for (int n = 5; n <= 12; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto P = gen::random_instance(n, 100 * n + seed, true);
            auto fast = solve_simplified(P);
            auto best = oracle::optimal_set(P);
            REQUIRE(best.winners.size() == 1);
            CHECK(fast == best.winners[0]);
        }
    }
}

TEST_CASE("extended solver equals simplified on distinct inputs") {
    for (int n = 5; n <= 12; ++n) {
        auto P = gen::random_instance(n, 4000 + n, true);
        CHECK(solve_extended(P) == solve_simplified(P));
    }
}

TEST_CASE("extended solver handles engineered equal-ear instances") {
    for (int n : {9, 10, 11, 12}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto inst = gen::equal_ears_instance(n, 10 * n + seed);
            auto fast = solve_extended(inst.points);
            auto best = oracle::optimal_set(inst.points);
            REQUIRE(best.winners.size() == 1);
            CHECK(fast == best.winners[0]);
        }
    }
}

TEST_CASE("extended solver rejects symmetric quadruples") {
    CHECK(throws_precondition([] { solve_extended(from_degrees_exact({0, 90, 180, 270})); }));
    CHECK(throws_precondition([] { solve_extended(gen::regular_polygon(8)); }));
}

TEST_CASE("invariant verification passes along a full solve") {
    SolveOptions opts;
    opts.verify_invariants = true;
    for (int n : {12, 20, 30}) {
        auto P = gen::random_instance(n, 900 + n, n <= 16);
        auto t = solve_simplified(P, nullptr, opts);
        CHECK(validate(t, n));
        CHECK(dual_path(t).is_path);
        CHECK(ears_of(t).size() == 2);
    }
}

TEST_CASE("operation counter is populated and roughly linear") {
    SolveStats small_stats, big_stats;
    auto small = gen::random_instance_exact(1 << 10, 7);
    auto big = gen::random_instance_exact(1 << 14, 7);
    solve_simplified(small, &small_stats);
    solve_simplified(big, &big_stats);
    CHECK(small_stats.chord_comparisons > 0);
    double per_small = static_cast<double>(small_stats.chord_comparisons) / (1 << 10);
    double per_big = static_cast<double>(big_stats.chord_comparisons) / (1 << 14);
    CHECK(per_big < 2.0 * per_small);
    CHECK(per_small < 2.0 * per_big);
}

TEST_CASE("solution is invariant under rotation of all angles") {
    std::vector<int> base = {0, 47, 110, 162, 223, 300};
    auto reference = solve_simplified(from_degrees_exact(base));
    for (int offset : {7, 23, 55}) {
        // Offsets small enough to preserve the sorted order, so indices map
        // one to one.
        std::vector<int> rotated;
        for (int d : base) {
            rotated.push_back(d + offset);
        }
        CHECK(solve_simplified(from_degrees_exact(rotated)) == reference);
    }
}

TEST_CASE("undo restores the solver state exactly") {
    auto P = gen::random_instance(12, 5, true);
    EarSolver solver(P, nullptr, {});
    auto top_before = solver.top();
    auto ring_before = solver.ring_indices();
    int apex = top_before[1].apex;
    solver.remove_apex(apex);
    solver.undo_last_removal();
    CHECK(solver.ring_indices() == ring_before);
    REQUIRE(solver.top().size() == top_before.size());
    for (std::size_t i = 0; i < top_before.size(); ++i) {
        CHECK(solver.top()[i].apex == top_before[i].apex);
        CHECK(solver.top()[i].endpoints == top_before[i].endpoints);
    }
}
