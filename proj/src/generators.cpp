#include "concyclic/generators.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <set>
#include <string>

namespace concyclic::gen {

std::vector<Rational> regular_polygon_turns(int n) {
    if (n < 4) {
        raise(errc::parse_error, "regular polygon needs n >= 4");
    }
    std::vector<Rational> turns;
    turns.reserve(n);
    for (int i = 0; i < n; ++i) {
        turns.emplace_back(i, n);
    }
    return turns;
}

CirclePointSet regular_polygon(int n) {
    return CirclePointSet::from_turns(regular_polygon_turns(n));
}

CirclePointSet random_instance(int n, std::uint64_t seed, bool verify_distinct) {
    if (n < 4) {
        raise(errc::parse_error, "need n >= 4");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> radians;
        radians.reserve(n);
        for (int i = 0; i < n; ++i) {
            radians.push_back(angle(rng));
        }
        try {
            auto points = CirclePointSet::from_radians(std::move(radians));
            if (verify_distinct &&
                classify_degeneracy(points).cls != DegeneracyClass::DistinctDiagonals) {
                continue;
            }
            return points;
        } catch (const Error& e) {
            if (e.code() != errc::duplicate_point) {
                throw;
            }
        }
    }
    raise(errc::precondition_violated, "could not sample a distinct-diagonals instance");
}

CirclePointSet random_instance_exact(int n, std::uint64_t seed) {
    if (n < 4) {
        raise(errc::parse_error, "need n >= 4");
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t denom = std::uint64_t{1} << 62;
    std::uniform_int_distribution<std::uint64_t> dist(0, denom - 1);
    std::set<std::uint64_t> values;
    while (static_cast<int>(values.size()) < n) {
        values.insert(dist(rng));
    }
    std::vector<Rational> turns;
    turns.reserve(n);
    for (std::uint64_t v : values) {
        turns.emplace_back(BigInt(v), BigInt(denom));
    }
    return CirclePointSet::from_turns(std::move(turns));
}

EqualEarsInstance equal_ears_instance(int n, std::uint64_t seed) {
    if (n < 6) {
        raise(errc::parse_error, "equal-ears construction needs n >= 6");
    }
    std::mt19937_64 rng(seed);
    const std::int64_t denom = std::int64_t{1} << 31;
    // Gaps g_0..g_{n-1} between consecutive points, in units of 1/denom
    // turns. g_1+g_2 == g_3+g_4 makes the ears at apexes 2 and 4 equal
    // (they share point 3); drawing g_1..g_4 large keeps the pair among
    // the longest ears.
    std::uniform_int_distribution<std::int64_t> big(denom * 6 / (5 * n), denom * 9 / (5 * n));
    std::uniform_int_distribution<std::int64_t> small(denom / (2 * n), denom * 11 / (10 * n));
    for (int attempt = 0; attempt < 4000; ++attempt) {
        std::vector<std::int64_t> gaps(n);
        for (int i = 1; i <= 4; ++i) {
            gaps[i] = big(rng);
        }
        gaps[4] = gaps[1] + gaps[2] - gaps[3];
        if (gaps[4] <= 0) {
            continue;
        }
        std::int64_t used = gaps[1] + gaps[2] + gaps[3] + gaps[4];
        for (int i = 5; i < n; ++i) {
            gaps[i] = small(rng);
            used += gaps[i];
        }
        gaps[0] = denom - used;
        if (gaps[0] <= 0) {
            continue;
        }
        std::vector<Rational> turns;
        std::int64_t acc = 0;
        for (int i = 0; i < n; ++i) {
            turns.emplace_back(acc, denom);
            acc += gaps[i];
        }
        auto points = CirclePointSet::from_turns(std::move(turns));
        if (classify_degeneracy(points).cls != DegeneracyClass::NoSymmetricQuadruple) {
            continue;
        }
        // The engineered pair must sit among the four longest ears.
        std::vector<std::pair<TurnFraction, int>> ears;
        for (int apex = 0; apex < n; ++apex) {
            ears.emplace_back(points.chord_key((apex + n - 1) % n, (apex + 1) % n), apex);
        }
        std::sort(ears.begin(), ears.end(),
                  [](const auto& a, const auto& b) { return a.first.compare(b.first) > 0; });
        bool has2 = false, has4 = false;
        for (int k = 0; k < 4; ++k) {
            has2 |= ears[k].second == 2;
            has4 |= ears[k].second == 4;
        }
        if (!(has2 && has4)) {
            continue;
        }
        return EqualEarsInstance{std::move(points), 2, 4};
    }
    raise(errc::precondition_violated, "could not construct an equal-ears instance");
}

} // namespace concyclic::gen
