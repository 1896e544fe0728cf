#include "concyclic/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <string>
#include <utility>

namespace concyclic::oracle {

namespace {

void check_size(int n) {
    if (n > kMaxOracleSize) {
        raise(errc::too_large,
              "oracle limited to n <= " + std::to_string(kMaxOracleSize) + ", got " +
                  std::to_string(n));
    }
    if (n < 3) {
        raise(errc::parse_error, "polygon needs at least 3 vertices");
    }
}

/// Backtracking enumerator over contiguous vertex ranges: the triangle on
/// edge (i,j) picks an apex k, splitting into ranges (i,k) and (k,j).
class Enumerator {
public:
    Enumerator(std::function<void(const Triangulation&)> visit, int n)
        : visit_(std::move(visit)), scratch_{n, {}} {}

    void run(int i, int j) {
        pending_.emplace_back(i, j);
        go();
        pending_.pop_back();
    }

    void run_with_prefix(int n, int k) {
        if (k > 1) {
            scratch_.diagonals.emplace_back(0, k);
        }
        if (k < n - 2) {
            scratch_.diagonals.emplace_back(k, n - 1);
        }
        pending_.emplace_back(0, k);
        pending_.emplace_back(k, n - 1);
        go();
        pending_.clear();
        scratch_.diagonals.clear();
    }

private:
    void go() {
        if (pending_.empty()) {
            visit_(scratch_);
            return;
        }
        auto [i, j] = pending_.back();
        pending_.pop_back();
        if (j - i < 2) {
            go();
        } else {
            for (int k = i + 1; k < j; ++k) {
                std::size_t mark = scratch_.diagonals.size();
                if (k > i + 1) {
                    scratch_.diagonals.emplace_back(i, k);
                }
                if (k < j - 1) {
                    scratch_.diagonals.emplace_back(k, j);
                }
                pending_.emplace_back(i, k);
                pending_.emplace_back(k, j);
                go();
                pending_.resize(pending_.size() - 2);
                scratch_.diagonals.resize(mark);
            }
        }
        pending_.emplace_back(i, j);
    }

    std::function<void(const Triangulation&)> visit_;
    Triangulation scratch_;
    std::vector<std::pair<int, int>> pending_;
};

/// Running maximum of score vectors with the set of attaining
/// triangulations.
struct BestSet {
    ScoreVector score;
    std::vector<Triangulation> winners;

    void offer(const ScoreVector& sv, const Triangulation& t) {
        if (winners.empty()) {
            score = sv;
            winners.push_back(t);
            winners.back().normalize();
            return;
        }
        int c = compare_lex(sv, score);
        if (c > 0) {
            score = sv;
            winners.clear();
        }
        if (c >= 0) {
            winners.push_back(t);
            winners.back().normalize();
        }
    }

    void merge(BestSet&& other) {
        if (other.winners.empty()) {
            return;
        }
        if (winners.empty()) {
            *this = std::move(other);
            return;
        }
        int c = compare_lex(other.score, score);
        if (c > 0) {
            *this = std::move(other);
        } else if (c == 0) {
            winners.insert(winners.end(), std::make_move_iterator(other.winners.begin()),
                           std::make_move_iterator(other.winners.end()));
        }
    }
};

OptimalSet finish(BestSet&& length_best, BestSet&& angle_best, bool cross_check) {
    std::sort(length_best.winners.begin(), length_best.winners.end());
    if (cross_check) {
        std::sort(angle_best.winners.begin(), angle_best.winners.end());
        if (angle_best.winners != length_best.winners) {
            raise(errc::precondition_violated,
                  "angle-maximal and length-maximal winner sets disagree");
        }
    }
    return OptimalSet{std::move(length_best.score), std::move(length_best.winners)};
}

} // namespace

void for_each_triangulation(int n, const std::function<void(const Triangulation&)>& visit) {
    check_size(n);
    Enumerator e(visit, n);
    e.run(0, n - 1);
}

std::vector<Triangulation> enumerate_triangulations(int n) {
    std::vector<Triangulation> out;
    for_each_triangulation(n, [&](const Triangulation& t) {
        out.push_back(t);
        out.back().normalize();
    });
    return out;
}

std::uint64_t count_triangulations(int n) {
    std::uint64_t count = 0;
    for_each_triangulation(n, [&](const Triangulation&) { ++count; });
    return count;
}

OptimalSet optimal_set_serial(const CirclePointSet& points, bool cross_check_angles) {
    const int n = points.size();
    check_size(n);
    BestSet length_best, angle_best;
    for_each_triangulation(n, [&](const Triangulation& t) {
        length_best.offer(length_vector(t, points), t);
        if (cross_check_angles) {
            angle_best.offer(angle_vector(t, points), t);
        }
    });
    return finish(std::move(length_best), std::move(angle_best), cross_check_angles);
}

OptimalSet optimal_set(const CirclePointSet& points, bool cross_check_angles) {
    const int n = points.size();
    check_size(n);
#ifdef _OPENMP
    if (n >= 10) {
        // Independent subtrees per apex of the edge (0, n-1); merged in
        // apex order so the reduction is deterministic.
        std::vector<BestSet> length_parts(n - 2), angle_parts(n - 2);
#pragma omp parallel for schedule(dynamic)
        for (int k = 1; k <= n - 2; ++k) {
            BestSet& lb = length_parts[k - 1];
            BestSet& ab = angle_parts[k - 1];
            Enumerator e(
                [&](const Triangulation& t) {
                    lb.offer(length_vector(t, points), t);
                    if (cross_check_angles) {
                        ab.offer(angle_vector(t, points), t);
                    }
                },
                n);
            e.run_with_prefix(n, k);
        }
        BestSet length_best, angle_best;
        for (int k = 0; k < n - 2; ++k) {
            length_best.merge(std::move(length_parts[k]));
            angle_best.merge(std::move(angle_parts[k]));
        }
        return finish(std::move(length_best), std::move(angle_best), cross_check_angles);
    }
#endif
    return optimal_set_serial(points, cross_check_angles);
}

bool is_unique_optimum(const CirclePointSet& points) {
    return optimal_set(points).winners.size() == 1;
}

} // namespace concyclic::oracle
