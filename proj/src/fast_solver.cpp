#include "concyclic/fast_solver.hpp"

#include "concyclic/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace concyclic {

namespace {

std::pair<int, int> norm_pair(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

[[noreturn]] void violated(const char* what) {
    raise(errc::precondition_violated, what);
}

} // namespace

EarSolver::EarSolver(const CirclePointSet& points, SolveStats* stats, SolveOptions options)
    : points_(points), stats_(stats), options_(options) {
    const int n = points.size();
    next_.resize(n);
    prev_.resize(n);
    alive_.assign(n, 1);
    for (int i = 0; i < n; ++i) {
        next_[i] = (i + 1) % n;
        prev_[i] = (i + n - 1) % n;
    }
    ring_size_ = n;
    // Bounded insertion keeps the initial scan linear.
    top_.reserve(kTopKeep + 1);
    for (int apex = 0; apex < n; ++apex) {
        EarRecord rec = ear_at(apex);
        auto pos = top_.begin();
        while (pos != top_.end() && compare_keys(pos->key, rec.key) >= 0) {
            ++pos;
        }
        top_.insert(pos, std::move(rec));
        if (static_cast<int>(top_.size()) > kTopKeep) {
            top_.pop_back();
        }
    }
}

int EarSolver::compare_keys(const TurnFraction& a, const TurnFraction& b) {
    if (stats_) {
        ++stats_->chord_comparisons;
    }
    return a.compare(b);
}

EarRecord EarSolver::ear_at(int apex) const {
    assert(alive_[apex]);
    if (stats_) {
        ++stats_->arcs_built;
    }
    int p = prev_[apex], q = next_[apex];
    EarRecord rec;
    rec.apex = apex;
    rec.endpoints = norm_pair(p, q);
    rec.key = points_.theta(p).ccw_delta_to(points_.theta(q)).chord_key();
    return rec;
}

bool EarSolver::ears_cross(int apex_a, int apex_b) const {
    return next_[apex_a] == apex_b || prev_[apex_a] == apex_b;
}

void EarSolver::rebuild_top(const std::vector<EarRecord>& candidates) {
    top_ = candidates;
    std::sort(top_.begin(), top_.end(), [&](const EarRecord& a, const EarRecord& b) {
        int c = compare_keys(a.key, b.key);
        if (c != 0) {
            return c > 0;
        }
        return a.apex < b.apex;
    });
    if (static_cast<int>(top_.size()) > kTopKeep) {
        top_.resize(kTopKeep);
    }
}

void EarSolver::remove_apex(int apex) {
    assert(alive_[apex]);
    if (options_.verify_invariants) {
        verify_maximal_pair(apex);
    }
    int p = prev_[apex], q = next_[apex];
    undo_ = UndoRecord{apex, p, q, top_};
    output_.push_back(norm_pair(p, q));
    alive_[apex] = 0;
    next_[p] = q;
    prev_[q] = p;
    --ring_size_;

    std::vector<EarRecord> candidates;
    candidates.reserve(top_.size() + 2);
    for (const auto& rec : top_) {
        if (rec.apex != apex && rec.apex != p && rec.apex != q) {
            candidates.push_back(rec);
        }
    }
    if (ring_size_ >= 4) {
        candidates.push_back(ear_at(p));
        candidates.push_back(ear_at(q));
    }
    rebuild_top(candidates);
    if (options_.verify_invariants) {
        verify_top();
    }
}

void EarSolver::undo_last_removal() {
    assert(undo_.has_value());
    const auto& u = *undo_;
    alive_[u.apex] = 1;
    next_[u.prev] = u.apex;
    prev_[u.next] = u.apex;
    ++ring_size_;
    output_.pop_back();
    top_ = u.top;
    undo_.reset();
}

std::vector<int> EarSolver::ring_indices() const {
    std::vector<int> out;
    out.reserve(ring_size_);
    int start = -1;
    for (int i = 0; i < static_cast<int>(alive_.size()); ++i) {
        if (alive_[i]) {
            start = i;
            break;
        }
    }
    int cur = start;
    do {
        out.push_back(cur);
        cur = next_[cur];
    } while (cur != start);
    return out;
}

void EarSolver::verify_top() const {
    auto ring = ring_indices();
    std::vector<TurnFraction> keys;
    for (int apex : ring) {
        int p = prev_[apex], q = next_[apex];
        keys.push_back(points_.theta(p).ccw_delta_to(points_.theta(q)).chord_key());
    }
    std::sort(keys.begin(), keys.end(),
              [](const TurnFraction& a, const TurnFraction& b) { return a.compare(b) > 0; });
    std::size_t need = std::min<std::size_t>({4, keys.size(), top_.size()});
    for (std::size_t k = 0; k < need; ++k) {
        if (top_[k].key.compare(keys[k]) != 0) {
            throw std::logic_error("top-ear list diverged from full scan");
        }
    }
}

void EarSolver::verify_maximal_pair(int apex) const {
    auto ring = ring_indices();
    const int k = static_cast<int>(ring.size());
    std::vector<EarRecord> ears;
    for (int a : ring) {
        int p = prev_[a], q = next_[a];
        EarRecord rec;
        rec.apex = a;
        rec.endpoints = norm_pair(p, q);
        rec.key = points_.theta(p).ccw_delta_to(points_.theta(q)).chord_key();
        ears.push_back(rec);
    }
    // M = best over non-crossing distinct-diagonal ear pairs of the
    // shorter ear's key.
    const TurnFraction* best = nullptr;
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (ears_cross(ears[a].apex, ears[b].apex) || ears[a].endpoints == ears[b].endpoints) {
                continue;
            }
            const TurnFraction& mn =
                ears[a].key.compare(ears[b].key) <= 0 ? ears[a].key : ears[b].key;
            if (!best || mn.compare(*best) > 0) {
                best = &mn;
            }
        }
    }
    if (!best) {
        return;
    }
    const EarRecord* mine = nullptr;
    for (const auto& e : ears) {
        if (e.apex == apex) {
            mine = &e;
        }
    }
    bool in_some_pair = false;
    if (mine->key.compare(*best) >= 0) {
        for (const auto& f : ears) {
            if (f.apex == apex || ears_cross(apex, f.apex) || f.endpoints == mine->endpoints) {
                continue;
            }
            if (f.key.compare(*best) >= 0) {
                in_some_pair = true;
                break;
            }
        }
    }
    if (!in_some_pair) {
        throw std::logic_error("emitted ear is not part of a maximal disjoint-ear pair");
    }
}

std::vector<std::pair<int, int>> base_case_small(const CirclePointSet& points,
                                                 const std::vector<int>& ring) {
    const int m = static_cast<int>(ring.size());
    if (m < 4 || m > 8) {
        raise(errc::precondition_violated,
              "base case requires ring size 4..8, got " + std::to_string(m));
    }
    std::vector<std::pair<int, int>> best;
    ScoreVector best_score;
    bool first = true;
    bool tie = false;
    oracle::for_each_triangulation(m, [&](const Triangulation& local) {
        ScoreVector sv;
        sv.kind = ScoreKind::LengthVector;
        sv.mode = points.mode();
        std::vector<std::pair<int, int>> mapped;
        for (auto [a, b] : local.diagonals) {
            mapped.push_back(norm_pair(ring[a], ring[b]));
            sv.entries.push_back(points.chord_key(ring[a], ring[b]));
        }
        std::sort(sv.entries.begin(), sv.entries.end(),
                  [](const TurnFraction& a, const TurnFraction& b) { return a.compare(b) < 0; });
        if (first) {
            first = false;
            best = std::move(mapped);
            best_score = std::move(sv);
            return;
        }
        int c = compare_lex(sv, best_score);
        if (c > 0) {
            best = std::move(mapped);
            best_score = std::move(sv);
            tie = false;
        } else if (c == 0) {
            tie = true;
        }
    });
    if (tie) {
        violated("sub-polygon admits tied optimal triangulations (symmetric quadruple)");
    }
    return best;
}

namespace {

Triangulation assemble(const CirclePointSet& points, EarSolver& solver) {
    std::vector<std::pair<int, int>> diagonals = solver.output();
    auto rest = base_case_small(points, solver.ring_indices());
    diagonals.insert(diagonals.end(), rest.begin(), rest.end());
    return make_triangulation(points.size(), std::move(diagonals));
}

} // namespace

Triangulation solve_simplified(const CirclePointSet& points, SolveStats* stats,
                               const SolveOptions& options) {
    EarSolver solver(points, stats, options);
    while (solver.ring_size() > 5) {
        const auto& top = solver.top();
        const EarRecord &t0 = top[0], &t1 = top[1], &t2 = top[2];
        if (solver.compare_keys(t0.key, t1.key) == 0 ||
            solver.compare_keys(t1.key, t2.key) == 0) {
            violated("equal ear lengths: input is not DistinctDiagonals");
        }
        if (!solver.ears_cross(t0.apex, t1.apex)) {
            solver.remove_apex(t1.apex);
        } else {
            solver.remove_apex(t2.apex);
        }
    }
    return assemble(points, solver);
}

namespace {

/// What the selection rule would emit next, without lookahead: the key of
/// the next diagonal and the candidate ear(s) carrying it.
struct Probe {
    TurnFraction key;
    std::vector<std::pair<int, int>> ears; // normalized endpoints
};

Probe probe_next(EarSolver& s) {
    const auto& top = s.top();
    assert(top.size() >= 3);
    const EarRecord &e0 = top[0], &e1 = top[1], &e2 = top[2];
    if (s.compare_keys(e0.key, e1.key) == 0) {
        return Probe{e0.key, {e0.endpoints, e1.endpoints}};
    }
    if (s.compare_keys(e1.key, e2.key) == 0) {
        // se0 > se1 = se2: the rule keeps se0 unless it crosses both.
        if (s.ears_cross(e0.apex, e1.apex) && s.ears_cross(e0.apex, e2.apex)) {
            return Probe{e1.key, {e1.endpoints, e2.endpoints}};
        }
        return Probe{e0.key, {e0.endpoints}};
    }
    if (!s.ears_cross(e0.apex, e1.apex)) {
        return Probe{e1.key, {e1.endpoints}};
    }
    if (top.size() >= 4 && s.compare_keys(e2.key, top[3].key) == 0) {
        return Probe{e2.key, {e2.endpoints, top[3].endpoints}};
    }
    return Probe{e2.key, {e2.endpoints}};
}

bool ears_share_vertex(const EarRecord& a, const EarRecord& b) {
    return a.endpoints.first == b.endpoints.first || a.endpoints.first == b.endpoints.second ||
           a.endpoints.second == b.endpoints.first || a.endpoints.second == b.endpoints.second;
}

int apex_of_ear(const EarSolver& s, std::pair<int, int> endpoints) {
    for (int e : {endpoints.first, endpoints.second}) {
        if (!s.alive(e)) {
            continue;
        }
        int a = s.next(e);
        if (s.alive(a) && norm_pair(s.prev(a), s.next(a)) == endpoints) {
            return a;
        }
    }
    return -1;
}

void run_extended(const CirclePointSet& points, EarSolver& solver);

/// Last-resort resolution when the one-step lookahead ties on a
/// non-identifying diagonal: solve both branches to completion and keep
/// the better. Off the constant-time path, but only reachable on inputs
/// adjacent to a symmetric quadruple.
void resolve_by_branching(const CirclePointSet& points, EarSolver& solver, int apex_a,
                          int apex_b) {
    EarSolver branch_a = solver;
    EarSolver branch_b = solver;
    branch_a.remove_apex(apex_a);
    branch_b.remove_apex(apex_b);
    run_extended(points, branch_a);
    run_extended(points, branch_b);
    Triangulation ta = assemble(points, branch_a);
    Triangulation tb = assemble(points, branch_b);
    int c = compare_lex(length_vector(ta, points), length_vector(tb, points));
    if (c == 0) {
        violated("lookahead branches tie: symmetric quadruple present");
    }
    solver.remove_apex(c > 0 ? apex_a : apex_b);
}

void lookahead_step(const CirclePointSet& points, EarSolver& solver, const EarRecord& t0,
                    const EarRecord& t1, const EarRecord& t2, const EarRecord& t3) {
    Probe probes[2];
    const int apexes[2] = {t2.apex, t3.apex};
    for (int b = 0; b < 2; ++b) {
        solver.remove_apex(apexes[b]);
        probes[b] = probe_next(solver);
        solver.undo_last_removal();
    }
    int c = solver.compare_keys(probes[0].key, probes[1].key);
    if (c != 0) {
        solver.remove_apex(c > 0 ? t2.apex : t3.apex);
        return;
    }
    // Equal continuation length: the decisive ear is the one both
    // branches agree on, which the casework pins to se0/se1 or a common
    // longer ear.
    auto contains = [](const Probe& p, std::pair<int, int> ep) {
        return std::find(p.ears.begin(), p.ears.end(), ep) != p.ears.end();
    };
    for (const EarRecord* se : {&t0, &t1}) {
        if (contains(probes[0], se->endpoints) || contains(probes[1], se->endpoints)) {
            solver.remove_apex(se->apex);
            return;
        }
    }
    for (auto ep : probes[0].ears) {
        if (contains(probes[1], ep)) {
            int apex = apex_of_ear(solver, ep);
            if (apex >= 0) {
                solver.remove_apex(apex);
                return;
            }
        }
    }
    resolve_by_branching(points, solver, t2.apex, t3.apex);
}

void run_extended(const CirclePointSet& points, EarSolver& solver) {
    while (solver.ring_size() > 8) {
        const auto top = solver.top();
        const EarRecord &t0 = top[0], &t1 = top[1], &t2 = top[2], &t3 = top[3];
        int c01 = solver.compare_keys(t0.key, t1.key);
        int c12 = solver.compare_keys(t1.key, t2.key);
        if (c01 == 0) {
            if (c12 == 0) {
                violated("three ears of equal length: symmetric quadruple present");
            }
            if (solver.ears_cross(t0.apex, t1.apex) || !ears_share_vertex(t0, t1)) {
                violated("equal disjoint ears: symmetric quadruple present");
            }
            // Unique maximal pair; both belong to the triangulation.
            solver.remove_apex(t0.apex);
            solver.remove_apex(t1.apex);
            continue;
        }
        if (c12 == 0) {
            if (solver.compare_keys(t2.key, t3.key) == 0) {
                violated("three ears of equal length: symmetric quadruple present");
            }
            if (solver.ears_cross(t1.apex, t2.apex) || !ears_share_vertex(t1, t2)) {
                violated("equal disjoint ears: symmetric quadruple present");
            }
            if (solver.ears_cross(t0.apex, t1.apex) && solver.ears_cross(t0.apex, t2.apex)) {
                // se0 crosses both: (se1, se2) is the unique maximal pair.
                solver.remove_apex(t1.apex);
                solver.remove_apex(t2.apex);
            } else {
                solver.remove_apex(t0.apex);
            }
            continue;
        }
        int c23 = solver.compare_keys(t2.key, t3.key);
        if (c23 == 0) {
            if (solver.ears_cross(t2.apex, t3.apex) || !ears_share_vertex(t2, t3)) {
                violated("equal disjoint ears: symmetric quadruple present");
            }
            if (!solver.ears_cross(t0.apex, t1.apex)) {
                solver.remove_apex(t1.apex);
            } else {
                lookahead_step(points, solver, t0, t1, t2, t3);
            }
            continue;
        }
        // All four distinct: simplified rule.
        if (!solver.ears_cross(t0.apex, t1.apex)) {
            solver.remove_apex(t1.apex);
        } else {
            solver.remove_apex(t2.apex);
        }
    }
}

} // namespace

Triangulation solve_extended(const CirclePointSet& points, SolveStats* stats,
                             const SolveOptions& options) {
    EarSolver solver(points, stats, options);
    run_extended(points, solver);
    return assemble(points, solver);
}

} // namespace concyclic
