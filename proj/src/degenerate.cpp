#include "concyclic/degenerate.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace concyclic::degenerate {

namespace {

struct Branch {
    std::vector<int> ring; // surviving point indices, cyclic order
    std::vector<std::pair<int, int>> diagonals;
};

struct Candidate {
    std::size_t branch;
    int remove_pos;  // position in the branch ring; -1 for the quad step
    std::pair<int, int> diagonal;
    TurnFraction key;
    int order_rank;
};

std::pair<int, int> norm_pair(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

/// Ears that can be the next (smallest remaining) diagonal of an optimal
/// completion: ears attaining the maximal-pair value M with a
/// non-crossing partner at least as long.
void branch_candidates(const CirclePointSet& points, const std::vector<int>& order_rank,
                       std::size_t branch_idx, const Branch& br, std::vector<Candidate>& out) {
    const int m = static_cast<int>(br.ring.size());
    if (m == 4) {
        TurnFraction k02 = points.chord_key(br.ring[0], br.ring[2]);
        TurnFraction k13 = points.chord_key(br.ring[1], br.ring[3]);
        int c = k02.compare(k13);
        if (c >= 0) {
            out.push_back({branch_idx, -1, norm_pair(br.ring[0], br.ring[2]), k02,
                           std::min(order_rank[br.ring[0]], order_rank[br.ring[2]])});
        }
        if (c <= 0) {
            out.push_back({branch_idx, -1, norm_pair(br.ring[1], br.ring[3]), k13,
                           std::min(order_rank[br.ring[1]], order_rank[br.ring[3]])});
        }
        return;
    }
    std::vector<TurnFraction> keys(m);
    for (int t = 0; t < m; ++t) {
        int p = br.ring[(t + m - 1) % m];
        int q = br.ring[(t + 1) % m];
        keys[t] = points.chord_key(p, q);
    }
    // M = max over non-crossing ear pairs of the shorter key. Ears cross
    // exactly when their apexes are ring-adjacent.
    const TurnFraction* best = nullptr;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            int gap = b - a;
            if (gap == 1 || gap == m - 1) {
                continue;
            }
            const TurnFraction& mn = keys[a].compare(keys[b]) <= 0 ? keys[a] : keys[b];
            if (!best || mn.compare(*best) > 0) {
                best = &mn;
            }
        }
    }
    TurnFraction level = *best;
    for (int t = 0; t < m; ++t) {
        if (keys[t].compare(level) != 0) {
            continue;
        }
        bool has_partner = false;
        for (int u = 0; u < m && !has_partner; ++u) {
            int gap = std::abs(u - t);
            if (u == t || gap == 1 || gap == m - 1) {
                continue;
            }
            has_partner = keys[u].compare(level) >= 0;
        }
        if (!has_partner) {
            continue;
        }
        int p = br.ring[(t + m - 1) % m];
        int q = br.ring[(t + 1) % m];
        out.push_back({branch_idx, t, norm_pair(p, q), keys[t], order_rank[br.ring[t]]});
    }
}

std::vector<Triangulation> run_choice_tree(const CirclePointSet& points,
                                           const std::vector<int>& order_rank,
                                           std::size_t hard_cap, bool& truncated) {
    const int n = points.size();
    std::vector<Branch> branches;
    {
        Branch root;
        root.ring.resize(n);
        for (int i = 0; i < n; ++i) {
            root.ring[i] = i;
        }
        branches.push_back(std::move(root));
    }
    truncated = false;
    for (int layer = 0; layer < n - 3; ++layer) {
        std::vector<Candidate> cands;
        for (std::size_t b = 0; b < branches.size(); ++b) {
            branch_candidates(points, order_rank, b, branches[b], cands);
        }
        // Keep only candidates whose emitted key attains the global max;
        // surviving branches share equal score prefixes, so the newest
        // key is the whole comparison.
        const TurnFraction* level = nullptr;
        for (const auto& c : cands) {
            if (!level || c.key.compare(*level) > 0) {
                level = &c.key;
            }
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (a.branch != b.branch) {
                return a.branch < b.branch;
            }
            return a.order_rank < b.order_rank;
        });
        std::vector<Branch> next;
        std::map<std::vector<std::pair<int, int>>, std::size_t> seen;
        for (const auto& c : cands) {
            if (c.key.compare(*level) != 0) {
                continue;
            }
            const Branch& parent = branches[c.branch];
            Branch child;
            child.diagonals = parent.diagonals;
            child.diagonals.push_back(c.diagonal);
            auto sorted = child.diagonals;
            std::sort(sorted.begin(), sorted.end());
            if (seen.count(sorted)) {
                continue;
            }
            if (c.remove_pos < 0) {
                child.ring = {parent.ring[0], parent.ring[1], parent.ring[2]};
            } else {
                child.ring = parent.ring;
                child.ring.erase(child.ring.begin() + c.remove_pos);
            }
            seen.emplace(std::move(sorted), next.size());
            next.push_back(std::move(child));
            if (next.size() > hard_cap) {
                truncated = true;
                break;
            }
        }
        branches = std::move(next);
    }
    std::vector<Triangulation> leaves;
    leaves.reserve(branches.size());
    for (auto& br : branches) {
        leaves.push_back(make_triangulation(n, std::move(br.diagonals)));
    }
    return leaves;
}

std::vector<int> identity_rank(int n) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) {
        r[i] = i;
    }
    return r;
}

} // namespace

EnumerateResult enumerate_optimal(const CirclePointSet& points, std::size_t limit) {
    if (limit == 0) {
        raise(errc::limit_is_zero, "enumeration limit must be at least 1");
    }
    EnumerateResult res;
    std::size_t hard_cap = std::max<std::size_t>(limit * 4, 65536);
    auto leaves = run_choice_tree(points, identity_rank(points.size()), hard_cap, res.truncated);
    std::sort(leaves.begin(), leaves.end());
    if (leaves.size() > limit) {
        leaves.resize(limit);
        res.truncated = true;
    }
    res.winners = std::move(leaves);
    return res;
}

std::uint64_t regular_count(int n) {
    if (n < 5) {
        raise(errc::too_small, "closed-form count needs n >= 5 (n = 4 has 2, by symmetry)");
    }
    if (n > 60) {
        raise(errc::too_large, "count overflows 64 bits");
    }
    return static_cast<std::uint64_t>(n) << (n - 5);
}

Triangulation solve_canonical(const CirclePointSet& points) {
    const int n = points.size();
    // Relabel starting from the lexicographically smallest point, CCW.
    int start = 0;
    Point best = points.point(0);
    for (int i = 1; i < n; ++i) {
        Point p = points.point(i);
        if (p.x < best.x || (p.x == best.x && p.y < best.y)) {
            best = p;
            start = i;
        }
    }
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) {
        rank[i] = (i - start + n) % n;
    }
    bool truncated = false;
    auto leaves = run_choice_tree(points, rank, 1u << 22, truncated);
    // Leftmost surviving leaf under the label ordering.
    return leaves.front();
}

} // namespace concyclic::degenerate
