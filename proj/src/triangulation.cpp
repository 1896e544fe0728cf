#include "concyclic/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace concyclic {

void Triangulation::normalize() {
    for (auto& d : diagonals) {
        if (d.first > d.second) {
            std::swap(d.first, d.second);
        }
    }
    std::sort(diagonals.begin(), diagonals.end());
}

Triangulation make_triangulation(int n, std::vector<std::pair<int, int>> diagonals) {
    Triangulation t{n, std::move(diagonals)};
    t.normalize();
    return t;
}

bool cyclic_between(int n, int a, int x, int b) {
    if (a == b || x == a || x == b) {
        return false;
    }
    int span = (b - a + n) % n;
    int off = (x - a + n) % n;
    return 0 < off && off < span;
}

bool diagonals_cross(int n, std::pair<int, int> d1, std::pair<int, int> d2) {
    if (d1.first == d2.first || d1.first == d2.second || d1.second == d2.first ||
        d1.second == d2.second) {
        return false;
    }
    return cyclic_between(n, d1.first, d2.first, d1.second) !=
           cyclic_between(n, d1.first, d2.second, d1.second);
}

bool is_chord(int n, int i, int j) {
    int d = (j - i + n) % n;
    return d == 1 || d == n - 1;
}

bool validate(const Triangulation& t, int n) {
    if (n < 4 || t.n != n) {
        return false;
    }
    if (static_cast<int>(t.diagonals.size()) != n - 3) {
        return false;
    }
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : t.diagonals) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j || is_chord(n, i, j)) {
            return false;
        }
        auto norm = std::minmax(i, j);
        if (!seen.insert({norm.first, norm.second}).second) {
            return false;
        }
    }
    for (std::size_t a = 0; a < t.diagonals.size(); ++a) {
        for (std::size_t b = a + 1; b < t.diagonals.size(); ++b) {
            if (diagonals_cross(n, t.diagonals[a], t.diagonals[b])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::pair<int, int>> ears_of(const Triangulation& t) {
    std::vector<std::pair<int, int>> ears;
    for (auto d : t.diagonals) {
        int gap = (d.second - d.first + t.n) % t.n;
        if (gap == 2 || gap == t.n - 2) {
            ears.push_back(d);
        }
    }
    return ears;
}

std::vector<std::array<int, 3>> triangles_of(const Triangulation& t) {
    const int n = t.n;
    std::set<std::pair<int, int>> diag;
    for (auto d : t.diagonals) {
        diag.insert(std::minmax(d.first, d.second));
    }
    std::vector<int> next(n), prev(n);
    for (int i = 0; i < n; ++i) {
        next[i] = (i + 1) % n;
        prev[i] = (i + n - 1) % n;
    }
    std::vector<std::array<int, 3>> tris;
    // Peel ear-tips of the triangulation off the ring.
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        stack.push_back(i);
    }
    std::vector<char> alive(n, 1);
    int ring = n;
    while (ring > 3 && !stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        if (!alive[i]) {
            continue;
        }
        int p = prev[i], q = next[i];
        if (!diag.count(std::minmax(p, q))) {
            continue;
        }
        std::array<int, 3> tri{p, i, q};
        std::sort(tri.begin(), tri.end());
        tris.push_back(tri);
        alive[i] = 0;
        next[p] = q;
        prev[q] = p;
        --ring;
        stack.push_back(p);
        stack.push_back(q);
    }
    if (ring == 3) {
        int a = -1;
        for (int i = 0; i < n; ++i) {
            if (alive[i]) {
                a = i;
                break;
            }
        }
        std::array<int, 3> tri{a, next[a], next[next[a]]};
        std::sort(tri.begin(), tri.end());
        tris.push_back(tri);
    }
    return tris;
}

DualPathResult dual_path(const Triangulation& t) {
    DualPathResult res;
    res.triangles = triangles_of(t);
    const auto& tris = res.triangles;
    std::set<std::pair<int, int>> diag;
    for (auto d : t.diagonals) {
        diag.insert(std::minmax(d.first, d.second));
    }
    // diagonal -> the (at most two) triangles containing it
    std::vector<std::vector<int>> adj(tris.size());
    {
        std::map<std::pair<int, int>, std::vector<int>> by_diag;
        for (std::size_t k = 0; k < tris.size(); ++k) {
            const auto& tri = tris[k];
            const std::pair<int, int> edges[3] = {
                std::minmax(tri[0], tri[1]), std::minmax(tri[0], tri[2]),
                std::minmax(tri[1], tri[2])};
            for (const auto& e : edges) {
                if (diag.count(e)) {
                    by_diag[e].push_back(static_cast<int>(k));
                }
            }
        }
        for (const auto& [e, ts] : by_diag) {
            if (ts.size() == 2) {
                adj[ts[0]].push_back(ts[1]);
                adj[ts[1]].push_back(ts[0]);
            }
        }
    }
    for (std::size_t k = 0; k < tris.size(); ++k) {
        if (adj[k].size() > 2) {
            res.is_path = false;
            res.branching = tris[k];
            return res;
        }
    }
    // Walk from the smallest leaf triangle.
    int start = -1;
    for (std::size_t k = 0; k < tris.size(); ++k) {
        if (adj[k].size() <= 1 && (start < 0 || tris[k] < tris[start])) {
            start = static_cast<int>(k);
        }
    }
    std::vector<std::array<int, 3>> ordered;
    std::vector<char> visited(tris.size(), 0);
    int cur = start;
    while (cur >= 0 && !visited[cur]) {
        visited[cur] = 1;
        ordered.push_back(tris[cur]);
        int nxt = -1;
        for (int nb : adj[cur]) {
            if (!visited[nb]) {
                nxt = nb;
                break;
            }
        }
        cur = nxt;
    }
    if (ordered.size() != tris.size()) {
        res.is_path = false; // disconnected dual, cannot happen for valid input
        return res;
    }
    res.is_path = true;
    res.triangles = std::move(ordered);
    return res;
}

ScoreVector length_vector(const Triangulation& t, const CirclePointSet& points) {
    ScoreVector sv;
    sv.kind = ScoreKind::LengthVector;
    sv.mode = points.mode();
    sv.entries.reserve(t.diagonals.size());
    for (auto d : t.diagonals) {
        sv.entries.push_back(points.chord_key(d.first, d.second));
    }
    std::sort(sv.entries.begin(), sv.entries.end(),
              [](const TurnFraction& a, const TurnFraction& b) { return a.compare(b) < 0; });
    return sv;
}

ScoreVector angle_vector(const Triangulation& t, const CirclePointSet& points) {
    ScoreVector sv;
    sv.kind = ScoreKind::AngleVector;
    sv.mode = points.mode();
    sv.entries.reserve(3 * t.diagonals.size() + 6);
    // Indices of each triangle are in ascending = CCW order; the angle at
    // a vertex is half the arc subtended by the opposite side.
    for (const auto& tri : triangles_of(t)) {
        const auto [a, b, c] = tri;
        sv.entries.push_back(points.arc_between(b, c).span); // angle at a
        sv.entries.push_back(points.arc_between(c, a).span); // angle at b
        sv.entries.push_back(points.arc_between(a, b).span); // angle at c
    }
    std::sort(sv.entries.begin(), sv.entries.end(),
              [](const TurnFraction& a, const TurnFraction& b) { return a.compare(b) < 0; });
    return sv;
}

int compare_lex(const ScoreVector& a, const ScoreVector& b) {
    if (a.kind != b.kind) {
        raise(errc::kind_mismatch, "comparing score vectors of different kinds");
    }
    if (a.entries.size() != b.entries.size()) {
        raise(errc::length_mismatch, "comparing score vectors of different lengths");
    }
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
        int c = a.entries[k].compare(b.entries[k]);
        if (c != 0) {
            return c;
        }
    }
    return 0;
}

Triangulation fan_pair_triangulation(const CirclePointSet& points, int i, int j) {
    const int n = points.size();
    if (i < 0 || i >= n || j < 0 || j >= n) {
        raise(errc::index_out_of_range, "ear apex out of range");
    }
    if (i == j) {
        raise(errc::same_apex, "ear apexes coincide: " + std::to_string(i));
    }
    auto mod = [n](int x) { return ((x % n) + n) % n; };
    std::pair<int, int> ei{mod(i - 1), mod(i + 1)};
    std::pair<int, int> ej{mod(j - 1), mod(j + 1)};
    if (diagonals_cross(n, ei, ej)) {
        raise(errc::crossing_ears, "ears at apexes " + std::to_string(i) + " and " +
                                       std::to_string(j) + " cross");
    }
    std::vector<std::pair<int, int>> diags;
    auto add = [&](int a, int b) {
        if (!is_chord(n, a, b) && a != b) {
            diags.emplace_back(std::minmax(a, b));
        }
    };
    // Double fan: from p_{i-1} over p_{i+1}..p_{j-1}, then from p_{j-1}
    // over p_{j+1}..p_{i-1}.
    for (int t = mod(i + 1);; t = mod(t + 1)) {
        add(mod(i - 1), t);
        if (t == mod(j - 1)) {
            break;
        }
    }
    for (int t = mod(j + 1);; t = mod(t + 1)) {
        add(mod(j - 1), t);
        if (t == mod(i - 1)) {
            break;
        }
    }
    std::sort(diags.begin(), diags.end());
    diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
    Triangulation t{n, std::move(diags)};
    if (!validate(t, n)) {
        raise(errc::precondition_violated, "fan-pair construction did not validate");
    }
    return t;
}

} // namespace concyclic
