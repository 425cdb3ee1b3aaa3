#pragma once

// Test-only oracles, deliberately independent of the library's planarity,
// canonical-labeling and search paths.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "planex/graph.hpp"

namespace oracles {

using planex::Graph;

// Isomorphism by trying every vertex permutation; n <= 8.
inline bool iso_brute(const Graph& a, const Graph& b) {
    int n = a.order();
    if (n != b.order() || a.size() != b.size()) return false;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(p[u], p[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

namespace detail {

// Internally-disjoint path embedding for a subdivision of `pat` rooted at
// the branch tuple `branch`; `busy` marks vertices already consumed.
inline bool embed_paths(const Graph& g, const Graph& pat, const std::vector<int>& branch,
                        std::vector<std::pair<int, int>>& edges, std::size_t at,
                        std::vector<char>& busy) {
    if (at == edges.size()) return true;
    auto [pi, pj] = edges[at];
    int s = branch[pi], t = branch[pj];
    // DFS over simple paths s..t whose interior vertices are free.
    std::vector<int> stack;
    std::vector<char> on_path(g.order(), 0);
    bool found = false;
    std::function<void(int)> walk = [&](int v) {
        if (found) return;
        if (g.has_edge(v, t)) {
            for (int x : stack) busy[x] = 1;
            if (embed_paths(g, pat, branch, edges, at + 1, busy)) {
                found = true;
            }
            for (int x : stack) busy[x] = 0;
            if (found) return;
        }
        for (int u = 0; u < g.order(); ++u) {
            if (found) break;
            if (u == t || busy[u] || on_path[u] || !g.has_edge(v, u)) continue;
            on_path[u] = 1;
            stack.push_back(u);
            walk(u);
            stack.pop_back();
            on_path[u] = 0;
        }
    };
    walk(s);
    return found;
}

inline bool has_subdivision(const Graph& g, const Graph& pat) {
    int n = g.order(), pn = pat.order();
    if (n < pn) return false;
    std::vector<std::pair<int, int>> pedges;
    for (int i = 0; i < pn; ++i)
        for (int j = i + 1; j < pn; ++j)
            if (pat.has_edge(i, j)) pedges.push_back({i, j});
    std::vector<int> branch(pn, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> choose = [&](int at) -> bool {
        if (at == pn) {
            std::vector<char> busy(n, 0);
            for (int b : branch) busy[b] = 1;
            return embed_paths(g, pat, branch, pedges, 0, busy);
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) < pat.degree(at)) continue;
            used[v] = 1;
            branch[at] = v;
            if (choose(at + 1)) {
                used[v] = 0;
                return true;
            }
            used[v] = 0;
        }
        return false;
    };
    return choose(0);
}

}  // namespace detail

// Kuratowski: planar iff no K_5 or K_{3,3} subdivision. Exact; meant for
// n <= 8.
inline bool planar_brute(const Graph& g) {
    int n = g.order();
    if (n >= 3 && g.size() > 3LL * n - 6) return false;
    Graph k5 = planex::build_basic(planex::BasicKind::kComplete, 5);
    Graph k33(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
    return !detail::has_subdivision(g, k5) && !detail::has_subdivision(g, k33);
}

// One-page book embedding: outerplanar iff some circular vertex order makes
// no two edges cross. n <= 8.
inline bool outerplanar_brute(const Graph& g) {
    int n = g.order();
    if (n <= 3) return g.size() <= 3 && (n >= 3 || g.size() <= 1);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.push_back({u, v});
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(n);
    do {
        if (order[0] != 0) break;  // fix the rotation
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < edges.size() && ok; ++j) {
                int a = pos[edges[i].first], b = pos[edges[i].second];
                int c = pos[edges[j].first], d = pos[edges[j].second];
                if (a == c || a == d || b == c || b == d) continue;
                if (a > b) std::swap(a, b);
                bool c_in = a < c && c < b;
                bool d_in = a < d && d < b;
                if (c_in != d_in) ok = false;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

}  // namespace oracles
