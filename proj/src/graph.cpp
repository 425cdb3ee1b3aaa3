#include "planex/graph.hpp"

#include <algorithm>
#include <numeric>

namespace planex {

Graph build_basic(BasicKind kind, int n) {
    if (n < 1) throw std::invalid_argument("build_basic: n >= 1 required");
    if (kind == BasicKind::kCycle && n < 3) throw std::invalid_argument("build_basic: cycle needs n >= 3");
    Graph g(n);
    switch (kind) {
        case BasicKind::kEmpty:
            break;
        case BasicKind::kPath:
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            break;
        case BasicKind::kCycle:
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            g.add_edge(n - 1, 0);
            break;
        case BasicKind::kComplete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            break;
    }
    return g;
}

Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.order(), n2 = g2.order();
    if (n1 + n2 > kMaxVertices) throw std::invalid_argument("join: capacity overflow");
    Graph g(n1 + n2);
    for (int u = 0; u < n1; ++u)
        g1.for_neighbors(u, [&](int v) { if (u < v) g.add_edge(u, v); });
    for (int u = 0; u < n2; ++u)
        g2.for_neighbors(u, [&](int v) { if (u < v) g.add_edge(n1 + u, n1 + v); });
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
    return g;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    long long total = 0;
    for (const Graph& g : gs) total += g.order();
    if (total > kMaxVertices) throw std::invalid_argument("disjoint_union: capacity overflow");
    Graph g((int)total);
    int base = 0;
    for (const Graph& part : gs) {
        for (int u = 0; u < part.order(); ++u)
            part.for_neighbors(u, [&](int v) { if (u < v) g.add_edge(base + u, base + v); });
        base += part.order();
    }
    return g;
}

std::vector<int> degree_peel_vertices(const Graph& g, int d) {
    int n = g.order();
    std::vector<bool> alive(n, true);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    // Repeated scan to fixpoint; the core is unique so order does not matter.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (alive[v] && deg[v] <= d) {
                alive[v] = false;
                changed = true;
                g.for_neighbors(v, [&](int u) { if (alive[u]) --deg[u]; });
            }
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    return keep;
}

Graph degree_peel(const Graph& g, int d) { return induced_subgraph(g, degree_peel_vertices(g, d)); }

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    Graph h((int)keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) h.add_edge((int)i, (int)j);
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& p) {
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        g.for_neighbors(u, [&](int v) { if (u < v) h.add_edge(p[u], p[v]); });
    return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = (int)out.size();
        std::vector<int> stack{s}, members;
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            g.for_neighbors(v, [&](int u) {
                if (comp[u] == -1) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            });
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

bool is_forest(const Graph& g) {
    long long e = g.size();
    return e == (long long)g.order() - (long long)connected_components(g).size();
}

int min_degree(const Graph& g) {
    int d = g.order() == 0 ? 0 : g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

LinearForest LinearForest::of(std::vector<int> parts) {
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("LinearForest: every part must be >= 1");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return LinearForest{std::move(parts)};
}

Graph realize(const LinearForest& h) {
    std::vector<Graph> paths;
    paths.reserve(h.parts.size());
    for (int p : h.parts) paths.push_back(build_basic(BasicKind::kPath, p));
    return disjoint_union(paths);
}

std::string to_string(const LinearForest& h) {
    std::string s = "[";
    for (std::size_t i = 0; i < h.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(h.parts[i]);
    }
    return s + "]";
}

}  // namespace planex
