#include "planex/canonical.hpp"

#include <algorithm>
#include <climits>

#include "planex/graph6.hpp"

namespace planex {

namespace {

// Ordered partition of 0..n-1: `lab` lists the vertices, `cell_end[i]` is 1
// when position i closes its cell. Once a vertex lands in a singleton cell
// its position never changes again; the tie/backjump logic relies on that.
struct Partition {
    std::vector<int> lab;
    std::vector<char> cell_end;
};

struct Searcher {
    const Graph& g;
    int n;
    int words;
    std::string best_key;
    std::vector<int> best_lab;
    std::vector<int> best_fixed;
    bool have_best = false;
    std::vector<std::vector<int>> autos;  // generators discovered at tying leaves
    std::vector<int> fixed;               // individualized vertices along the current path

    explicit Searcher(const Graph& graph) : g(graph), n(graph.order()), words((graph.order() + 63) / 64) {}

    // Splits every cell by neighbor counts against every cell until stable.
    void refine(Partition& p) const {
        std::vector<std::uint64_t> mask(words);
        bool changed = true;
        while (changed) {
            changed = false;
            int start = 0;
            // Snapshot splitter boundaries; cells created during the sweep
            // act as splitters on the next sweep.
            std::vector<std::pair<int, int>> splitters;
            for (int i = 0; i < n; ++i) {
                if (p.cell_end[i]) {
                    splitters.push_back({start, i + 1});
                    start = i + 1;
                }
            }
            for (auto [ss, se] : splitters) {
                std::fill(mask.begin(), mask.end(), 0);
                for (int i = ss; i < se; ++i) {
                    int v = p.lab[i];
                    mask[v / 64] |= 1ull << (v % 64);
                }
                int cs = 0;
                for (int i = 0; i < n; ++i) {
                    if (!p.cell_end[i]) continue;
                    int ce = i + 1;
                    if (ce - cs >= 2) {
                        std::vector<std::pair<int, int>> keyed(ce - cs);
                        bool uniform = true;
                        for (int k = cs; k < ce; ++k) {
                            int v = p.lab[k];
                            const std::uint64_t* r = g.row(v);
                            int cnt = 0;
                            for (int w = 0; w < words; ++w) cnt += __builtin_popcountll(r[w] & mask[w]);
                            keyed[k - cs] = {cnt, v};
                            if (cnt != keyed[0].first) uniform = false;
                        }
                        if (!uniform) {
                            std::sort(keyed.begin(), keyed.end());
                            for (int k = cs; k < ce; ++k) {
                                p.lab[k] = keyed[k - cs].second;
                                p.cell_end[k] = (char)((k + 1 == ce) || (keyed[k - cs].first != keyed[k - cs + 1].first));
                            }
                            changed = true;
                        }
                    }
                    cs = ce;
                }
            }
        }
    }

    std::string leaf_key(const std::vector<int>& lab) const {
        long long bits = (long long)n * (n - 1) / 2;
        std::string key((std::size_t)((bits + 7) / 8), '\0');
        long long b = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i, ++b) {
                if (g.has_edge(lab[i], lab[j])) key[(std::size_t)(b / 8)] |= (char)(1 << (7 - b % 8));
            }
        }
        return key;
    }

    // Orbit closure of `explored` under generators fixing the current prefix.
    bool prunable(int v, const std::vector<int>& explored) const {
        if (autos.empty() || explored.empty()) return false;
        std::vector<const std::vector<int>*> usable;
        for (const auto& sigma : autos) {
            bool ok = true;
            for (int f : fixed)
                if (sigma[f] != f) {
                    ok = false;
                    break;
                }
            if (ok) usable.push_back(&sigma);
        }
        if (usable.empty()) return false;
        std::vector<std::uint64_t> closure(words, 0);
        for (int u : explored) closure[u / 64] |= 1ull << (u % 64);
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto* sigma : usable) {
                for (int u = 0; u < n; ++u) {
                    if ((closure[u / 64] >> (u % 64)) & 1) {
                        int t = (*sigma)[u];
                        if (!((closure[t / 64] >> (t % 64)) & 1)) {
                            closure[t / 64] |= 1ull << (t % 64);
                            grew = true;
                        }
                    }
                }
            }
        }
        return (closure[v / 64] >> (v % 64)) & 1;
    }

    // Returns INT_MAX normally, or a backjump depth: the search unwinds to
    // that depth because the subtree hanging there is certified isomorphic
    // to an already-explored sibling of the best leaf's path.
    int search(Partition p) {
        refine(p);
        int tstart = -1, tend = 0;
        int cs = 0;
        for (int i = 0; i < n; ++i) {
            if (!p.cell_end[i]) continue;
            if (i + 1 - cs >= 2) {
                tstart = cs;
                tend = i + 1;
                break;
            }
            cs = i + 1;
        }
        if (tstart == -1) {
            std::string key = leaf_key(p.lab);
            if (!have_best || key < best_key) {
                best_key = std::move(key);
                best_lab = p.lab;
                best_fixed = fixed;
                have_best = true;
                return INT_MAX;
            }
            if (key == best_key) {
                // Equal adjacency strings compose to an automorphism
                // lab[i] -> best_lab[i]; it fixes the common path prefix.
                std::vector<int> sigma(n);
                for (int i = 0; i < n; ++i) sigma[p.lab[i]] = best_lab[i];
                autos.push_back(std::move(sigma));
                int div = 0;
                int lim = (int)std::min(fixed.size(), best_fixed.size());
                while (div < lim && fixed[div] == best_fixed[div]) ++div;
                return div;
            }
            return INT_MAX;
        }
        std::vector<int> cell(p.lab.begin() + tstart, p.lab.begin() + tend);
        std::sort(cell.begin(), cell.end());
        int depth = (int)fixed.size();
        std::vector<int> explored;
        for (int v : cell) {
            if (prunable(v, explored)) continue;
            Partition child = p;
            // Individualize v: [v | cell minus v].
            int at = tstart;
            child.lab[at++] = v;
            for (int u : cell)
                if (u != v) child.lab[at++] = u;
            child.cell_end[tstart] = 1;
            fixed.push_back(v);
            int jump = search(std::move(child));
            fixed.pop_back();
            explored.push_back(v);
            if (jump < depth) return jump;
        }
        return INT_MAX;
    }
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
    int n = g.order();
    if (n == 0) return {};
    Searcher s(g);
    Partition unit;
    unit.lab.resize(n);
    for (int i = 0; i < n; ++i) unit.lab[i] = i;
    unit.cell_end.assign(n, 0);
    unit.cell_end[n - 1] = 1;
    s.search(std::move(unit));
    return s.best_lab;
}

Graph canonical_relabel(const Graph& g) {
    std::vector<int> lab = canonical_order(g);
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[lab[i]] = i;
    return relabel(g, pos);
}

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_relabel(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace planex
