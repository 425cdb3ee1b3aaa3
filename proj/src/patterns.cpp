#include "planex/patterns.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "planex/canonical.hpp"
#include "planex/planarity.hpp"

namespace planex {

Pattern Pattern::cycle(int ell) {
    if (ell < 3) throw std::invalid_argument("Pattern: cycle length >= 3");
    return {PatternTag::kCycle, ell, 1, 0};
}

Pattern Pattern::disjoint_cycles(int t, int ell) {
    if (ell < 3 || t < 1) throw std::invalid_argument("Pattern: need ell >= 3, t >= 1");
    return {PatternTag::kDisjointCycles, ell, t, 0};
}

Pattern Pattern::disjoint_any_cycles(int t) {
    if (t < 1) throw std::invalid_argument("Pattern: need t >= 1");
    return {PatternTag::kDisjointAnyCycles, 0, t, 0};
}

Pattern Pattern::apex_path(int k) {
    if (k < 2) throw std::invalid_argument("Pattern: need k >= 2");
    return {PatternTag::kApexPath, 0, 1, k};
}

std::string to_string(const Pattern& p) {
    switch (p.tag) {
        case PatternTag::kCycle:
            return "C" + std::to_string(p.ell);
        case PatternTag::kDisjointCycles:
            return std::to_string(p.t) + "C" + std::to_string(p.ell);
        case PatternTag::kDisjointAnyCycles:
            return std::to_string(p.t) + "C";
        case PatternTag::kApexPath:
            return "K1P" + std::to_string(p.k + 1);
    }
    return "?";
}

namespace {

// Canonical cycle listing: rotate so the minimum vertex leads, orient so the
// second entry is the smaller neighbor.
std::vector<int> canonical_cycle(std::vector<int> c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.size() >= 3 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    return c;
}

struct LenCycleSearch {
    const Graph& g;
    int len;
    const std::vector<char>& allowed;
    void* ctx;
    CycleCallback cb;
    std::vector<int> path;
    std::vector<char> used;
    bool stop = false;

    void run() {
        used.assign(g.order(), 0);
        for (int s = 0; s < g.order() && !stop; ++s) {
            if (!allowed[s]) continue;
            path = {s};
            used[s] = 1;
            extend(s, s);
            used[s] = 0;
        }
    }

    void extend(int s, int last) {
        if (stop) return;
        if ((int)path.size() == len) {
            if (g.has_edge(last, s) && path[1] < path.back()) {
                if (cb(ctx, path)) stop = true;
            }
            return;
        }
        g.for_neighbors(last, [&](int u) {
            if (stop || u <= s || !allowed[u] || used[u]) return;
            used[u] = 1;
            path.push_back(u);
            extend(s, u);
            path.pop_back();
            used[u] = 0;
        });
    }
};

struct ChordlessSearch {
    const Graph& g;
    const std::vector<char>& allowed;
    void* ctx;
    CycleCallback cb;
    std::vector<int> path;
    std::vector<char> used;
    bool stop = false;

    void run() {
        used.assign(g.order(), 0);
        for (int s = 0; s < g.order() && !stop; ++s) {
            if (!allowed[s]) continue;
            path = {s};
            used[s] = 1;
            extend(s);
            used[s] = 0;
        }
    }

    // Grows induced paths from s over vertices > s; a neighbor of both the
    // path end and s closes a chordless cycle and is never extended.
    void extend(int s) {
        if (stop) return;
        int last = path.back();
        g.for_neighbors(last, [&](int u) {
            if (stop || u <= s || !allowed[u] || used[u]) return;
            // u must avoid chords to interior path vertices.
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(u, path[i])) return;
            if (g.has_edge(u, s)) {
                if (path.size() >= 2 && path[1] < u) {
                    path.push_back(u);
                    if (cb(ctx, path)) stop = true;
                    path.pop_back();
                }
                return;
            }
            used[u] = 1;
            path.push_back(u);
            extend(s);
            path.pop_back();
            used[u] = 0;
        });
    }
};

std::vector<char> all_allowed(int n) { return std::vector<char>(n, 1); }

bool exists_cycle_of_length(const Graph& g, int len, const std::vector<char>& allowed,
                            std::vector<int>* out) {
    struct Ctx {
        std::vector<int>* out;
        bool found = false;
    } c{out};
    for_each_cycle_of_length(g, len, allowed, &c, [](void* p, const std::vector<int>& cyc) {
        auto* cc = (Ctx*)p;
        cc->found = true;
        if (cc->out) *cc->out = canonical_cycle(cyc);
        return true;
    });
    return c.found;
}

// t vertex-disjoint cycles of length ell within `allowed`.
bool disjoint_len_cycles(const Graph& g, int t, int ell, std::vector<char>& allowed,
                         std::vector<std::vector<int>>* out) {
    if (t == 0) return true;
    struct Ctx {
        const Graph& g;
        int t, ell;
        std::vector<char>& allowed;
        std::vector<std::vector<int>>* out;
        bool found = false;
    } c{g, t, ell, allowed, out};
    for_each_cycle_of_length(g, ell, allowed, &c, [](void* p, const std::vector<int>& cyc) {
        auto* cc = (Ctx*)p;
        for (int v : cyc) cc->allowed[v] = 0;
        bool rest = disjoint_len_cycles(cc->g, cc->t - 1, cc->ell, cc->allowed, cc->out);
        for (int v : cyc) cc->allowed[v] = 1;
        if (rest) {
            cc->found = true;
            if (cc->out) cc->out->insert(cc->out->begin(), canonical_cycle(cyc));
            return true;
        }
        return false;
    });
    return c.found;
}

// t vertex-disjoint cycles of unrestricted lengths. The first copy ranges
// over chordless cycles only: any cycle contains a chordless one on a subset
// of its vertices, so this loses nothing.
bool disjoint_any_cycles_impl(const Graph& g, int t, std::vector<char>& allowed,
                              std::vector<std::vector<int>>* out) {
    if (t == 0) return true;
    if (t == 1 && !out) return has_cycle_within(g, allowed);
    struct Ctx {
        const Graph& g;
        int t;
        std::vector<char>& allowed;
        std::vector<std::vector<int>>* out;
        bool found = false;
    } c{g, t, allowed, out};
    for_each_chordless_cycle(g, allowed, &c, [](void* p, const std::vector<int>& cyc) {
        auto* cc = (Ctx*)p;
        for (int v : cyc) cc->allowed[v] = 0;
        bool rest = disjoint_any_cycles_impl(cc->g, cc->t - 1, cc->allowed, cc->out);
        for (int v : cyc) cc->allowed[v] = 1;
        if (rest) {
            cc->found = true;
            if (cc->out) cc->out->insert(cc->out->begin(), canonical_cycle(cyc));
            return true;
        }
        return false;
    });
    return c.found;
}

// A path on `want` vertices inside the graph induced on `allowed`.
bool path_of_order(const Graph& g, int want, const std::vector<char>& allowed, std::vector<int>& path,
                   std::vector<char>& used) {
    if ((int)path.size() == want) return true;
    if (path.empty()) {
        for (int s = 0; s < g.order(); ++s) {
            if (!allowed[s]) continue;
            path.push_back(s);
            used[s] = 1;
            if (path_of_order(g, want, allowed, path, used)) return true;
            path.pop_back();
            used[s] = 0;
        }
        return false;
    }
    bool found = false;
    g.for_neighbors(path.back(), [&](int u) {
        if (found || !allowed[u] || used[u]) return;
        path.push_back(u);
        used[u] = 1;
        if (path_of_order(g, want, allowed, path, used)) {
            found = true;
            return;
        }
        path.pop_back();
        used[u] = 0;
    });
    return found;
}

}  // namespace

void for_each_cycle_of_length(const Graph& g, int len, const std::vector<char>& allowed, void* ctx,
                              CycleCallback cb) {
    if (len < 3 || len > g.order()) return;
    LenCycleSearch s{g, len, allowed, ctx, cb, {}, {}, false};
    s.run();
}

void for_each_chordless_cycle(const Graph& g, const std::vector<char>& allowed, void* ctx,
                              CycleCallback cb) {
    ChordlessSearch s{g, allowed, ctx, cb, {}, {}, false};
    s.run();
}

bool has_cycle_within(const Graph& g, const std::vector<char>& allowed) {
    int n = g.order();
    std::vector<int> state(n, 0);  // 0 unseen, 1 active component
    long long verts = 0, edges = 0;
    for (int s = 0; s < n; ++s) {
        if (!allowed[s] || state[s]) continue;
        long long cv = 0, ce = 0;
        std::vector<int> stack{s};
        state[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++cv;
            g.for_neighbors(v, [&](int u) {
                if (!allowed[u]) return;
                ++ce;
                if (!state[u]) {
                    state[u] = 1;
                    stack.push_back(u);
                }
            });
        }
        if (ce / 2 >= cv) return true;
        verts += cv;
        edges += ce;
    }
    (void)verts;
    (void)edges;
    return false;
}

bool contains_pattern(const Graph& g, const Pattern& p, PatternWitness* witness) {
    std::vector<char> allowed = all_allowed(g.order());
    switch (p.tag) {
        case PatternTag::kCycle: {
            if (p.ell > g.order()) return false;
            std::vector<int> cyc;
            if (!exists_cycle_of_length(g, p.ell, allowed, witness ? &cyc : nullptr)) return false;
            if (witness) witness->pieces = {cyc};
            return true;
        }
        case PatternTag::kDisjointCycles: {
            if ((long long)p.t * p.ell > g.order()) return false;
            std::vector<std::vector<int>> pieces;
            if (!disjoint_len_cycles(g, p.t, p.ell, allowed, witness ? &pieces : nullptr)) return false;
            if (witness) witness->pieces = pieces;
            return true;
        }
        case PatternTag::kDisjointAnyCycles: {
            if (3LL * p.t > g.order()) return false;
            std::vector<std::vector<int>> pieces;
            if (!disjoint_any_cycles_impl(g, p.t, allowed, witness ? &pieces : nullptr)) return false;
            if (witness) witness->pieces = pieces;
            return true;
        }
        case PatternTag::kApexPath: {
            int want = p.k + 1;
            if (want + 1 > g.order()) return false;
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) < want) continue;
                std::vector<char> nbrs(g.order(), 0);
                g.for_neighbors(v, [&](int u) { nbrs[u] = 1; });
                std::vector<int> path;
                std::vector<char> used(g.order(), 0);
                if (path_of_order(g, want, nbrs, path, used)) {
                    if (witness) witness->pieces = {{v}, path};
                    return true;
                }
            }
            return false;
        }
    }
    return false;
}

TwoCyclesVerdict two_cycles_or_certificate(const Graph& g) {
    if (min_degree(g) < 3) throw std::invalid_argument("two_cycles_or_certificate: min degree >= 3 required");
    if (!is_planar(g).planar) throw std::invalid_argument("two_cycles_or_certificate: planar input required");

    int n = g.order();
    // All chordless cycles, sorted; the witness pair is minimized first by
    // the first cycle's canonical listing, then by the second's.
    std::vector<std::vector<int>> cycles;
    std::vector<char> allowed = all_allowed(n);
    for_each_chordless_cycle(g, allowed, &cycles, [](void* p, const std::vector<int>& cyc) {
        ((std::vector<std::vector<int>>*)p)->push_back(canonical_cycle(cyc));
        return false;
    });
    std::sort(cycles.begin(), cycles.end());

    for (const auto& c1 : cycles) {
        std::vector<char> rest = all_allowed(n);
        for (int v : c1) rest[v] = 0;
        if (!has_cycle_within(g, rest)) continue;
        std::vector<std::vector<int>> inner;
        for_each_chordless_cycle(g, rest, &inner, [](void* p, const std::vector<int>& cyc) {
            ((std::vector<std::vector<int>>*)p)->push_back(canonical_cycle(cyc));
            return false;
        });
        TwoCyclesVerdict out;
        out.has_witness = true;
        out.cycle1 = c1;
        out.cycle2 = *std::min_element(inner.begin(), inner.end());
        return out;
    }

    TwoCyclesVerdict out;
    out.has_witness = false;
    if (n == 5) {
        Graph dat = join(build_basic(BasicKind::kEmpty, 2), build_basic(BasicKind::kCycle, 3));
        if (are_isomorphic(g, dat)) {
            out.certificate = TwoCyclesVerdict::Certificate::kDoubleApexTriangle;
            return out;
        }
    }
    if (n >= 4) {
        Graph wheel = join(build_basic(BasicKind::kEmpty, 1), build_basic(BasicKind::kCycle, n - 1));
        if (are_isomorphic(g, wheel)) {
            out.certificate = TwoCyclesVerdict::Certificate::kWheel;
            return out;
        }
    }
    throw std::logic_error("two_cycles_or_certificate: no witness and no certificate matches");
}

std::vector<int> quadrilateral_apex(const Graph& g) {
    int n = g.order();
    std::vector<char> in_all(n, 1);
    bool any = false;
    bool empty_intersection = false;
    for (int u = 0; u < n && !empty_intersection; ++u) {
        for (int v = u + 1; v < n && !empty_intersection; ++v) {
            // u, v as opposite corners; every pair of common neighbors closes
            // a quadrilateral. Each C_4 appears via both diagonals, which
            // does not change the intersection.
            std::vector<int> common;
            const std::uint64_t* ru = g.row(u);
            const std::uint64_t* rv = g.row(v);
            for (int w = 0; w < g.row_words(); ++w) {
                std::uint64_t bits = ru[w] & rv[w];
                while (bits) {
                    int b = __builtin_ctzll(bits);
                    common.push_back(w * 64 + b);
                    bits &= bits - 1;
                }
            }
            if (common.size() < 2) continue;
            for (std::size_t i = 0; i < common.size() && !empty_intersection; ++i) {
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    any = true;
                    int a = common[i], b = common[j];
                    for (int x = 0; x < n; ++x)
                        if (in_all[x] && x != u && x != v && x != a && x != b) in_all[x] = 0;
                    if (std::none_of(in_all.begin(), in_all.end(), [](char c) { return c != 0; })) {
                        empty_intersection = true;
                        break;
                    }
                }
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!any || in_all[v]) out.push_back(v);
    return out;
}

std::optional<LinearForest> linear_forest_profile(const Graph& g) {
    std::vector<int> parts;
    for (const auto& comp : connected_components(g)) {
        long long edges = 0;
        int maxdeg = 0;
        for (int v : comp) {
            int d = g.degree(v);
            maxdeg = std::max(maxdeg, d);
            edges += d;
        }
        edges /= 2;
        // A component is a path iff it is a tree with maximum degree <= 2.
        if (maxdeg > 2 || edges != (long long)comp.size() - 1) return std::nullopt;
        parts.push_back((int)comp.size());
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return LinearForest{parts};
}

bool joined_freeness(const LinearForest& h, int ell, FreenessMode mode) {
    if (h.parts.size() < 2) throw std::invalid_argument("joined_freeness: needs >= 2 path components");
    if (mode == FreenessMode::kDouble && ell < 3) throw std::invalid_argument("joined_freeness: ell >= 3");
    if (mode == FreenessMode::kSingle && ell < 5) throw std::invalid_argument("joined_freeness: ell >= 5 for single mode");
    int n1 = h.parts[0], n2 = h.parts[1];
    if (mode == FreenessMode::kDouble) return n1 <= 2 * ell - 3 && n2 <= ell - 2;
    return n1 + n2 <= ell - 3;
}

}  // namespace planex
