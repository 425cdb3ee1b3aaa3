#include "planex/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "planex/canonical.hpp"
#include "planex/graph6.hpp"
#include "planex/patterns.hpp"
#include "planex/planarity.hpp"

namespace planex {

std::string to_string(Family f) {
    switch (f) {
        case Family::kK2N2: return "k2n2";
        case Family::kJN: return "jn";
        case Family::kDoubleWheel: return "double-wheel";
        case Family::kSpex2Cl: return "spex-2cl";
        case Family::kSpexCl: return "spex-cl";
        case Family::kK2P3Rest: return "k2p3rest";
        case Family::kGstar2C: return "gstar";
        case Family::kOpC4Extremal: return "op-c4";
        case Family::kTuran2C4: return "turan-2c4";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
    for (Family f : {Family::kK2N2, Family::kJN, Family::kDoubleWheel, Family::kSpex2Cl,
                     Family::kSpexCl, Family::kK2P3Rest, Family::kGstar2C, Family::kOpC4Extremal,
                     Family::kTuran2C4})
        if (to_string(f) == name) return f;
    return std::nullopt;
}

long long ex_op_formula(int n, int k) {
    if (k < 3 || n < k) throw std::invalid_argument("ex_op_formula: require n >= k >= 3");
    long long lambda = ((long long)k * n - 2 * k - 1) / ((long long)k * k - 2 * k - 1) + 1;
    long long base = 2LL * n - lambda + 2 * (lambda / k);
    return base - (lambda % k == 0 ? 3 : 2);
}

long long ex_op_c4_alt(int m) {
    if (m < 3) throw std::invalid_argument("ex_op_c4_alt: require order >= 3");
    long long n = m + 1;
    if (n % 7 == 0) return 12 * n / 7 - 5;
    return (12 * n - 27) / 7;
}

long long turan_2c4_value(int n) {
    if (n < 4) throw std::invalid_argument("turan_2c4_value: require n >= 4");
    if (n % 7 == 0) return 19LL * n / 7 - 6;
    return (19LL * n - 34) / 7;
}

LinearForest h_linear_forest(int n, int n1, int n2) {
    if (n1 < n2 || n2 < 1) throw std::invalid_argument("h_linear_forest: require n1 >= n2 >= 1");
    if (n < n1 + 2 * n2 + 2) throw std::invalid_argument("h_linear_forest: require n >= n1 + 2*n2 + 2");
    int m = n - 2 - n1;
    int beta = m % n2 == 0 ? n2 : m % n2;
    int alpha = (m - beta) / n2;
    std::vector<int> parts{n1};
    for (int i = 0; i < alpha; ++i) parts.push_back(n2);
    parts.push_back(beta);
    return LinearForest::of(std::move(parts));
}

namespace {

void check(ConstructionReport& report, const std::string& name, bool ok) {
    report.checks.push_back({name, ok});
    if (!ok)
        throw std::logic_error("construction self-check failed: " + to_string(report.family.family) +
                               " / " + name);
}

bool edge_in_triangle(const Graph& g, int u, int v) { return g.codegree(u, v) > 0; }

// Candidate small extremal C_4-free outerplanar graphs: the outer cycle plus
// chord subsets, searched in lexicographic order; orders 4 and 5 have no
// such 2-connected witness and fall back to a pendant triangle / bowtie.
std::optional<Graph> chord_search(int m, int chords_wanted,
                                  bool (*extra_ok)(const Graph&, void*), void* ctx) {
    std::vector<std::pair<int, int>> chords;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (v - u != 1 && !(u == 0 && v == m - 1)) chords.push_back({u, v});
    int c = (int)chords.size();
    if (chords_wanted > c || chords_wanted < 0) return std::nullopt;
    std::vector<int> idx(chords_wanted);
    for (int i = 0; i < chords_wanted; ++i) idx[i] = i;
    while (true) {
        Graph g = build_basic(BasicKind::kCycle, m);
        for (int i : idx) g.add_edge(chords[i].first, chords[i].second);
        if (!contains_pattern(g, Pattern::cycle(4)) && is_outerplanar(g) &&
            (!extra_ok || extra_ok(g, ctx)))
            return g;
        // next combination
        int i = chords_wanted - 1;
        while (i >= 0 && idx[i] == c - chords_wanted + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[i];
        for (int j = i + 1; j < chords_wanted; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct SmallBase {
    Graph graph;
    std::pair<int, int> interface_edge;  // an outer edge, kept for chaining
};

// Extremal C_4-free outerplanar graph on m in [3,9] vertices.
SmallBase base_c4free_outerplanar(int m) {
    long long target = ex_op_formula(m, 4);
    if (m == 3) return {build_basic(BasicKind::kCycle, 3), {0, 1}};
    if (auto g = chord_search(m, (int)(target - m), nullptr, nullptr)) {
        // Outer-cycle edges stay on the outer boundary; (m-1, 0) is one.
        return {*g, {m - 1, 0}};
    }
    if (m == 4) {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(0, 3);
        return {g, {0, 3}};
    }
    if (m == 5) {
        Graph g(5);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(2, 4);
        g.add_edge(3, 4);
        return {g, {0, 1}};
    }
    throw std::logic_error("base_c4free_outerplanar: no witness found");
}

bool chain_link_ok(const Graph& g) {
    return is_connected(g) && is_outerplanar(g) && !contains_pattern(g, Pattern::cycle(4));
}

}  // namespace

Graph identify_edges(const Graph& a, std::pair<int, int> ea, const Graph& b, std::pair<int, int> eb,
                     std::vector<int>* b_map) {
    if (!a.has_edge(ea.first, ea.second) || !b.has_edge(eb.first, eb.second))
        throw std::invalid_argument("identify_edges: both interface pairs must be edges");
    int na = a.order(), nb = b.order();
    Graph g(na + nb - 2);
    std::vector<int> map(nb, -1);
    map[eb.first] = ea.first;
    map[eb.second] = ea.second;
    int next = na;
    for (int v = 0; v < nb; ++v)
        if (map[v] == -1) map[v] = next++;
    for (int u = 0; u < na; ++u)
        a.for_neighbors(u, [&](int v) { if (u < v) g.add_edge(u, v); });
    for (int u = 0; u < nb; ++u)
        b.for_neighbors(u, [&](int v) { if (u < v && !g.has_edge(map[u], map[v])) g.add_edge(map[u], map[v]); });
    if (g.size() != a.size() + b.size() - 1)
        throw std::logic_error("identify_edges: unexpected edge collision");
    if (b_map) *b_map = map;
    return g;
}

const ChainGadget& chain_gadget() {
    static const ChainGadget gadget = [] {
        // Exhaustive search over 9-cycles plus 4 chords: the 13-edge bound is
        // the extremal count, and a valid pick must chain cleanly both onto a
        // copy of itself and onto an edge lying in a triangle.
        struct Ctx {
            ChainGadget result;
            bool found = false;
        } ctx;
        auto try_candidate = [](const Graph& g, void* p) -> bool {
            auto* c = (Ctx*)p;
            std::vector<std::pair<int, int>> outer;
            for (int i = 0; i < 9; ++i) outer.push_back({i, (i + 1) % 9});
            for (auto in : outer) {
                if (edge_in_triangle(g, in.first, in.second)) continue;
                for (auto out : outer) {
                    if (out.first == in.first || out.first == in.second || out.second == in.first ||
                        out.second == in.second)
                        continue;
                    Graph two = identify_edges(g, out, g, in);
                    if (!chain_link_ok(two) || two.size() != 25 || two.order() != 16) continue;
                    Graph tri = identify_edges(build_basic(BasicKind::kComplete, 3), {0, 1}, g, in);
                    if (!chain_link_ok(tri)) continue;
                    c->result = {g, in, out, canonical_form(g)};
                    c->found = true;
                    return true;
                }
            }
            return false;
        };
        auto g = chord_search(9, 4, try_candidate, &ctx);
        if (!g || !ctx.found) throw std::logic_error("chain_gadget: search found no valid gadget");
        return ctx.result;
    }();
    return gadget;
}

ConstructionReport outerplanar_c4_extremal(int order) {
    if (order < 3 || order + 1 > kMaxVertices)
        throw std::invalid_argument("outerplanar_c4_extremal: order out of range");
    ConstructionReport report;
    report.family = {Family::kOpC4Extremal, order, 0};
    report.formula_value = ex_op_formula(order, 4);

    int b = (order - 3) % 7 + 1;
    int a = (order - 2 - b) / 7;

    SmallBase base = base_c4free_outerplanar(b + 2);
    Graph cur = base.graph;
    std::pair<int, int> exposed = base.interface_edge;
    const ChainGadget& gadget = chain_gadget();
    for (int i = 0; i < a; ++i) {
        long long prev_e = cur.size();
        int prev_n = cur.order();
        std::vector<int> gmap;
        cur = identify_edges(cur, exposed, gadget.graph, gadget.in_edge, &gmap);
        exposed = {gmap[gadget.out_edge.first], gmap[gadget.out_edge.second]};
        check(report, "link " + std::to_string(i + 1) + " valid", chain_link_ok(cur));
        check(report, "link " + std::to_string(i + 1) + " size",
              cur.order() == prev_n + 7 && cur.size() == prev_e + 12);
    }

    report.graph = cur;
    report.edge_count = cur.size();
    check(report, "order", cur.order() == order);
    check(report, "connected", is_connected(cur));
    check(report, "outerplanar", is_outerplanar(cur));
    check(report, "c4-free", !contains_pattern(cur, Pattern::cycle(4)));
    check(report, "edge formula", report.edge_count == *report.formula_value);
    check(report, "formula branches agree", *report.formula_value == ex_op_c4_alt(order));
    return report;
}

ConstructionReport turan_2c4_lower(int n) {
    if (n < 4 || n > kMaxVertices) throw std::invalid_argument("turan_2c4_lower: n out of range");
    ConstructionReport inner = outerplanar_c4_extremal(n - 1);
    ConstructionReport report;
    report.family = {Family::kTuran2C4, n, 0};
    report.formula_value = turan_2c4_value(n);
    report.graph = join(build_basic(BasicKind::kEmpty, 1), inner.graph);
    report.edge_count = report.graph.size();
    check(report, "planar", is_planar(report.graph).planar);
    check(report, "edge formula", report.edge_count == *report.formula_value);
    check(report, "edge decomposition", report.edge_count == ex_op_formula(n - 1, 4) + (n - 1));
    check(report, "2c4-free", !contains_pattern(report.graph, Pattern::disjoint_cycles(2, 4)));
    check(report, "quadrilateral apex", !quadrilateral_apex(report.graph).empty());
    return report;
}

ConstructionReport gstar_member(int n, const std::vector<int>& assignment) {
    if (n < 5) throw std::invalid_argument("gstar_member: require n >= 5");
    if ((int)assignment.size() != n - 5)
        throw std::invalid_argument("gstar_member: assignment must name n-5 pair choices");
    ConstructionReport report;
    report.family = {Family::kGstar2C, n, 0};
    report.formula_value = 2LL * n - 1;
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    for (int w : {3, 4})
        for (int t : {0, 1, 2}) g.add_edge(w, t);
    for (int i = 0; i < n - 5; ++i) {
        int skip = assignment[i];
        if (skip < 0 || skip > 2) throw std::invalid_argument("gstar_member: pair choice must be 0, 1 or 2");
        for (int t : {0, 1, 2})
            if (t != skip) g.add_edge(5 + i, t);
    }
    report.graph = g;
    report.edge_count = g.size();
    check(report, "edge formula", report.edge_count == *report.formula_value);
    check(report, "planar", is_planar(g).planar);
    check(report, "2C-free", !contains_pattern(g, Pattern::disjoint_any_cycles(2)));
    check(report, "family test", is_gstar_member(g));
    return report;
}

bool is_gstar_member(const Graph& g) {
    int n = g.order();
    if (n < 5) return false;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                int full = 0;
                bool ok = true;
                for (int v = 0; v < n && ok; ++v) {
                    if (v == a || v == b || v == c) continue;
                    int d = 0;
                    bool outside = false;
                    g.for_neighbors(v, [&](int u) {
                        ++d;
                        if (u != a && u != b && u != c) outside = true;
                    });
                    if (outside || d < 2 || d > 3) ok = false;
                    if (d == 3) ++full;
                }
                if (ok && full == 2) return true;
            }
        }
    }
    return false;
}

std::vector<std::string> gstar_all_classes(int n) {
    std::set<std::string> classes;
    std::vector<int> assignment(n - 5, 0);
    while (true) {
        classes.insert(canonical_form(gstar_member(n, assignment).graph));
        int i = 0;
        while (i < (int)assignment.size() && assignment[i] == 2) assignment[i++] = 0;
        if (i == (int)assignment.size()) break;
        ++assignment[i];
    }
    return {classes.begin(), classes.end()};
}

Graph gn_member(int n, const std::vector<std::pair<int, int>>& attachments) {
    if (n < 5) throw std::invalid_argument("gn_member: require n >= 5");
    if ((int)attachments.size() != n - 5)
        throw std::invalid_argument("gn_member: need n-5 attachments");
    Graph g = gstar_member(5, {}).graph;
    for (int i = 0; i < n - 5; ++i) {
        auto [x, y] = attachments[i];
        int cur = 5 + i;
        if (x < 0 || y < 0 || x >= cur || y >= cur || x == y)
            throw std::invalid_argument("gn_member: attachment names invalid vertices");
        Graph next(cur + 1);
        for (int u = 0; u < cur; ++u)
            g.for_neighbors(u, [&](int v) { if (u < v) next.add_edge(u, v); });
        next.add_edge(cur, x);
        next.add_edge(cur, y);
        if (!is_planar(next).planar)
            throw std::invalid_argument("gn_member: attachment " + std::to_string(i) + " breaks planarity");
        g = std::move(next);
    }
    return g;
}

ConstructionReport named_extremal(const FamilySpec& spec) {
    int n = spec.n, ell = spec.ell;
    ConstructionReport report;
    report.family = spec;
    switch (spec.family) {
        case Family::kK2N2: {
            if (n < 3 || n > kMaxVertices) throw std::invalid_argument("k2n2: require 3 <= n <= 512");
            report.graph = join(build_basic(BasicKind::kEmpty, 2), build_basic(BasicKind::kEmpty, n - 2));
            report.formula_value = 2LL * (n - 2);
            report.edge_count = report.graph.size();
            check(report, "edge formula", report.edge_count == *report.formula_value);
            check(report, "planar", is_planar(report.graph).planar);
            check(report, "c3-free", !contains_pattern(report.graph, Pattern::cycle(3)));
            break;
        }
        case Family::kJN: {
            if (n < 2 || n > kMaxVertices) throw std::invalid_argument("jn: require 2 <= n <= 512");
            Graph g(n);
            for (int v = 1; v < n; ++v) g.add_edge(0, v);
            for (int v = 1; v + 1 < n; v += 2) g.add_edge(v, v + 1);
            report.graph = g;
            report.formula_value = (long long)(n - 1) + (n - 1) / 2;
            report.edge_count = g.size();
            check(report, "edge formula", report.edge_count == *report.formula_value);
            check(report, "planar", is_planar(g).planar);
            check(report, "c4-free", !contains_pattern(g, Pattern::cycle(4)));
            break;
        }
        case Family::kDoubleWheel: {
            if (n < 5 || n > kMaxVertices) throw std::invalid_argument("double-wheel: require 5 <= n <= 512");
            report.graph = join(build_basic(BasicKind::kEmpty, 2), build_basic(BasicKind::kCycle, n - 2));
            report.formula_value = 3LL * n - 6;
            report.edge_count = report.graph.size();
            check(report, "edge formula", report.edge_count == *report.formula_value);
            check(report, "planar", is_planar(report.graph).planar);
            if (n <= 60)
                check(report, "3C-free", !contains_pattern(report.graph, Pattern::disjoint_any_cycles(3)));
            break;
        }
        case Family::kSpex2Cl: {
            if (ell < 3) throw std::invalid_argument("spex-2cl: require ell >= 3");
            LinearForest h = h_linear_forest(n, 2 * ell - 3, ell - 2);
            report.graph = join(build_basic(BasicKind::kComplete, 2), realize(h));
            report.edge_count = report.graph.size();
            check(report, "planar", is_planar(report.graph).planar);
            check(report, "2Cl-free (closed form)", joined_freeness(h, ell, FreenessMode::kDouble));
            if (n <= 40)
                check(report, "2Cl-free (search)",
                      !contains_pattern(report.graph, Pattern::disjoint_cycles(2, ell)));
            break;
        }
        case Family::kSpexCl: {
            if (ell < 5) throw std::invalid_argument("spex-cl: require ell >= 5");
            int n1 = (ell - 3 + 1) / 2, n2 = (ell - 3) / 2;
            LinearForest h = h_linear_forest(n, n1, n2);
            report.graph = join(build_basic(BasicKind::kComplete, 2), realize(h));
            report.edge_count = report.graph.size();
            check(report, "profile boundary", h.parts[0] + h.parts[1] == ell - 3);
            check(report, "planar", is_planar(report.graph).planar);
            check(report, "Cl-free (closed form)", joined_freeness(h, ell, FreenessMode::kSingle));
            if (n <= 40) check(report, "Cl-free (search)", !contains_pattern(report.graph, Pattern::cycle(ell)));
            break;
        }
        case Family::kK2P3Rest: {
            if (n < 5 || n > kMaxVertices) throw std::invalid_argument("k2p3rest: require 5 <= n <= 512");
            // P_3 u (n-5)K_1 directly; for n >= 7 this coincides with H(3,1).
            std::vector<int> parts{3};
            parts.insert(parts.end(), n - 5, 1);
            LinearForest h = LinearForest::of(std::move(parts));
            report.graph = join(build_basic(BasicKind::kComplete, 2), realize(h));
            report.formula_value = 2LL * n - 1;
            report.edge_count = report.graph.size();
            check(report, "edge formula", report.edge_count == *report.formula_value);
            check(report, "planar", is_planar(report.graph).planar);
            if (n <= 300)
                check(report, "2C-free", !contains_pattern(report.graph, Pattern::disjoint_any_cycles(2)));
            break;
        }
        case Family::kGstar2C:
            return gstar_member(n, std::vector<int>(std::max(0, n - 5), 0));
        case Family::kOpC4Extremal:
            return outerplanar_c4_extremal(n);
        case Family::kTuran2C4:
            return turan_2c4_lower(n);
    }
    return report;
}

}  // namespace planex
