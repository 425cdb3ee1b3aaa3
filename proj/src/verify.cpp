#include "planex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "planex/canonical.hpp"
#include "planex/constructions.hpp"
#include "planex/graph6.hpp"
#include "planex/patterns.hpp"
#include "planex/planarity.hpp"
#include "planex/search.hpp"
#include "planex/spectral.hpp"

namespace planex {

namespace {

struct Failure {
    std::ostringstream out;
    bool any = false;

    template <class... Args>
    void add(Args&&... args) {
        if (any) out << "; ";
        any = true;
        (out << ... << args);
    }
};

bool is_valid_cycle(const Graph& g, const std::vector<int>& c) {
    if (c.size() < 3) return false;
    std::set<int> seen(c.begin(), c.end());
    if (seen.size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

// Criterion 1: exhaustive planar Turan number of two disjoint cycles, with
// the witness sets matched against the pair-attachment family.
CriterionResult criterion_1(int n_max) {
    CriterionResult r{1, "planar Turan of 2 disjoint cycles, n=5..9", false, ""};
    Failure f;
    int hi = n_max > 0 ? std::min(n_max, 9) : 9;
    for (int n = 5; n <= hi; ++n) {
        SearchReport rep = turan_number(Scope::kPlanar, n, Pattern::disjoint_any_cycles(2));
        if (rep.optimum_edges != 2LL * n - 1)
            f.add("n=", n, ": optimum ", rep.optimum_edges, " != ", 2 * n - 1);
        std::vector<std::string> expect = gstar_all_classes(n);
        if (rep.witnesses != expect)
            f.add("n=", n, ": witness set (", rep.witnesses.size(), " classes) != expected family (",
                  expect.size(), ")");
    }
    r.passed = !f.any;
    r.detail = f.any ? f.out.str() : "value and witness family match for all n";
    return r;
}

// Criterion 2: outerplanar C4-free Turan numbers against the closed form,
// plus agreement of the two closed-form branch systems.
CriterionResult criterion_2(int n_max) {
    CriterionResult r{2, "outerplanar C4-free Turan vs closed form", false, ""};
    Failure f;
    int hi = n_max > 0 ? std::min(n_max, 10) : 10;
    for (int n = 4; n <= hi; ++n) {
        SearchReport rep = turan_number(Scope::kOuterplanar, n, Pattern::cycle(4));
        if (rep.optimum_edges != ex_op_formula(n, 4))
            f.add("n=", n, ": search ", rep.optimum_edges, " != formula ", ex_op_formula(n, 4));
    }
    for (int m = 4; m <= 300; ++m)
        if (ex_op_formula(m, 4) != ex_op_c4_alt(m))
            f.add("order ", m, ": branch arithmetic disagrees");
    r.passed = !f.any;
    r.detail = f.any ? f.out.str() : "search matches formula, branch systems agree to order 300";
    return r;
}

// Criterion 3: the apex-over-chained-gadget construction hits the closed
// form exactly; the above-capacity case is checked at the formula level.
CriterionResult criterion_3(int) {
    CriterionResult r{3, "2C4-free lower construction edge counts", false, ""};
    Failure f;
    for (int n : {14, 24, 35, 70}) {
        try {
            ConstructionReport rep = turan_2c4_lower(n);
            if (rep.edge_count != turan_2c4_value(n))
                f.add("n=", n, ": edges ", rep.edge_count, " != ", turan_2c4_value(n));
        } catch (const std::exception& e) {
            f.add("n=", n, ": ", e.what());
        }
    }
    if (ex_op_formula(2666, 4) + 2666 != 7233) f.add("n=2667: formula route != 7233");
    if (turan_2c4_value(2667) != 7233) f.add("n=2667: closed form != 7233");
    if (turan_2c4_value(70) != 184) f.add("n=70: closed form != 184");
    if (turan_2c4_value(24) != 60) f.add("n=24: closed form != 60");
    r.passed = !f.any;
    r.detail = f.any ? f.out.str() : "constructions exact at n in {14,24,35,70}; 2667 via formulas";
    return r;
}

// Criterion 4: rho(K_{2,n-2}) = sqrt(2n-4).
CriterionResult criterion_4(int) {
    CriterionResult r{4, "spectral identity rho(K_{2,n-2}) = sqrt(2n-4)", false, ""};
    Failure f;
    for (int n : {6, 20, 100, 400}) {
        Graph g = named_extremal({Family::kK2N2, n, 0}).graph;
        SpectralResult sr = spectral_radius(g);
        double want = std::sqrt(2.0 * n - 4.0);
        if (std::fabs(sr.rho - want) > 1e-9) f.add("n=", n, ": |rho - sqrt| = ", std::fabs(sr.rho - want));
        if (sr.residual > 1e-10) f.add("n=", n, ": residual ", sr.residual);
    }
    r.passed = !f.any;
    r.detail = f.any ? f.out.str() : "within 1e-9, residuals within 1e-10";
    return r;
}

// Criterion 5: the path-shift transformation strictly increases rho on a
// grid meeting the n >= 9*2^(s2+1)+3 threshold.
CriterionResult criterion_5(int) {
    CriterionResult r{5, "transformation gain positivity grid", false, ""};
    Failure f;
    struct Case {
        int s1, s2, n;
    };
    std::vector<Case> grid;
    for (int s1 : {1, 2, 3, 4, 5, 6})
        for (int n : {39, 60, 100}) grid.push_back({s1, 1, n});
    for (int s1 : {2, 3, 4, 5})
        for (int n : {75, 150}) grid.push_back({s1, 2, n});
    for (int s1 : {3, 4, 5}) grid.push_back({s1, 3, 147});
    grid.push_back({3, 3, 300});
    grid.push_back({5, 3, 300});
    grid.push_back({4, 4, 291});
    grid.push_back({5, 4, 300});
    int count = 0;
    for (const Case& c : grid) {
        if (c.n < 9 * (1 << (c.s2 + 1)) + 3) {
            f.add("case (", c.s1, ",", c.s2, ",", c.n, ") below the threshold");
            continue;
        }
        std::vector<int> parts{c.s1, c.s2};
        int rest = c.n - 2 - c.s1 - c.s2;
        parts.insert(parts.end(), rest, 1);
        TransformationGain gain = transformation_gain(LinearForest::of(parts), c.s1, c.s2);
        ++count;
        if (!(gain.delta > 1e-12))
            f.add("case (", c.s1, ",", c.s2, ",", c.n, "): delta = ", gain.delta);
    }
    if (count < 30) f.add("only ", count, " grid cases");
    r.passed = !f.any;
    std::ostringstream d;
    d << count << " cases, all gains > 1e-12";
    r.detail = f.any ? f.out.str() : d.str();
    return r;
}

// Criterion 6: Perron entries of K_2 + H stay in [2/rho, 2/rho + 6/rho^2],
// apexes at the maximum.
CriterionResult criterion_6(int) {
    CriterionResult r{6, "Perron entry bounds for K_2 + H", false, ""};
    Failure f;
    struct Case {
        int n1, n2;
    };
    for (Case c : {Case{3, 1}, Case{5, 2}, Case{2, 2}}) {
        for (int n : {200, 300}) {
            PerronProfile pp = perron_profile(h_linear_forest(n, c.n1, c.n2));
            if (!pp.rest_within_bounds)
                f.add("H(", c.n1, ",", c.n2, ") n=", n, ": entries [", pp.min_rest, ",", pp.max_rest,
                      "] outside [", pp.bound_lo, ",", pp.bound_hi, "]");
            if (!pp.apexes_are_max) f.add("H(", c.n1, ",", c.n2, ") n=", n, ": apex entries below max");
        }
    }
    r.passed = !f.any;
    r.detail = f.any ? f.out.str() : "all non-apex entries in bounds, apexes at 1";
    return r;
}

// Criterion 7: closed-form join freeness equals brute-force pattern search
// for every small linear forest with >= 2 parts.
CriterionResult criterion_7(int) {
    CriterionResult r{7, "join freeness closed form vs search", false, ""};
    Failure f;
    long long checked = 0;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            if (parts.size() < 2) return;
            LinearForest h{parts};
            Graph joined = join(build_basic(BasicKind::kComplete, 2), realize(h));
            for (int ell = 3; ell <= 8; ++ell) {
                bool closed = joined_freeness(h, ell, FreenessMode::kDouble);
                bool brute = !contains_pattern(joined, Pattern::disjoint_cycles(2, ell));
                ++checked;
                if (closed != brute) f.add("double ", to_string(h), " ell=", ell);
                if (ell >= 5) {
                    closed = joined_freeness(h, ell, FreenessMode::kSingle);
                    brute = !contains_pattern(joined, Pattern::cycle(ell));
                    ++checked;
                    if (closed != brute) f.add("single ", to_string(h), " ell=", ell);
                }
            }
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    for (int total = 2; total <= 12; ++total) rec(total, total);
    r.passed = !f.any;
    std::ostringstream d;
    d << checked << " (forest, ell, mode) checks, zero disagreements";
    r.detail = f.any ? f.out.str() : d.str();
    return r;
}

// Shared sweep for criteria 8 and 10: all planar graphs with min degree >= 3
// on up to 9 vertices.
const std::vector<Graph>& mindeg3_planar_graphs(int n_max) {
    static std::vector<Graph> cache;
    static int cached_max = -1;
    if (cached_max != n_max) {
        cache.clear();
        for (int n = 4; n <= n_max; ++n)
            enumerate(Scope::kPlanarMinDeg3, n, std::nullopt,
                      [&](const Graph& g, const std::string&) { cache.push_back(g); });
        cached_max = n_max;
    }
    return cache;
}

// Criterion 8: the two-disjoint-cycles dichotomy over the full sweep.
CriterionResult criterion_8(int n_max) {
    int hi = n_max > 0 ? std::min(n_max, 9) : 9;
    CriterionResult r{8, "two disjoint cycles dichotomy, planar mindeg 3, n<=9", false, ""};
    Failure f;
    long long witnesses = 0, certificates = 0;
    for (const Graph& g : mindeg3_planar_graphs(hi)) {
        int n = g.order();
        bool exceptional =
            (n == 5 && are_isomorphic(g, join(build_basic(BasicKind::kEmpty, 2), build_basic(BasicKind::kCycle, 3)))) ||
            are_isomorphic(g, join(build_basic(BasicKind::kEmpty, 1), build_basic(BasicKind::kCycle, n - 1)));
        TwoCyclesVerdict v = two_cycles_or_certificate(g);
        if (v.has_witness) {
            ++witnesses;
            std::set<int> c1(v.cycle1.begin(), v.cycle1.end());
            bool disjoint = std::none_of(v.cycle2.begin(), v.cycle2.end(),
                                         [&](int x) { return c1.count(x) > 0; });
            if (!is_valid_cycle(g, v.cycle1) || !is_valid_cycle(g, v.cycle2) || !disjoint)
                f.add("invalid witness on ", graph6_encode(g));
            if (exceptional) f.add("witness on exceptional graph ", graph6_encode(g));
        } else {
            ++certificates;
            if (!exceptional) f.add("certificate on non-exceptional graph ", graph6_encode(g));
        }
    }
    r.passed = !f.any;
    std::ostringstream d;
    d << witnesses << " witnesses, " << certificates << " certificates, all verified";
    r.detail = f.any ? f.out.str() : d.str();
    return r;
}

// Criterion 9: degree-2 growth members are free of two disjoint cycles
// exactly when the pair-attachment test recognizes them.
CriterionResult criterion_9(int n_max) {
    CriterionResult r{9, "degree-2 growth family freeness equivalence", false, ""};
    Failure f;
    int hi = n_max > 0 ? std::min(n_max, 10) : 10;
    long long members = 0;

    auto check_member = [&](const Graph& g) {
        ++members;
        bool free2c = !contains_pattern(g, Pattern::disjoint_any_cycles(2));
        bool in_family = is_gstar_member(g);
        if (free2c != in_family)
            f.add("n=", g.order(), " ", graph6_encode(g), ": free=", free2c, " family=", in_family);
    };

    // Exhaustive over attachment choices, one representative per isomorphism
    // class per level (the checked property is isomorphism-invariant).
    {
        std::map<std::string, Graph> level;
        Graph seed = gstar_member(5, {}).graph;
        level.emplace(canonical_form(seed), seed);
        for (const auto& [canon, g] : level) check_member(g);
        for (int cur = 5; cur < hi; ++cur) {
            std::map<std::string, Graph> next_level;
            for (const auto& [canon, g] : level) {
                for (int x = 0; x < cur; ++x) {
                    for (int y = x + 1; y < cur; ++y) {
                        Graph next(cur + 1);
                        for (int u = 0; u < cur; ++u)
                            g.for_neighbors(u, [&](int v) { if (u < v) next.add_edge(u, v); });
                        next.add_edge(cur, x);
                        next.add_edge(cur, y);
                        std::string key = canonical_form(next);
                        if (next_level.count(key)) continue;
                        if (!is_planar(next).planar) continue;
                        next_level.emplace(std::move(key), std::move(next));
                    }
                }
            }
            for (const auto& [canon, g] : next_level) check_member(g);
            level = std::move(next_level);
        }
    }

    // Seeded random sequences up to n = 14.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (int trial = 0; trial < 200 && !f.any; ++trial) {
        int n = 11 + (int)(rng() % 4);
        std::vector<std::pair<int, int>> att;
        for (int i = 0; i < n - 5; ++i) {
            int cur = 5 + i;
            att.push_back({0, 1});
            Graph probe(1);
            bool placed = false;
            for (int tries = 0; tries < 200 && !placed; ++tries) {
                int x = (int)(rng() % cur);
                int y = (int)(rng() % cur);
                if (x == y) continue;
                att.back() = {std::min(x, y), std::max(x, y)};
                try {
                    probe = gn_member(cur + 1, std::vector<std::pair<int, int>>(att.begin(), att.end()));
                    placed = true;
                } catch (const std::invalid_argument&) {
                }
            }
            if (!placed) {
                f.add("trial ", trial, ": no planar attachment found");
                break;
            }
        }
        if (f.any) break;
        Graph g = gn_member(n, att);
        ++members;
        bool free2c = !contains_pattern(g, Pattern::disjoint_any_cycles(2));
        bool in_family = is_gstar_member(g);
        if (free2c != in_family) f.add("random trial ", trial, ": free=", free2c, " family=", in_family);
    }

    r.passed = !f.any;
    std::ostringstream d;
    d << members << " members checked (exhaustive to n=" << hi << ", 200 seeded random to n=14)";
    r.detail = f.any ? f.out.str() : d.str();
    return r;
}

// Criterion 10: Euler and triangular-face identities over criterion 8's set.
CriterionResult criterion_10(int n_max) {
    int hi = n_max > 0 ? std::min(n_max, 9) : 9;
    CriterionResult r{10, "face identities over the mindeg-3 sweep", false, ""};
    Failure f;
    long long checked = 0;
    for (const Graph& g : mindeg3_planar_graphs(hi)) {
        PlanarityResult pr = is_planar(g);
        if (!pr.planar) {
            f.add("planarity flip on ", graph6_encode(g));
            continue;
        }
        const Embedding& emb = pr.embedding;
        long long e = g.size();
        if (emb.num_components == 1 && (long long)g.order() - 2 != e - (long long)emb.faces.size())
            f.add("Euler failure on ", graph6_encode(g));
        FaceCensus fc = face_census(emb);
        long long sum = 0;
        for (auto [size, count] : fc.f) sum += (long long)size * count;
        if (sum != 2 * e) f.add("face size sum != 2e on ", graph6_encode(g));
        long long f3 = fc.f.count(3) ? fc.f.at(3) : 0;
        if (3 * f3 != fc.e3 + fc.e33) f.add("3f3 != e3+e33 on ", graph6_encode(g));
        ++checked;
    }
    r.passed = !f.any;
    std::ostringstream d;
    d << checked << " embeddings, both identities exact";
    r.detail = f.any ? f.out.str() : d.str();
    return r;
}

// Criterion 11: restricted spectral argmax lands on the H(.,.) profiles and
// reproduces across runs.
CriterionResult criterion_11(int) {
    CriterionResult r{11, "restricted spex winners and reproducibility", false, ""};
    Failure f;
    struct Case {
        int n, ell;
        FreenessMode mode;
        const char* label;
    };
    for (Case c : {Case{60, 7, FreenessMode::kSingle, "(60, C7)"},
                   Case{40, 3, FreenessMode::kDouble, "(40, 2C3)"},
                   Case{30, 4, FreenessMode::kDouble, "(30, 2C4)"}}) {
        SearchReport a = linear_forest_spex(c.n, c.ell, c.mode);
        SearchReport b = linear_forest_spex(c.n, c.ell, c.mode);
        if (std::fabs(a.optimum_rho - b.optimum_rho) > 1e-8) f.add(c.label, ": rho not reproducible");
        if (a.witnesses != b.witnesses) f.add(c.label, ": witness sets differ across runs");
        if (!a.prediction_matched) {
            std::string got = a.forests.empty() ? "none" : to_string(a.forests[0]);
            f.add(c.label, ": winner ", got, " != predicted profile",
                  a.prediction ? " " + to_string(*a.prediction) : "");
        }
    }
    r.passed = !f.any;
    r.detail = f.any ? f.out.str() : "winners match predicted profiles; byte-stable across runs";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, int n_max) {
    std::vector<int> want = ids;
    if (want.empty())
        for (int i = 1; i <= 11; ++i) want.push_back(i);
    std::vector<CriterionResult> out;
    for (int id : want) {
        switch (id) {
            case 1: out.push_back(criterion_1(n_max)); break;
            case 2: out.push_back(criterion_2(n_max)); break;
            case 3: out.push_back(criterion_3(n_max)); break;
            case 4: out.push_back(criterion_4(n_max)); break;
            case 5: out.push_back(criterion_5(n_max)); break;
            case 6: out.push_back(criterion_6(n_max)); break;
            case 7: out.push_back(criterion_7(n_max)); break;
            case 8: out.push_back(criterion_8(n_max)); break;
            case 9: out.push_back(criterion_9(n_max)); break;
            case 10: out.push_back(criterion_10(n_max)); break;
            case 11: out.push_back(criterion_11(n_max)); break;
            default: out.push_back({id, "unknown criterion", false, "no such criterion"});
        }
    }
    return out;
}

std::vector<int> criteria_for_label(const std::string& label) {
    if (label == "1.4") return {1};
    if (label == "5.2" || label == "cor5.1") return {2};
    if (label == "1.5") return {3};
    if (label == "2.1" || label == "spectral") return {4};
    if (label == "3.2") return {5};
    if (label == "claim3.2" || label == "perron") return {6};
    if (label == "claim5.2" || label == "claim5.3" || label == "freeness") return {7};
    if (label == "4.3") return {8};
    if (label == "4.4") return {9};
    if (label == "faces") return {10};
    if (label == "1.2" || label == "1.3" || label == "1.1" || label == "spex") return {11};
    if (label == "all") return {};
    return {-1};
}

}  // namespace planex
