#include "planex/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "planex/canonical.hpp"
#include "planex/constructions.hpp"
#include "planex/graph6.hpp"
#include "planex/planarity.hpp"
#include "planex/spectral.hpp"

namespace planex {

std::string to_string(Scope s) {
    switch (s) {
        case Scope::kPlanar: return "planar";
        case Scope::kOuterplanar: return "outerplanar";
        case Scope::kPlanarMinDeg3: return "planar-mindeg3";
        case Scope::kK2JoinLinearForest: return "k2lf";
    }
    return "?";
}

namespace {

bool scope_accepts(Scope scope, const Graph& g) {
    switch (scope) {
        case Scope::kPlanar:
        case Scope::kPlanarMinDeg3:
            return is_planar(g).planar;
        case Scope::kOuterplanar:
            return is_outerplanar(g);
        case Scope::kK2JoinLinearForest:
            return false;  // handled by linear_forest_spex
    }
    return false;
}

long long scope_edge_bound(Scope scope, int n) {
    if (scope == Scope::kOuterplanar) return n >= 2 ? 2LL * n - 3 : 0;
    return n >= 3 ? 3LL * n - 6 : (n == 2 ? 1 : 0);
}

struct Child {
    std::string canon;
    Graph graph;
    bool accepted;
};

}  // namespace

void enumerate(Scope scope, int n, const std::optional<Pattern>& prune,
               const std::function<void(const Graph&, const std::string&)>& emit, int jobs) {
    if (scope == Scope::kK2JoinLinearForest)
        throw std::invalid_argument("enumerate: the join-family scope has no graph enumeration");
    if (n < 0) throw std::invalid_argument("enumerate: n >= 0");
    if ((scope == Scope::kPlanar || scope == Scope::kPlanarMinDeg3) && n > 10)
        throw std::invalid_argument("enumerate: planar scope capped at n <= 10");
    if (scope == Scope::kOuterplanar && n > 11)
        throw std::invalid_argument("enumerate: outerplanar scope capped at n <= 11");
    if (jobs < 1) jobs = 1;

    auto passes = [&](const Graph& g) {
        if (!scope_accepts(scope, g)) return false;
        if (prune && contains_pattern(g, *prune)) return false;
        return true;
    };
    auto emit_filter = [&](const Graph& g) {
        return scope != Scope::kPlanarMinDeg3 || (n >= 1 && min_degree(g) >= 3);
    };

    Graph empty = build_basic(BasicKind::kEmpty, std::max(n, 1));
    if (n == 0) empty = Graph(0);
    std::map<std::string, Graph> level;
    level.emplace(canonical_form(empty), empty);
    long long bound = scope_edge_bound(scope, n);

    while (!level.empty()) {
        for (const auto& [canon, g] : level)
            if (emit_filter(g)) emit(g, canon);
        if ((long long)level.begin()->second.size() >= bound) break;

        std::vector<const Graph*> parents;
        parents.reserve(level.size());
        for (const auto& [canon, g] : level) parents.push_back(&g);

        auto expand = [&](std::size_t begin, std::size_t end, std::vector<Child>& out,
                          std::map<std::string, char>& local_seen) {
            for (std::size_t p = begin; p < end; ++p) {
                const Graph& g = *parents[p];
                for (int u = 0; u < n; ++u) {
                    for (int v = u + 1; v < n; ++v) {
                        if (g.has_edge(u, v)) continue;
                        Graph child = g;
                        child.add_edge(u, v);
                        std::string key = canonical_form(child);
                        auto it = local_seen.find(key);
                        if (it != local_seen.end()) continue;
                        bool ok = passes(child);
                        local_seen.emplace(key, ok ? 1 : 0);
                        if (ok) out.push_back({std::move(key), std::move(child), true});
                    }
                }
            }
        };

        std::map<std::string, Graph> next;
        if (jobs == 1 || parents.size() < 64) {
            std::vector<Child> out;
            std::map<std::string, char> seen;
            expand(0, parents.size(), out, seen);
            for (auto& c : out) next.emplace(std::move(c.canon), std::move(c.graph));
        } else {
            std::vector<std::vector<Child>> outs(jobs);
            std::vector<std::map<std::string, char>> seens(jobs);
            std::vector<std::thread> threads;
            std::size_t chunk = (parents.size() + jobs - 1) / jobs;
            for (int t = 0; t < jobs; ++t) {
                std::size_t b = std::min(parents.size(), (std::size_t)t * chunk);
                std::size_t e = std::min(parents.size(), b + chunk);
                threads.emplace_back([&, b, e, t] { expand(b, e, outs[t], seens[t]); });
            }
            for (auto& th : threads) th.join();
            for (auto& out : outs)
                for (auto& c : out) next.emplace(std::move(c.canon), std::move(c.graph));
        }
        level = std::move(next);
    }
}

SearchReport turan_number(Scope scope, int n, const Pattern& pattern, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.scope = scope;
    report.n = n;
    report.pattern = pattern;
    report.objective = Objective::kEdges;
    enumerate(scope, n, pattern, [&](const Graph& g, const std::string& canon) {
        ++report.graphs_visited;
        long long e = g.size();
        if (e > report.optimum_edges) {
            report.optimum_edges = e;
            report.witnesses.clear();
        }
        if (e == report.optimum_edges) report.witnesses.push_back(canon);
    }, jobs);
    std::sort(report.witnesses.begin(), report.witnesses.end());
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

SearchReport spex_argmax(Scope scope, int n, const std::optional<Pattern>& pattern, double tol,
                         int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.scope = scope;
    report.n = n;
    report.pattern = pattern;
    report.objective = Objective::kRho;
    std::vector<std::pair<double, std::string>> scored;
    enumerate(scope, n, pattern, [&](const Graph& g, const std::string& canon) {
        ++report.graphs_visited;
        double rho = g.size() == 0 ? 0.0 : spectral_radius(g).rho;
        scored.push_back({rho, canon});
    }, jobs);
    for (const auto& [rho, canon] : scored) report.optimum_rho = std::max(report.optimum_rho, rho);
    for (const auto& [rho, canon] : scored)
        if (rho >= report.optimum_rho - tol) report.witnesses.push_back(canon);
    std::sort(report.witnesses.begin(), report.witnesses.end());
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

namespace {

// Partitions of `total` into parts bounded per the freeness closed form;
// cb(parts) returning false stops early (cap reached).
void feasible_forests(int total, int ell, FreenessMode mode,
                      const std::function<bool(const std::vector<int>&)>& cb) {
    // Single-path family is decided by the caller via direct search.
    int bound1 = mode == FreenessMode::kDouble ? 2 * ell - 3 : ell - 4;
    std::vector<int> parts;
    std::function<bool(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) return parts.size() >= 2 ? cb(parts) : true;
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            int next_bound;
            if (parts.empty()) {
                next_bound = mode == FreenessMode::kDouble ? ell - 2 : ell - 3 - p;
                if (next_bound < 1) continue;  // no valid second part
            } else {
                next_bound = p;
            }
            parts.push_back(p);
            bool go = rec(left - p, std::min(next_bound, p));
            parts.pop_back();
            if (!go) return false;
        }
        return true;
    };
    if (bound1 >= 1) rec(total, std::min(total, bound1));
}

}  // namespace

SearchReport linear_forest_spex(int n, int ell, FreenessMode mode, double tol, long long cap) {
    if (mode == FreenessMode::kSingle && ell < 5)
        throw std::invalid_argument("linear_forest_spex: single mode needs ell >= 5");
    if (mode == FreenessMode::kDouble && ell < 3)
        throw std::invalid_argument("linear_forest_spex: ell >= 3");
    if (n < 4 || n > 300) throw std::invalid_argument("linear_forest_spex: 4 <= n <= 300");
    auto t0 = std::chrono::steady_clock::now();

    SearchReport report;
    report.scope = Scope::kK2JoinLinearForest;
    report.n = n;
    report.objective = Objective::kRho;
    report.pattern = mode == FreenessMode::kDouble ? Pattern::disjoint_cycles(2, ell) : Pattern::cycle(ell);

    std::vector<LinearForest> candidates;
    // Single-path H: the closed form is stated only for >= 2 parts, so this
    // one is admitted by direct pattern search on the join.
    {
        LinearForest single{{n - 2}};
        Graph joined = join(build_basic(BasicKind::kComplete, 2), realize(single));
        if (!contains_pattern(joined, *report.pattern)) candidates.push_back(single);
    }
    feasible_forests(n - 2, ell, mode, [&](const std::vector<int>& parts) {
        if ((long long)candidates.size() >= cap) {
            report.capped = true;
            return false;
        }
        candidates.push_back(LinearForest{parts});
        return true;
    });

    double best = -1.0;
    std::vector<std::pair<double, LinearForest>> scored;
    for (const auto& h : candidates) {
        Graph joined = join(build_basic(BasicKind::kComplete, 2), realize(h));
        double rho = spectral_radius(joined).rho;
        scored.push_back({rho, h});
        best = std::max(best, rho);
    }
    report.optimum_rho = best;
    report.graphs_visited = (long long)candidates.size();
    for (const auto& [rho, h] : scored) {
        if (rho >= best - tol) {
            report.forests.push_back(h);
            report.witnesses.push_back(canonical_form(join(build_basic(BasicKind::kComplete, 2), realize(h))));
        }
    }
    std::sort(report.witnesses.begin(), report.witnesses.end());

    int n1 = mode == FreenessMode::kDouble ? 2 * ell - 3 : (ell - 2) / 2;
    int n2 = mode == FreenessMode::kDouble ? ell - 2 : (ell - 3) / 2;
    if (n2 >= 1 && n >= n1 + 2 * n2 + 2) {
        report.prediction = h_linear_forest(n, n1, n2);
        report.prediction_matched =
            report.forests.size() == 1 && report.forests[0] == *report.prediction;
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace planex
