#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planex/graph.hpp"
#include "planex/patterns.hpp"

namespace planex {

enum class Scope { kPlanar, kOuterplanar, kPlanarMinDeg3, kK2JoinLinearForest };
enum class Objective { kEdges, kRho };

std::string to_string(Scope s);

struct SearchReport {
    Scope scope;
    int n = 0;
    std::optional<Pattern> pattern;
    Objective objective = Objective::kEdges;
    long long optimum_edges = -1;
    double optimum_rho = 0.0;
    std::vector<std::string> witnesses;      // canonical graph6, sorted
    std::vector<LinearForest> forests;       // kK2JoinLinearForest winners
    long long graphs_visited = 0;
    double elapsed_seconds = 0.0;
    bool capped = false;                     // candidate cap hit: partial search
    bool prediction_matched = false;         // restricted spex: winner equals the H(.,.) profile
    std::optional<LinearForest> prediction;
};

// One representative per isomorphism class of scope-valid graphs on exactly
// n vertices, generated by edge augmentation with isomorphism rejection,
// in deterministic order (by edge count, then canonical label). The prune
// pattern discards any graph containing it together with its supergraphs
// (pattern containment is monotone under edge addition). kPlanarMinDeg3
// enumerates planar graphs and emits only those with min degree >= 3.
void enumerate(Scope scope, int n, const std::optional<Pattern>& prune,
               const std::function<void(const Graph&, const std::string&)>& emit, int jobs = 1);

// Exact maximum edge count over pattern-free scope members, with every
// extremal witness (canonical, deduplicated).
SearchReport turan_number(Scope scope, int n, const Pattern& pattern, int jobs = 1);

// All graphs within tol of the maximum spectral radius over pattern-free
// scope members; rho of a disconnected graph is the max over components.
SearchReport spex_argmax(Scope scope, int n, const std::optional<Pattern>& pattern, double tol,
                         int jobs = 1);

// Restricted argmax over K_2 + H for linear forests H on n-2 vertices whose
// join is pattern-free: kDouble forbids 2C_ell, kSingle forbids C_ell.
// Feasibility is decided by the closed form for H with >= 2 parts and by
// direct search for the single-path H. Candidates beyond `cap` set the
// partial-search flag.
SearchReport linear_forest_spex(int n, int ell, FreenessMode mode, double tol = 1e-8,
                                long long cap = 1000000);

}  // namespace planex
