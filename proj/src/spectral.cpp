#include "planex/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace planex {

namespace {

struct ComponentIteration {
    double rho = 0.0;
    std::vector<double> x;  // local, max entry 1
    double residual = 0.0;
    long iterations = 0;
};

// Power iteration on one connected component with >= 1 edge, in local labels.
// The all-ones start has positive Perron overlap. Plain A can stall on
// bipartite spectra (+-rho pair); on a detected period-2 stall the iteration
// restarts on A + I, whose Perron root is strictly dominant in modulus.
ComponentIteration iterate_component(const Graph& g, const SpectralOptions& opts) {
    int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

    std::vector<double> x(n, 1.0 / std::sqrt((double)n)), y(n, 0.0);
    double shift = 0.0;
    double prev = -1.0;
    long used = 0;
    int stall = 0;

    while (used < opts.max_iterations) {
        ++used;
        for (int v = 0; v < n; ++v) {
            double s = shift * x[v];
            for (int u : adj[v]) s += x[u];
            y[v] = s;
        }
        double rayleigh = 0.0, norm2 = 0.0;
        for (int v = 0; v < n; ++v) {
            rayleigh += x[v] * y[v];
            norm2 += x[v] * x[v];
        }
        rayleigh /= norm2;  // estimate of rho + shift
        double rho_est = rayleigh - shift;

        // Residual in the max-entry-1 normalization used for output.
        double xmax = 0.0;
        for (double v : x) xmax = std::max(xmax, std::fabs(v));
        double res = 0.0;
        for (int v = 0; v < n; ++v) res = std::max(res, std::fabs((y[v] - shift * x[v]) - rho_est * x[v]));
        res /= xmax;

        if (std::fabs(rho_est - prev) < opts.tol && res < opts.tol) {
            ComponentIteration out;
            out.rho = rho_est;
            out.iterations = used;
            out.residual = res;
            out.x = x;
            double mx = *std::max_element(out.x.begin(), out.x.end());
            for (double& v : out.x) v /= mx;
            return out;
        }

        // On bipartite spectra the Rayleigh estimate settles on a wrong value
        // while the residual stays large; switch to the shifted matrix then.
        if (shift == 0.0) {
            if (std::fabs(rho_est - prev) < opts.tol && res >= opts.tol) {
                if (++stall >= 32) {
                    shift = 1.0;
                    stall = 0;
                    prev = -1.0;
                    continue;
                }
            } else {
                stall = 0;
            }
        }
        prev = rho_est;

        double ynorm = 0.0;
        for (double v : y) ynorm += v * v;
        ynorm = std::sqrt(ynorm);
        for (int v = 0; v < n; ++v) x[v] = y[v] / ynorm;
    }
    throw NoConvergence("spectral_radius: power iteration did not converge within the iteration cap");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts) {
    SpectralResult out;
    int n = g.order();
    out.x.assign(n, 0.0);
    if (g.size() == 0) {
        out.edgeless = true;
        return out;
    }
    auto comps = connected_components(g);
    double best = -1.0;
    int best_comp = -1;
    ComponentIteration best_it;
    std::vector<int> best_verts;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& verts = comps[c];
        Graph sub = induced_subgraph(g, verts);
        if (sub.size() == 0) continue;
        ComponentIteration it = iterate_component(sub, opts);
        if (it.rho > best) {
            best = it.rho;
            best_comp = (int)c;
            best_it = std::move(it);
            best_verts = verts;
        }
    }
    out.rho = best;
    out.component = best_comp;
    out.residual = best_it.residual;
    out.iterations = best_it.iterations;
    for (std::size_t i = 0; i < best_verts.size(); ++i) out.x[best_verts[i]] = best_it.x[i];
    return out;
}

PerronProfile perron_profile(const LinearForest& h, const SpectralOptions& opts) {
    Graph joined = join(build_basic(BasicKind::kComplete, 2), realize(h));
    SpectralResult sr = spectral_radius(joined, opts);
    PerronProfile out;
    out.rho = sr.rho;
    out.apex1 = sr.x[0];
    out.apex2 = sr.x[1];
    out.bound_lo = 2.0 / sr.rho;
    out.bound_hi = 2.0 / sr.rho + 6.0 / (sr.rho * sr.rho);
    out.min_rest = 2.0;
    out.max_rest = 0.0;
    for (int v = 2; v < joined.order(); ++v) {
        out.min_rest = std::min(out.min_rest, sr.x[v]);
        out.max_rest = std::max(out.max_rest, sr.x[v]);
    }
    // Entry comparisons allow iteration-tolerance slack.
    double slack = 64.0 * opts.tol;
    out.rest_within_bounds = out.min_rest >= out.bound_lo - slack && out.max_rest <= out.bound_hi + slack;
    out.apexes_are_max = out.apex1 >= 1.0 - slack && out.apex2 >= 1.0 - slack;
    return out;
}

LinearForest transform(const LinearForest& h, int s1, int s2) {
    if (s1 < s2 || s2 < 1) throw std::invalid_argument("transform: require s1 >= s2 >= 1");
    std::vector<int> parts = h.parts;
    auto take = [&parts](int value) {
        auto it = std::find(parts.begin(), parts.end(), value);
        if (it == parts.end()) throw std::invalid_argument("transform: part not present");
        parts.erase(it);
    };
    take(s1);
    take(s2);
    parts.push_back(s1 + 1);
    if (s2 - 1 >= 1) parts.push_back(s2 - 1);
    return LinearForest::of(std::move(parts));
}

TransformationGain transformation_gain(const LinearForest& h, int s1, int s2,
                                       const SpectralOptions& opts) {
    LinearForest moved = transform(h, s1, s2);
    Graph before = join(build_basic(BasicKind::kComplete, 2), realize(h));
    Graph after = join(build_basic(BasicKind::kComplete, 2), realize(moved));
    TransformationGain out;
    out.rho_before = spectral_radius(before, opts).rho;
    out.rho_after = spectral_radius(after, opts).rho;
    out.delta = out.rho_after - out.rho_before;
    if (out.delta >= kRhoCompareMargin)
        out.sign = 1;
    else if (out.delta <= -kRhoCompareMargin)
        out.sign = -1;
    return out;
}

}  // namespace planex
