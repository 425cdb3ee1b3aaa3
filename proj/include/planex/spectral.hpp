#pragma once

#include <stdexcept>
#include <vector>

#include "planex/graph.hpp"

namespace planex {

struct SpectralOptions {
    double tol = 1e-10;
    long max_iterations = 1000000;
};

// Comparisons of spectral radii across graphs use this margin; smaller
// differences are reported as indistinguishable, never silently signed.
inline constexpr double kRhoCompareMargin = 1e-8;

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> x;  // max entry 1; zero off the achieving component
    double residual = 0.0;  // max |(Ax)_i - rho x_i|
    long iterations = 0;
    bool edgeless = false;

    // Index of the connected component whose spectral radius is reported
    // (disconnected input takes the max over components; x is supported
    // there and zero elsewhere).
    int component = 0;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adjacency spectral radius by power iteration from the all-ones vector.
// Convergence requires both successive estimates within tol and residual
// within tol; a stalled bipartite-type oscillation restarts on A + I.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});

// Perron diagnostics of K_2 + realize(h): apex entries and the range of the
// remaining entries against [2/rho, 2/rho + 6/rho^2].
struct PerronProfile {
    double rho = 0.0;
    double apex1 = 0.0, apex2 = 0.0;  // entries of the two join vertices
    double min_rest = 0.0, max_rest = 0.0;
    double bound_lo = 0.0, bound_hi = 0.0;
    bool rest_within_bounds = false;
    bool apexes_are_max = false;
};

PerronProfile perron_profile(const LinearForest& h, const SpectralOptions& opts = {});

// Moves one end vertex of the s2-part onto the s1-part: P_{s1} u P_{s2}
// becomes P_{s1+1} u P_{s2-1} (the s2-1 part vanishing when s2 = 1).
// Requires s1 >= s2 >= 1 and both parts present in h.
LinearForest transform(const LinearForest& h, int s1, int s2);

struct TransformationGain {
    double rho_before = 0.0;
    double rho_after = 0.0;
    double delta = 0.0;
    int sign = 0;  // +1 / -1 when |delta| >= margin, 0 when indistinguishable
};

// delta = rho(K_2 + transform(h)) - rho(K_2 + realize(h)).
TransformationGain transformation_gain(const LinearForest& h, int s1, int s2,
                                       const SpectralOptions& opts = {});

}  // namespace planex
