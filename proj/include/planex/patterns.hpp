#pragma once

#include <optional>
#include <vector>

#include "planex/graph.hpp"

namespace planex {

// Forbidden substructures: C_l, t vertex-disjoint C_l's, t vertex-disjoint
// cycles of any lengths, and K_1 + P_{k+1}.
enum class PatternTag { kCycle, kDisjointCycles, kDisjointAnyCycles, kApexPath };

struct Pattern {
    PatternTag tag;
    int ell = 0;  // cycle length (kCycle, kDisjointCycles), >= 3
    int t = 0;    // packing count (kDisjointCycles, kDisjointAnyCycles), >= 1
    int k = 0;    // path order is k+1 (kApexPath), k >= 2

    static Pattern cycle(int ell);
    static Pattern disjoint_cycles(int t, int ell);
    static Pattern disjoint_any_cycles(int t);
    static Pattern apex_path(int k);

    bool operator==(const Pattern&) const = default;
};

std::string to_string(const Pattern& p);

// Witness pieces: cycles as vertex lists; for kApexPath, {apex} then path.
struct PatternWitness {
    std::vector<std::vector<int>> pieces;
};

// Subgraph containment (not induced); disjoint variants require vertex-
// disjoint copies.
bool contains_pattern(const Graph& g, const Pattern& p, PatternWitness* witness = nullptr);

// Outcome of the two-disjoint-cycles dichotomy for planar graphs with
// minimum degree >= 3: either a verified witness pair, or the graph is one
// of the two exceptional families.
struct TwoCyclesVerdict {
    enum class Certificate { kNone, kDoubleApexTriangle, kWheel };
    bool has_witness = false;
    std::vector<int> cycle1, cycle2;  // valid when has_witness
    Certificate certificate = Certificate::kNone;
};

// Precondition: g planar with min degree >= 3 (violations throw). Returns
// the lexicographically least witness pair the search considers, or an
// isomorphism-verified certificate.
TwoCyclesVerdict two_cycles_or_certificate(const Graph& g);

// Intersection of the vertex sets of all quadrilaterals (C_4 subgraphs).
// A C_4-free graph yields the full vertex set (empty-family convention).
std::vector<int> quadrilateral_apex(const Graph& g);

// Component path orders when every component is a path; otherwise empty.
std::optional<LinearForest> linear_forest_profile(const Graph& g);

enum class FreenessMode { kSingle, kDouble };

// Closed-form freeness of K_2 + realize(h): kDouble answers 2C_l-freeness
// (n1 <= 2l-3 and n2 <= l-2), kSingle answers C_l-freeness (n1+n2 <= l-3,
// l >= 5). Requires h with at least two parts.
bool joined_freeness(const LinearForest& h, int ell, FreenessMode mode);

// Enumeration helpers shared with the search module. Callbacks returning
// true stop the enumeration. Cycles are reported with the minimum vertex
// first and the smaller neighbor second.
using CycleCallback = bool (*)(void*, const std::vector<int>&);
void for_each_cycle_of_length(const Graph& g, int len, const std::vector<char>& allowed, void* ctx,
                              CycleCallback cb);
void for_each_chordless_cycle(const Graph& g, const std::vector<char>& allowed, void* ctx,
                              CycleCallback cb);
bool has_cycle_within(const Graph& g, const std::vector<char>& allowed);

}  // namespace planex
