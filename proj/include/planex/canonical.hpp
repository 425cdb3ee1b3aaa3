#pragma once

#include <string>
#include <vector>

#include "planex/graph.hpp"

namespace planex {

// Canonical vertex order: position i holds the original vertex placed at
// canonical label i. Equitable-refinement search with backtracking and
// automorphism pruning; exact at every order up to capacity.
std::vector<int> canonical_order(const Graph& g);

// g relabeled into canonical form; isomorphic graphs map to equal values.
Graph canonical_relabel(const Graph& g);

// Canonical label string (the graph6 line of the canonical relabeling).
// Two graphs get equal labels iff they are isomorphic.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace planex
