#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planex/graph.hpp"

namespace planex {

enum class Family {
    kK2N2,          // K_{2,n-2}
    kJN,            // star plus a maximum matching inside the independent set
    kDoubleWheel,   // 2K_1 + C_{n-2}
    kSpex2Cl,       // K_2 + H(2l-3, l-2)
    kSpexCl,        // K_2 + H(ceil((l-3)/2), floor((l-3)/2))
    kK2P3Rest,      // K_2 + (P_3 u (n-5)K_1)
    kGstar2C,       // double apex triangle plus pair-attached independent set
    kOpC4Extremal,  // chained C_4-free outerplanar extremal graph
    kTuran2C4,      // K_1 + the above on n-1 vertices
};

struct FamilySpec {
    Family family;
    int n = 0;
    int ell = 0;  // used by kSpex2Cl / kSpexCl
};

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);

// Every builder verifies rather than trusts: planarity, freeness and the
// edge formula are asserted at construction time, and a failing check throws.
struct ConstructionReport {
    Graph graph;
    FamilySpec family;
    long long edge_count = 0;
    std::optional<long long> formula_value;
    std::vector<std::pair<std::string, bool>> checks;
};

// Maximum size of an n-vertex C_k-free outerplanar graph:
// lambda = floor((kn-2k-1)/(k^2-2k-1)) + 1, then
// 2n - lambda + 2*floor(lambda/k) - (3 if k | lambda else 2).
long long ex_op_formula(int n, int k);

// The same quantity for k = 4 at order m, via the two-branch arithmetic in
// the n = m+1 variable: 12n/7 - 5 when 7 | n, floor((12n-27)/7) otherwise.
long long ex_op_c4_alt(int m);

// 19n/7 - 6 when 7 | n, floor((19n-34)/7) otherwise.
long long turan_2c4_value(int n);

// The linear forest on n-2 vertices with profile [n1, n2 x alpha, beta],
// where 1 <= beta <= n2 and n-2 = n1 + alpha*n2 + beta. Requires
// n1 >= n2 >= 1 and n >= n1 + 2*n2 + 2.
LinearForest h_linear_forest(int n, int n1, int n2);

ConstructionReport named_extremal(const FamilySpec& spec);

// Triangle {0,1,2}, apexes {3,4} joined to the whole triangle, and extra
// vertices 5..n-1 joined to a triangle pair: assignment value p in {0,1,2}
// attaches to the two triangle vertices other than p.
ConstructionReport gstar_member(int n, const std::vector<int>& assignment);

// True iff some triangle can serve as the core: all other vertices attach
// only to it, exactly two of them to all three of its vertices.
bool is_gstar_member(const Graph& g);

// All isomorphism classes over the 3^(n-5) pair assignments, as canonical
// graph6 lines, sorted.
std::vector<std::string> gstar_all_classes(int n);

// Grows 2K_1 + C_3 by degree-2 vertices; attachment i names two existing
// vertices of the partial graph on 5+i vertices. Planarity is checked after
// every addition; a violating attachment is invalid.
Graph gn_member(int n, const std::vector<std::pair<int, int>>& attachments);

// Connected C_4-free outerplanar graph on `order` vertices with exactly
// ex_op_formula(order, 4) edges, built by chaining searched gadgets.
ConstructionReport outerplanar_c4_extremal(int order);

// K_1 joined to the above on n-1 vertices: planar, 2C_4-free, edge count
// exactly turan_2c4_value(n).
ConstructionReport turan_2c4_lower(int n);

// The searched 9-vertex chaining gadget (cached after the first call).
struct ChainGadget {
    Graph graph;                   // 9 vertices, 13 edges
    std::pair<int, int> in_edge;   // triangle-free outer edge used to attach
    std::pair<int, int> out_edge;  // disjoint outer edge exposed for the next link
    std::string canonical;         // pin for reproducibility
};

const ChainGadget& chain_gadget();

// Glues b1->a1, b2->a2; remaining vertices of `b` get fresh labels after
// the vertices of `a`. Requires (a1,a2) an edge of a and (b1,b2) an edge of
// b. `b_map` (optional) receives the label of each b-vertex in the result.
Graph identify_edges(const Graph& a, std::pair<int, int> ea, const Graph& b, std::pair<int, int> eb,
                     std::vector<int>* b_map = nullptr);

}  // namespace planex
