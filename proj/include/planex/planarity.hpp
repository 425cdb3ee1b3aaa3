#pragma once

#include <map>
#include <string>
#include <vector>

#include "planex/graph.hpp"

namespace planex {

// Combinatorial embedding: rotation system plus the face walks it induces.
// Faces are vertex walks; every directed edge (u,v) lies on exactly one
// face. Components are embedded independently; edgeless components carry no
// faces (their single ambient face is implicit).
struct Embedding {
    int n = 0;
    std::vector<std::vector<int>> rotation;  // cyclic neighbor order per vertex
    std::vector<std::vector<int>> faces;     // closed walks, one entry per vertex visit
    std::vector<int> face_component;         // component id per face
    std::vector<int> component_of;           // component id per vertex
    std::vector<int> outer_face;             // per component: face index, -1 if edgeless
    int num_components = 0;

    int face_size(int f) const { return (int)faces[f].size(); }
};

struct PlanarityResult {
    bool planar = false;
    Embedding embedding;  // valid only when planar
};

// Embedding-producing planarity test (incremental face-addition). Quick
// rejects on the e <= 3n-6 bound, then embeds block by block.
PlanarityResult is_planar(const Graph& g);

// True iff g embeds with all vertices on the outer face. Quick-rejects on
// e <= 2n-3, then tests planarity of K_1 + g.
bool is_outerplanar(const Graph& g);

// Face statistics. Disconnected graphs are drawn side by side: the chosen
// outer faces of all components merge into one shared outer face whose size
// is the sum (only relevant when >= 2 components carry faces).
struct FaceCensus {
    std::map<int, long long> f;  // face size -> count, merged-outer convention
    long long face_count = 0;    // total faces after merging
    long long e3 = 0;            // edges on >= 1 triangular face
    long long e33 = 0;           // edges on two triangular faces
};

FaceCensus face_census(const Embedding& emb);

// Same census with a different outer-face choice per component (for the
// outer-face-independence checks). `outer` maps component -> face index.
FaceCensus face_census_with_outer(const Embedding& emb, const std::vector<int>& outer);

// "v: cyclic neighbor list" dump, one line per vertex.
std::string embedding_to_text(const Embedding& emb);

}  // namespace planex
