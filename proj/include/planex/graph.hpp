#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace planex {

// Hard capacity: per-vertex adjacency bitsets, graph6-serializable range.
inline constexpr int kMaxVertices = 512;

// Simple undirected graph on vertices 0..n-1. No self-loops, adjacency
// symmetric. Values are cheap to copy and treated as immutable once built;
// all library operations are pure functions returning fresh graphs.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), stride_((n + 63) / 64), bits_((std::size_t)n * (std::size_t)((n + 63) / 64), 0) {
        if (n < 0 || n > kMaxVertices) throw std::invalid_argument("Graph: order out of range 0..512");
    }

    int order() const { return n_; }

    long long size() const {
        long long twice = 0;
        for (std::uint64_t w : bits_) twice += __builtin_popcountll(w);
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[(std::size_t)u * stride_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        bits_[(std::size_t)u * stride_ + v / 64] |= 1ull << (v % 64);
        bits_[(std::size_t)v * stride_ + u / 64] |= 1ull << (u % 64);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        bits_[(std::size_t)u * stride_ + v / 64] &= ~(1ull << (v % 64));
        bits_[(std::size_t)v * stride_ + u / 64] &= ~(1ull << (u % 64));
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        const std::uint64_t* r = row(v);
        for (int w = 0; w < stride_; ++w) d += __builtin_popcountll(r[w]);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for_neighbors(v, [&](int u) { out.push_back(u); });
        return out;
    }

    template <class F>
    void for_neighbors(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < stride_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    // Number of common neighbors of u and v.
    int codegree(int u, int v) const {
        const std::uint64_t* ru = row(u);
        const std::uint64_t* rv = row(v);
        int d = 0;
        for (int w = 0; w < stride_; ++w) d += __builtin_popcountll(ru[w] & rv[w]);
        return d;
    }

    const std::uint64_t* row(int v) const { return bits_.data() + (std::size_t)v * stride_; }
    int row_words() const { return stride_; }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

enum class BasicKind { kPath, kCycle, kEmpty, kComplete };

// P_n, C_n, nK_1, K_n. CYCLE requires n >= 3.
Graph build_basic(BasicKind kind, int n);

// Disjoint union plus all cross edges; vertices of g1 come first.
Graph join(const Graph& g1, const Graph& g2);

// Vertex-disjoint union in list order; empty list gives the empty graph.
Graph disjoint_union(const std::vector<Graph>& gs);

// Unique maximal induced subgraph with minimum degree > d, obtained by
// repeatedly deleting vertices of degree <= d. Keeps original vertex count
// semantics out of the result: returns the core on its own 0..k-1 labels.
Graph degree_peel(const Graph& g, int d);

// Vertices of the degree-peel core as labels of g (ascending).
std::vector<int> degree_peel_vertices(const Graph& g, int d);

// Subgraph induced by `keep` (ascending order defines the new labels).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Relabel: result has edge (p[u], p[v]) for every edge (u,v) of g.
Graph relabel(const Graph& g, const std::vector<int>& p);

// Vertex sets of connected components, each ascending, ordered by minimum.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// True if g has no cycle.
bool is_forest(const Graph& g);

int min_degree(const Graph& g);

// Multiset of path orders n1 >= n2 >= ..., the H in K_2 + H.
struct LinearForest {
    std::vector<int> parts;  // sorted descending, every part >= 1

    int total() const {
        int t = 0;
        for (int p : parts) t += p;
        return t;
    }

    bool operator==(const LinearForest&) const = default;

    static LinearForest of(std::vector<int> parts);  // validates and sorts
};

// The linear forest as a graph: paths laid out part by part, longest first.
Graph realize(const LinearForest& h);

std::string to_string(const LinearForest& h);

}  // namespace planex
