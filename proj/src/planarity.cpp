#include "planex/planarity.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>

namespace planex {

namespace {

bool sorted_has(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Tarjan biconnected components; returns blocks as edge lists, in discovery
// order. Every edge lies in exactly one block.
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const Graph& g) {
    int n = g.order();
    std::vector<int> num(n, 0), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int counter = 0;

    struct Frame {
        int v;
        std::vector<int> nbrs;
        std::size_t next;
    };

    for (int root = 0; root < n; ++root) {
        if (num[root] != 0) continue;
        std::vector<Frame> stack;
        num[root] = low[root] = ++counter;
        stack.push_back({root, g.neighbors(root), 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.next < fr.nbrs.size()) {
                int w = fr.nbrs[fr.next++];
                if (num[w] == 0) {
                    estack.push_back({fr.v, w});
                    parent[w] = fr.v;
                    num[w] = low[w] = ++counter;
                    stack.push_back({w, g.neighbors(w), 0});
                } else if (w != parent[fr.v] && num[w] < num[fr.v]) {
                    estack.push_back({fr.v, w});
                    low[fr.v] = std::min(low[fr.v], num[w]);
                }
            } else {
                int w = fr.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int v = stack.back().v;
                    low[v] = std::min(low[v], low[w]);
                    if (low[w] >= num[v]) {
                        std::vector<std::pair<int, int>> block;
                        while (true) {
                            auto e = estack.back();
                            estack.pop_back();
                            block.push_back(e);
                            if (e.first == v && e.second == w) break;
                        }
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

struct FaceSet {
    std::vector<std::vector<int>> faces;
    std::vector<std::vector<std::uint64_t>> masks;  // vertex bitset per face
    int words;

    explicit FaceSet(int words_) : words(words_) {}

    void add(std::vector<int> walk) {
        std::vector<std::uint64_t> m(words, 0);
        for (int v : walk) m[v / 64] |= 1ull << (v % 64);
        faces.push_back(std::move(walk));
        masks.push_back(std::move(m));
    }

    bool contains_all(int f, const std::vector<int>& verts) const {
        for (int v : verts)
            if (!((masks[f][v / 64] >> (v % 64)) & 1)) return false;
        return true;
    }
};

// A cycle in a graph of minimum degree >= 2: walk never reusing the edge
// just traversed until a vertex repeats.
std::vector<int> some_cycle(const Graph& h) {
    int n = h.order();
    std::vector<int> pos_in_walk(n, -1);
    std::vector<int> walk{0};
    pos_in_walk[0] = 0;
    int prev = -1, cur = 0;
    while (true) {
        int next = -1;
        for (int u : h.neighbors(cur)) {
            if (u != prev) {
                next = u;
                break;
            }
        }
        assert(next != -1);
        if (pos_in_walk[next] != -1)
            return std::vector<int>(walk.begin() + pos_in_walk[next], walk.end());
        pos_in_walk[next] = (int)walk.size();
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
}

// Incremental face-addition embedding of one 2-connected block with >= 3
// vertices, on local labels. Returns the face walks, or nothing when the
// block (hence the graph) is nonplanar.
std::optional<std::vector<std::vector<int>>> embed_block(const Graph& h) {
    int n = h.order();
    long long e = h.size();
    if (n >= 3 && e > 3LL * n - 6) return std::nullopt;
    int words = (n + 63) / 64;

    std::vector<int> cycle = some_cycle(h);

    Graph embedded(n);
    std::vector<char> in_h(n, 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        in_h[cycle[i]] = 1;
        embedded.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    }

    FaceSet fs(words);
    std::vector<int> rev(cycle.rbegin(), cycle.rend());
    fs.add(cycle);
    fs.add(std::move(rev));

    long long embedded_edges = (long long)cycle.size();
    while (embedded_edges < e) {
        // Fragments: chords between H-vertices, then connected pieces of
        // h - V(H) together with their attachment vertices.
        struct Fragment {
            std::vector<int> attach;  // sorted H-vertices
            std::vector<int> verts;   // interior vertices (empty for a chord)
        };
        std::vector<Fragment> frags;
        for (int u = 0; u < n; ++u) {
            if (!in_h[u]) continue;
            h.for_neighbors(u, [&](int v) {
                if (u < v && in_h[v] && !embedded.has_edge(u, v)) frags.push_back({{u, v}, {}});
            });
        }
        {
            std::vector<int> comp(n, -1);
            for (int s = 0; s < n; ++s) {
                if (in_h[s] || comp[s] != -1) continue;
                Fragment fr;
                std::vector<int> stack{s};
                comp[s] = s;
                std::vector<char> attach_seen(n, 0);
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    fr.verts.push_back(v);
                    h.for_neighbors(v, [&](int u) {
                        if (in_h[u]) {
                            if (!attach_seen[u]) {
                                attach_seen[u] = 1;
                                fr.attach.push_back(u);
                            }
                        } else if (comp[u] == -1) {
                            comp[u] = s;
                            stack.push_back(u);
                        }
                    });
                }
                std::sort(fr.attach.begin(), fr.attach.end());
                std::sort(fr.verts.begin(), fr.verts.end());
                frags.push_back(std::move(fr));
            }
        }
        assert(!frags.empty());

        // A fragment with no admissible face kills planarity; one with a
        // unique admissible face is forced and goes first.
        int pick = -1, pick_face = -1;
        for (std::size_t i = 0; i < frags.size(); ++i) {
            int count = 0, first = -1;
            for (std::size_t f = 0; f < fs.faces.size(); ++f) {
                if (fs.contains_all((int)f, frags[i].attach)) {
                    if (first == -1) first = (int)f;
                    ++count;
                }
            }
            if (count == 0) return std::nullopt;
            if (count == 1 && pick == -1) {
                pick = (int)i;
                pick_face = first;
            }
        }
        if (pick == -1) {
            pick = 0;
            for (std::size_t f = 0; f < fs.faces.size(); ++f)
                if (fs.contains_all((int)f, frags[pick].attach)) {
                    pick_face = (int)f;
                    break;
                }
        }

        const Fragment& fr = frags[pick];
        // Alpha path between two attachments through the fragment interior.
        int a = fr.attach[0], b = fr.attach[1];
        std::vector<int> path;  // a ... b inclusive
        if (fr.verts.empty()) {
            path = {a, b};
        } else {
            std::vector<int> par(n, -2);
            std::vector<int> queue;
            std::size_t qi = 0;
            h.for_neighbors(a, [&](int u) {
                if (!in_h[u] && sorted_has(fr.verts, u) && par[u] == -2) {
                    par[u] = -1;
                    queue.push_back(u);
                }
            });
            int endv = -1;
            while (qi < queue.size() && endv == -1) {
                int v = queue[qi++];
                if (h.has_edge(v, b)) {
                    endv = v;
                    break;
                }
                h.for_neighbors(v, [&](int u) {
                    if (!in_h[u] && sorted_has(fr.verts, u) && par[u] == -2) {
                        par[u] = v;
                        queue.push_back(u);
                    }
                });
            }
            assert(endv != -1);
            std::vector<int> mid;
            for (int x = endv; x != -1; x = par[x]) mid.push_back(x);
            std::reverse(mid.begin(), mid.end());
            path.push_back(a);
            path.insert(path.end(), mid.begin(), mid.end());
            path.push_back(b);
        }

        // Split the face along the path.
        std::vector<int> face = fs.faces[pick_face];
        int ia = -1, ib = -1;
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (face[i] == a) ia = (int)i;
            if (face[i] == b) ib = (int)i;
        }
        assert(ia >= 0 && ib >= 0 && ia != ib);
        int m = (int)face.size();
        std::vector<int> face1, face2;
        for (int i = ia; i != ib; i = (i + 1) % m) face1.push_back(face[i]);
        face1.push_back(b);
        for (int i = (int)path.size() - 2; i >= 1; --i) face1.push_back(path[i]);
        for (int i = ib; i != ia; i = (i + 1) % m) face2.push_back(face[i]);
        face2.push_back(a);
        for (int i = 1; i + 1 < (int)path.size(); ++i) face2.push_back(path[i]);

        fs.faces[pick_face] = face1;
        std::vector<std::uint64_t> m1(words, 0);
        for (int v : face1) m1[v / 64] |= 1ull << (v % 64);
        fs.masks[pick_face] = std::move(m1);
        fs.add(std::move(face2));

        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            embedded.add_edge(path[i], path[i + 1]);
            ++embedded_edges;
            in_h[path[i]] = 1;
        }
        in_h[path.back()] = 1;
    }
    return fs.faces;
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
    int n = g.order();
    long long e = g.size();
    if (n >= 3 && e > 3LL * n - 6) return {false, {}};

    Embedding emb;
    emb.n = n;
    emb.rotation.assign(n, {});
    emb.component_of.assign(n, -1);

    auto comps = connected_components(g);
    emb.num_components = (int)comps.size();
    emb.outer_face.assign(comps.size(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) emb.component_of[v] = (int)c;

    // Embed block by block, splicing rotations at cut vertices.
    auto blocks = biconnected_blocks(g);
    for (const auto& block : blocks) {
        if (block.size() == 1) {
            auto [u, v] = block[0];
            emb.rotation[u].push_back(v);
            emb.rotation[v].push_back(u);
            continue;
        }
        std::vector<int> verts;
        for (auto [u, v] : block) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> pos(n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = (int)i;
        Graph local((int)verts.size());
        for (auto [u, v] : block) local.add_edge(pos[u], pos[v]);
        auto faces = embed_block(local);
        if (!faces) return {false, {}};
        // Rotation at v from the face successor map: in the walk ...x,v,y...
        // the successor of x around v is y.
        int ln = local.order();
        std::vector<std::vector<int>> succ(ln, std::vector<int>(ln, -1));
        for (const auto& face : *faces) {
            int m = (int)face.size();
            for (int i = 0; i < m; ++i) {
                int x = face[(i + m - 1) % m], v = face[i], y = face[(i + 1) % m];
                succ[v][x] = y;
            }
        }
        for (int v = 0; v < ln; ++v) {
            auto nbrs = local.neighbors(v);
            if (nbrs.empty()) continue;
            int start = nbrs[0];
            int w = start;
            do {
                emb.rotation[verts[v]].push_back(verts[w]);
                w = succ[v][w];
            } while (w != start && w != -1);
        }
    }

    // Trace faces per component from the merged rotation system.
    std::vector<std::vector<int>> rotpos(n);
    for (int v = 0; v < n; ++v) {
        rotpos[v].assign(n, -1);
        for (std::size_t i = 0; i < emb.rotation[v].size(); ++i) rotpos[v][emb.rotation[v][i]] = (int)i;
    }
    std::vector<std::vector<char>> used(n);
    for (int v = 0; v < n; ++v) used[v].assign(emb.rotation[v].size(), 0);
    for (int v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < emb.rotation[v].size(); ++i) {
            if (used[v][i]) continue;
            std::vector<int> walk;
            int cu = v;
            int ci = (int)i;
            while (!used[cu][ci]) {
                used[cu][ci] = 1;
                int cv = emb.rotation[cu][ci];
                walk.push_back(cu);
                int j = rotpos[cv][cu];
                ci = (int)((j + 1) % emb.rotation[cv].size());
                cu = cv;
            }
            emb.face_component.push_back(emb.component_of[v]);
            emb.faces.push_back(std::move(walk));
        }
    }

    // Euler per component (edgeless components carry no faces).
    std::vector<long long> ce(comps.size(), 0), cf(comps.size(), 0);
    for (int v = 0; v < n; ++v) ce[emb.component_of[v]] += (long long)emb.rotation[v].size();
    for (std::size_t f = 0; f < emb.faces.size(); ++f) cf[emb.face_component[f]]++;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        ce[c] /= 2;
        if (ce[c] == 0) continue;
        if ((long long)comps[c].size() - ce[c] + cf[c] != 2)
            throw std::logic_error("is_planar: embedding violates Euler's formula");
    }

    // Deterministic outer face per component: largest, ties to lowest index.
    for (std::size_t f = 0; f < emb.faces.size(); ++f) {
        int c = emb.face_component[f];
        if (emb.outer_face[c] == -1 || emb.faces[f].size() > emb.faces[emb.outer_face[c]].size())
            emb.outer_face[c] = (int)f;
    }
    return {true, std::move(emb)};
}

bool is_outerplanar(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    if (n >= 2 && g.size() > 2LL * n - 3) return false;
    if (n + 1 > kMaxVertices) throw std::invalid_argument("is_outerplanar: capacity overflow");
    return is_planar(join(build_basic(BasicKind::kEmpty, 1), g)).planar;
}

namespace {

FaceCensus census_impl(const Embedding& emb, const std::vector<int>& outer) {
    FaceCensus out;
    // Components whose designated outer faces merge into one shared face.
    std::vector<int> merged;
    for (std::size_t c = 0; c < outer.size(); ++c)
        if (outer[c] >= 0) merged.push_back(outer[c]);
    bool merge = merged.size() >= 2;

    std::vector<char> is_merged_outer(emb.faces.size(), 0);
    long long merged_size = 0;
    if (merge) {
        for (int f : merged) {
            is_merged_outer[f] = 1;
            merged_size += emb.face_size(f);
        }
    }
    for (std::size_t f = 0; f < emb.faces.size(); ++f) {
        if (is_merged_outer[f]) continue;
        out.f[emb.face_size((int)f)]++;
        out.face_count++;
    }
    if (merge) {
        out.f[(int)merged_size]++;
        out.face_count++;
    }

    // Triangular-face incidence per undirected edge; the shared outer face
    // never counts as triangular.
    std::map<std::pair<int, int>, int> tri_count;
    auto edge_key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
    for (std::size_t f = 0; f < emb.faces.size(); ++f) {
        if (is_merged_outer[f] || emb.face_size((int)f) != 3) continue;
        const auto& walk = emb.faces[f];
        for (int i = 0; i < 3; ++i) tri_count[edge_key(walk[i], walk[(i + 1) % 3])]++;
    }
    for (auto& [key, cnt] : tri_count) {
        (void)key;
        if (cnt >= 1) out.e3++;
        if (cnt == 2) out.e33++;
    }
    return out;
}

}  // namespace

FaceCensus face_census(const Embedding& emb) { return census_impl(emb, emb.outer_face); }

FaceCensus face_census_with_outer(const Embedding& emb, const std::vector<int>& outer) {
    return census_impl(emb, outer);
}

std::string embedding_to_text(const Embedding& emb) {
    std::string out;
    for (int v = 0; v < emb.n; ++v) {
        out += std::to_string(v) + ":";
        for (int u : emb.rotation[v]) out += " " + std::to_string(u);
        out += "\n";
    }
    return out;
}

}  // namespace planex
