#include <random>

#include "doctest.h"
#include "planex/canonical.hpp"
#include "planex/graph.hpp"
#include "planex/patterns.hpp"

using namespace planex;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() % 1000) < p * 1000) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("basic builders") {
    Graph p1 = build_basic(BasicKind::kPath, 1);
    CHECK(p1.order() == 1);
    CHECK(p1.size() == 0);

    Graph c5 = build_basic(BasicKind::kCycle, 5);
    CHECK(c5.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK(build_basic(BasicKind::kComplete, 4).size() == 6);
    CHECK(build_basic(BasicKind::kEmpty, 7).size() == 0);

    CHECK_THROWS_AS(build_basic(BasicKind::kCycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_basic(BasicKind::kPath, 0), std::invalid_argument);
}

TEST_CASE("join counts and structure") {
    Graph two_k1 = build_basic(BasicKind::kEmpty, 2);
    Graph c3 = build_basic(BasicKind::kCycle, 3);
    Graph j = join(two_k1, c3);
    CHECK(j.order() == 5);
    CHECK(j.size() == 9);  // 2n-1 at n=5

    Graph k2 = build_basic(BasicKind::kComplete, 2);
    Graph j2 = join(k2, build_basic(BasicKind::kEmpty, 4));
    CHECK(j2.order() == 6);
    CHECK(j2.size() == 9);

    Graph fan = join(build_basic(BasicKind::kEmpty, 1), build_basic(BasicKind::kPath, 4));
    CHECK(fan.size() == 7);
    CHECK(contains_pattern(fan, Pattern::cycle(4)));

    // Vertices of g1 come first.
    CHECK(j.has_edge(2, 3));
    CHECK(!j.has_edge(0, 1));
}

TEST_CASE("join edge count identity on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n1 = 1 + (int)(rng() % 8), n2 = 1 + (int)(rng() % 8);
        Graph a = random_graph(rng, n1, 0.4);
        Graph b = random_graph(rng, n2, 0.4);
        Graph j = join(a, b);
        CHECK(j.size() == a.size() + b.size() + (long long)n1 * n2);
    }
}

TEST_CASE("disjoint union") {
    Graph u = disjoint_union({build_basic(BasicKind::kPath, 3), build_basic(BasicKind::kPath, 1),
                              build_basic(BasicKind::kPath, 1)});
    CHECK(u.order() == 5);
    CHECK(u.size() == 2);

    Graph cc = disjoint_union({build_basic(BasicKind::kCycle, 3), build_basic(BasicKind::kCycle, 3)});
    CHECK(cc.order() == 6);
    CHECK(cc.size() == 6);

    Graph nothing = disjoint_union({});
    CHECK(nothing.order() == 0);
}

TEST_CASE("degree peel") {
    // Trees peel away entirely at d=2.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + (int)(rng() % 12);
        Graph tree(n);
        for (int v = 1; v < n; ++v) tree.add_edge(v, (int)(rng() % v));
        CHECK(degree_peel(tree, 2).order() == 0);
    }

    Graph k4 = build_basic(BasicKind::kComplete, 4);
    CHECK(degree_peel(k4, 2) == k4);

    // A double apex triangle with pair-attached extras cores back down to it.
    Graph member(8);
    member.add_edge(0, 1);
    member.add_edge(0, 2);
    member.add_edge(1, 2);
    for (int w : {3, 4})
        for (int t : {0, 1, 2}) member.add_edge(w, t);
    for (int v : {5, 6, 7}) {
        member.add_edge(v, 0);
        member.add_edge(v, 1);
    }
    Graph core = degree_peel(member, 2);
    Graph dat = join(build_basic(BasicKind::kEmpty, 2), build_basic(BasicKind::kCycle, 3));
    CHECK(are_isomorphic(core, dat));
}

TEST_CASE("degree peel is idempotent and order independent") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + (int)(rng() % 10);
        Graph g = random_graph(rng, n, 0.35);
        Graph core = degree_peel(g, 2);
        CHECK(degree_peel(core, 2) == core);

        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        Graph permuted = relabel(g, p);
        CHECK(canonical_form(degree_peel(permuted, 2)) == canonical_form(core));
    }
}

TEST_CASE("linear forest type") {
    LinearForest h = LinearForest::of({2, 5, 1, 2});
    CHECK(h.parts == std::vector<int>{5, 2, 2, 1});
    CHECK(h.total() == 10);
    CHECK_THROWS_AS(LinearForest::of({3, 0}), std::invalid_argument);

    Graph g = realize(h);
    CHECK(g.order() == 10);
    CHECK(g.size() == 10 - 4);
}

TEST_CASE("capacity limits") {
    CHECK_THROWS_AS(Graph(513), std::invalid_argument);
    Graph big(400);
    CHECK_THROWS_AS(join(big, Graph(200)), std::invalid_argument);
}
