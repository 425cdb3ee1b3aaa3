#include <random>

#include "doctest.h"
#include "planex/graph.hpp"
#include "planex/graph6.hpp"

using namespace planex;

TEST_CASE("K4 encodes to the frozen line") {
    // Hand-encoded per the format: n=4 -> 'C'; upper triangle all ones,
    // padded to 111111 -> '~'.
    CHECK(graph6_encode(build_basic(BasicKind::kComplete, 4)) == "C~");
    Graph back = graph6_decode("C~");
    CHECK(back == build_basic(BasicKind::kComplete, 4));
}

TEST_CASE("small frozen encodings") {
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_encode(build_basic(BasicKind::kEmpty, 5)) == "D??");
    CHECK(graph6_encode(build_basic(BasicKind::kPath, 2)) == "A_");
}

TEST_CASE("round trip on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = (int)(rng() % 51);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("round trip across the long-form boundary and at capacity") {
    std::mt19937_64 rng(100);
    for (int n : {62, 63, 64, 200, 512}) {
        Graph g(n);
        for (int i = 0; i < 3 * n; ++i) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u != v) g.add_edge(u, v);
        }
        std::string line = graph6_encode(g);
        if (n <= 62) CHECK(line[0] != '~');
        else CHECK(line[0] == '~');
        CHECK(graph6_decode(line) == g);
    }
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(graph6_decode("garbage\x01"), Graph6ParseError);
    try {
        graph6_decode("C");  // K4 header with no adjacency byte
        CHECK(false);
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset == 1);
    }
    try {
        graph6_decode(std::string("B") + char(1));
        CHECK(false);
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset == 1);
    }
    // Trailing junk and nonzero padding are rejected.
    CHECK_THROWS_AS(graph6_decode("C~~"), Graph6ParseError);
    CHECK_THROWS_AS(graph6_decode("A" + std::string(1, 'o')), Graph6ParseError);
}
