#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "planex/canonical.hpp"
#include "planex/graph.hpp"

using namespace planex;

namespace {

Graph from_mask(int n, unsigned mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("relabelings collapse, distinct graphs separate") {
    Graph p3 = build_basic(BasicKind::kPath, 3);
    Graph p3b(3);
    p3b.add_edge(1, 0);
    p3b.add_edge(1, 2);
    Graph p3c(3);
    p3c.add_edge(0, 2);
    p3c.add_edge(2, 1);
    CHECK(canonical_form(p3) == canonical_form(p3b));
    CHECK(canonical_form(p3) == canonical_form(p3c));

    CHECK(canonical_form(build_basic(BasicKind::kCycle, 4)) !=
          canonical_form(build_basic(BasicKind::kPath, 4)));
}

TEST_CASE("all eleven classes on four vertices") {
    // Brute force over the 2^6 labeled graphs, bucketed by label.
    std::map<std::string, std::vector<unsigned>> buckets;
    for (unsigned mask = 0; mask < 64; ++mask) buckets[canonical_form(from_mask(4, mask))].push_back(mask);
    CHECK(buckets.size() == 11);
    // Same-bucket members are isomorphic, distinct buckets are not.
    std::vector<Graph> reps;
    for (const auto& [label, masks] : buckets) {
        Graph rep = from_mask(4, masks[0]);
        for (unsigned m : masks) CHECK(oracles::iso_brute(rep, from_mask(4, m)));
        reps.push_back(rep);
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK(!oracles::iso_brute(reps[i], reps[j]));
}

TEST_CASE("class counts match the labeled sweep up to n = 6") {
    const long long expected[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n) {
        std::set<std::string> classes;
        unsigned bits = (unsigned)(n * (n - 1) / 2);
        for (unsigned mask = 0; mask < (1u << bits); ++mask)
            classes.insert(canonical_form(from_mask(n, mask)));
        CHECK((long long)classes.size() == expected[n]);
    }
}

TEST_CASE("isomorphism invariance on random permutation pairs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + (int)(rng() % 10);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(canonical_form(g) == canonical_form(relabel(g, p)));
    }
}

TEST_CASE("highly symmetric graphs stay fast and consistent") {
    std::mt19937_64 rng(5);
    for (Graph g : {build_basic(BasicKind::kComplete, 9), build_basic(BasicKind::kEmpty, 10),
                    build_basic(BasicKind::kCycle, 12),
                    join(build_basic(BasicKind::kEmpty, 2), build_basic(BasicKind::kEmpty, 30))}) {
        std::vector<int> p(g.order());
        for (int i = 0; i < g.order(); ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(canonical_form(g) == canonical_form(relabel(g, p)));
    }
}

TEST_CASE("canonical relabel is a relabeling of the input") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + (int)(rng() % 9);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        Graph canon = canonical_relabel(g);
        CHECK(canon.size() == g.size());
        CHECK(oracles::iso_brute(canon, g));
    }
}
