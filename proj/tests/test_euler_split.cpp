#include "doctest.h"
#include "nsd/euler_split.hpp"
#include "nsd/graph.hpp"
#include "testutil.hpp"

using namespace nsd;

namespace {

// Observation-style bounds: d_i(v) >= floor(d/2) everywhere except the listed
// exceptional vertices, which get exactly ceil((d+1)/2) / floor((d-1)/2);
// at most one exception per component.
void check_split(const Graph& g, const BalancedSplit& s) {
    std::vector<char> exceptional(g.vertex_count(), 0);
    for (int v : s.exceptional) exceptional[v] = 1;

    auto comp = g.component_ids();
    std::vector<int> per_comp(g.vertex_count(), 0);
    for (int v : s.exceptional) {
        ++per_comp[comp[v]];
        CHECK(per_comp[comp[v]] <= 1);
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        int d1 = degree_on_side(g, s.bipartition, v, Side::one);
        int d2 = degree_on_side(g, s.bipartition, v, Side::two);
        CHECK(d1 + d2 == d);
        if (exceptional[v]) {
            CHECK(d1 == (d + 2) / 2);
            CHECK(d2 == (d - 1) / 2);
        } else {
            CHECK(std::min(d1, d2) >= d / 2);
        }
    }
}

} // namespace

TEST_CASE("four-cycle splits into two perfect matchings") {
    Graph g = testutil::cycle(4);
    BalancedSplit s = balanced_split(g);
    check_split(g, s);
    CHECK(s.exceptional.empty());
    for (int v = 0; v < 4; ++v) {
        CHECK(degree_on_side(g, s.bipartition, v, Side::one) == 1);
        CHECK(degree_on_side(g, s.bipartition, v, Side::two) == 1);
    }
}

TEST_CASE("single edge lands on one side, bound vacuous") {
    Graph g = generate_complete(2);
    BalancedSplit s = balanced_split(g);
    check_split(g, s);
    CHECK(s.exceptional.empty()); // odd degrees go through the auxiliary vertex
}

TEST_CASE("K5 splits 2/2 at every vertex") {
    Graph g = generate_complete(5);
    BalancedSplit s = balanced_split(g);
    check_split(g, s);
    CHECK(s.exceptional.empty()); // 10 edges, even tour
    for (int v = 0; v < 5; ++v)
        CHECK(degree_on_side(g, s.bipartition, v, Side::one) == 2);
}

TEST_CASE("triangle has one exceptional vertex") {
    // all degrees even, 3 edges: the lowest-id minimum-degree vertex starts the
    // tour and carries the imbalance
    Graph g = generate_complete(3);
    BalancedSplit s = balanced_split(g);
    check_split(g, s);
    REQUIRE(s.exceptional.size() == 1);
    CHECK(s.exceptional[0] == 0);
    CHECK(degree_on_side(g, s.bipartition, 0, Side::one) == 2);
    CHECK(degree_on_side(g, s.bipartition, 0, Side::two) == 0);
}

TEST_CASE("star centre splits 2/1") {
    Graph g = testutil::star(3);
    BalancedSplit s = balanced_split(g);
    check_split(g, s);
    int d1 = degree_on_side(g, s.bipartition, 0, Side::one);
    int d2 = degree_on_side(g, s.bipartition, 0, Side::two);
    CHECK(std::max(d1, d2) == 2);
    CHECK(std::min(d1, d2) == 1);
    CHECK(s.exceptional.empty());
}

TEST_CASE("mixed odd and even components") {
    // triangle (even degrees) + path (odd ends) + isolated vertex
    Graph g = load_edge_list("8 5\n0 1\n1 2\n0 2\n3 4\n4 5\n");
    BalancedSplit s = balanced_split(g);
    check_split(g, s);
}

TEST_CASE("empty and edgeless graphs") {
    Graph none;
    BalancedSplit s0 = balanced_split(none);
    CHECK(s0.exceptional.empty());
    Graph g(5);
    BalancedSplit s1 = balanced_split(g);
    CHECK(s1.exceptional.empty());
}

TEST_CASE("split is deterministic") {
    Graph g = generate_gnp(40, 0.3, 17);
    BalancedSplit a = balanced_split(g);
    BalancedSplit b = balanced_split(g);
    CHECK(a.bipartition.side == b.bipartition.side);
    CHECK(a.exceptional == b.exceptional);
}

TEST_CASE("placement tags read euler") {
    Graph g = testutil::cycle(6);
    BalancedSplit s = balanced_split(g);
    for (int e = 0; e < g.edge_count(); ++e)
        CHECK(s.bipartition.placed_by[e] == Placement::euler);
}

TEST_CASE("property: 1000 random graphs obey the balanced-split bounds") {
    uint64_t seed = 0;
    for (double p : {0.1, 0.3, 0.5}) {
        for (int rep = 0; rep < 334; ++rep) {
            int n = 2 + static_cast<int>(seed % 59);
            Graph g = generate_gnp(n, p, 1000 + seed);
            check_split(g, balanced_split(g));
            ++seed;
        }
    }
}
