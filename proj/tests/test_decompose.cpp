#include <set>

#include "doctest.h"
#include "nsd/decompose.hpp"
#include "nsd/errors.hpp"
#include "nsd/graph.hpp"
#include "nsd/lll.hpp"
#include "testutil.hpp"

using namespace nsd;

namespace {

PairAssignment uniform_pa(int n, int c1, int c2, int range) {
    PairAssignment pa;
    pa.c1.assign(n, c1);
    pa.c2.assign(n, c2);
    pa.range.assign(n, range);
    return pa;
}

std::vector<int> all_edges(const Graph& g) {
    std::vector<int> ids(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) ids[e] = e;
    return ids;
}

// routing by rules 1-4 alone, for the pair-only invariant
int route_side(int c1u, int c2u, int c1v, int c2v) {
    bool eq1 = c1u == c1v, eq2 = c2u == c2v;
    if (eq1 && eq2) return 0; // same pair: not routed by these rules
    if (eq1) return 2;
    if (eq2) return 1;
    return (c1u + c2u + c1v + c2v) % 2 == 1 ? 1 : 2;
}

} // namespace

TEST_CASE("far edges: regular graphs have none") {
    Graph g = generate_complete(7);
    FarSplit fs = split_far_edges(g);
    CHECK(fs.far_edges.empty());
    CHECK(static_cast<int>(fs.close_edges.size()) == g.edge_count());
}

TEST_CASE("far edges: star K_{1,5} is all far") {
    Graph g = testutil::star(5);
    FarSplit fs = split_far_edges(g);
    CHECK(static_cast<int>(fs.far_edges.size()) == 5);
    CHECK(fs.close_edges.empty());
}

TEST_CASE("far edges: P4 has none") {
    Graph g = testutil::path(4);
    FarSplit fs = split_far_edges(g);
    CHECK(fs.far_edges.empty());
}

TEST_CASE("pair range formula") {
    CHECK(pair_range_for_degree(1000000, {9, 20}, 18) == 1024);
    CHECK(pair_range_for_degree(960, {9, 20}, 18) == 1);    // boundary, single pair
    CHECK(pair_range_for_degree(96, {1, 2}, 1) == 2);
    CHECK_THROWS_AS(pair_range_for_degree(959, {9, 20}, 18), std::invalid_argument);
}

TEST_CASE("pair range bounds: q d / 24t >= range > q d / 48t") {
    Rng rng(404);
    Ratio q{9, 20};
    for (int rep = 0; rep < 500; ++rep) {
        int t = 1 + static_cast<int>(rng.below(20));
        long long d = 24LL * t * q.den / q.num + static_cast<long long>(rng.below(2000000));
        long long r = pair_range_for_degree(d, q, t);
        CHECK(r * 24 * t * q.den <= q.num * d);      // r <= q d / 24t
        CHECK(2 * r * 24 * t * q.den > q.num * d);   // 2r > q d / 24t, i.e. r > q d / 48t
    }
}

TEST_CASE("pair ranges of close-degree endpoints differ by at most a factor two") {
    Rng rng(405);
    Ratio q{9, 20};
    int t = 3;
    for (int rep = 0; rep < 500; ++rep) {
        long long dv = 2000 + static_cast<long long>(rng.below(100000));
        // d(u) within [dv/2, 2dv]
        long long du = dv / 2 + static_cast<long long>(rng.below(2 * dv - dv / 2 + 1));
        long long rv = pair_range_for_degree(dv, q, t);
        long long ru = pair_range_for_degree(du, q, t);
        bool close = ru == rv || 2 * ru == rv || ru == 2 * rv;
        CHECK(close);
    }
}

TEST_CASE("compute_pair_ranges names the failing vertex") {
    Graph g = testutil::star(3); // leaves have degree 1
    try {
        compute_pair_ranges(g, {9, 20}, 18);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("vertex") != std::string::npos);
    }
}

TEST_CASE("rules route single edges as specified") {
    Graph g = generate_complete(2);
    auto ids = all_edges(g);

    struct Case {
        int c1u, c2u, c1v, c2v;
        Side want;
        Placement rule;
    };
    // range 2 at both ends
    for (const Case& c : {
             Case{0, 0, 0, 1, Side::two, Placement::rule1},
             Case{0, 0, 1, 0, Side::one, Placement::rule2},
             Case{0, 0, 1, 1, Side::two, Placement::rule4}, // sum 2, even
             Case{0, 1, 1, 1, Side::one, Placement::rule2}, // c2 equal
             Case{1, 0, 1, 1, Side::two, Placement::rule1}, // c1 equal
             Case{0, 1, 1, 0, Side::two, Placement::rule4},
             Case{1, 1, 0, 1, Side::one, Placement::rule2},
         }) {
        PairAssignment pa;
        pa.c1 = {c.c1u, c.c1v};
        pa.c2 = {c.c2u, c.c2v};
        pa.range = {2, 2};
        PartitionOutcome out = apply_rules(g, ids, pa);
        CHECK(out.side[0] == c.want);
        CHECK(out.placed_by[0] == c.rule);
        CHECK(out.same_pair_edges.empty());
    }
}

TEST_CASE("odd-sum distinct pairs go to side one") {
    Graph g = generate_complete(2);
    PairAssignment pa;
    pa.c1 = {0, 1};
    pa.c2 = {0, 2};
    pa.range = {4, 4};
    PartitionOutcome out = apply_rules(g, all_edges(g), pa);
    CHECK(out.side[0] == Side::one);
    CHECK(out.placed_by[0] == Placement::rule3);
}

TEST_CASE("identical pairs: same range goes through the class split") {
    Graph g = generate_complete(2);
    PairAssignment pa = uniform_pa(2, 1, 1, 2);
    PartitionOutcome out = apply_rules(g, all_edges(g), pa);
    CHECK(out.same_pair_edges == std::vector<int>{0});
    CHECK(out.placed_by[0] == Placement::rule5);
    REQUIRE(out.same_class_components.size() == 1);
    CHECK(out.same_class_components[0].vertices == std::vector<int>{0, 1});
    CHECK(out.same_class_components[0].c1 == 1);
    CHECK(out.same_class_components[0].range == 2);
}

TEST_CASE("identical pairs with different ranges fall to side two") {
    Graph g = generate_complete(2);
    PairAssignment pa;
    pa.c1 = {1, 1};
    pa.c2 = {1, 1};
    pa.range = {2, 4};
    PartitionOutcome out = apply_rules(g, all_edges(g), pa);
    CHECK(out.side[0] == Side::two);
    CHECK(out.placed_by[0] == Placement::rule6);
    CHECK(out.same_pair_edges == std::vector<int>{0});
    CHECK(out.same_class_components.empty());
}

TEST_CASE("same-class triangle: class split, special vertex, conflict bound") {
    Graph g = generate_complete(3);
    PairAssignment pa = uniform_pa(3, 0, 0, 2);
    PartitionOutcome out = apply_rules(g, all_edges(g), pa);
    CHECK(out.same_pair_edges.size() == 3);
    CHECK(out.special == std::vector<int>{0});
    CHECK(out.conflict_bound == 2); // max |A(v)| = 2
    // the class split is the balanced Euler split of the triangle
    CHECK(out.h1.size() + out.h2.size() == 3);
}

TEST_CASE("conflict bound formula") {
    // star: centre has 4 same-pair neighbours -> T = ceil((4+2)/2) = 3
    Graph g = testutil::star(4);
    PairAssignment pa = uniform_pa(5, 0, 0, 2);
    // apply_rules takes whatever close set it is given; use all edges here
    PartitionOutcome out = apply_rules(g, all_edges(g), pa);
    CHECK(out.conflict_bound == 3);
}

TEST_CASE("h1/h2 partition the close set and skip far edges") {
    Graph g = generate_gnp(30, 0.3, 21);
    std::vector<int> ranges(30, 4);
    PairAssignment pa = sample_uniform_pairs(g, ranges, 5);
    FarSplit fs = split_far_edges(g);
    PartitionOutcome out = apply_rules(g, fs.close_edges, pa);

    std::set<int> seen;
    for (int e : out.h1) seen.insert(e);
    for (int e : out.h2) seen.insert(e);
    CHECK(seen.size() == out.h1.size() + out.h2.size());
    CHECK(seen.size() == fs.close_edges.size());
    for (int e : fs.far_edges) CHECK_FALSE(seen.count(e));
}

TEST_CASE("pair-only invariant: membership outside the class split depends on pairs alone") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = generate_gnp(40, 0.25, 900 + seed);
        std::vector<int> ranges;
        for (int v = 0; v < 40; ++v) ranges.push_back(1 << (seed % 3));
        PairAssignment pa = sample_uniform_pairs(g, ranges, seed);
        PartitionOutcome out = apply_rules(g, all_edges(g), pa);
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            int want = route_side(pa.c1[ed.u], pa.c2[ed.u], pa.c1[ed.v], pa.c2[ed.v]);
            if (want == 0) {
                CHECK((out.placed_by[e] == Placement::rule5 ||
                       out.placed_by[e] == Placement::rule6));
            } else {
                CHECK(side_index(out.side[e]) == want - 1);
            }
        }
    }
}

TEST_CASE("rule-count bound: each side attracts at least (r^2 - r)/2 of the r^2 pairs") {
    for (int ru : {2, 4, 8}) {
        for (int rv : {ru / 2, ru, 2 * ru}) {
            if (rv < 1) continue;
            for (int a = 0; a < rv; ++a) {
                for (int b = 0; b < rv; ++b) {
                    int to_one = 0, to_two = 0;
                    for (int x = 0; x < ru; ++x)
                        for (int z = 0; z < ru; ++z) {
                            if (x == a && z == b) continue; // same pair: routed elsewhere
                            int s = route_side(x, z, a, b);
                            if (s == 1) ++to_one;
                            else ++to_two;
                        }
                    CHECK(to_one >= (ru * ru - ru) / 2);
                    CHECK(to_two >= (ru * ru - ru) / 2);
                }
            }
        }
    }
}

TEST_CASE("grid assignment on n=2 reproduces the hand decomposition") {
    auto [g, pa] = complete_grid_assignment(2);
    CHECK(g.vertex_count() == 4);
    CHECK(pa.c1[2] == 1); // vertex (1,0)
    CHECK(pa.c2[2] == 0);

    PartitionOutcome out = apply_rules(g, all_edges(g), pa);
    // side one: (0,0)-(1,0) and (0,1)-(1,1), the equal-second-coordinate edges
    std::set<int> side1(out.h1.begin(), out.h1.end());
    std::set<int> expect;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u % 2 == ed.v % 2) expect.insert(e);
    }
    CHECK(side1 == expect);
    CHECK(out.h2.size() == 4);

    // min degrees 1 and 2, both >= floor(3/2) = 1
    int min1 = 4, min2 = 4;
    for (int v = 0; v < 4; ++v) {
        int d1 = 0, d2 = 0;
        for (const auto& [u, e] : g.neighbours(v))
            (out.side[e] == Side::one ? d1 : d2)++;
        min1 = std::min(min1, d1);
        min2 = std::min(min2, d2);
    }
    CHECK(min1 == 1);
    CHECK(min2 == 2);
}

TEST_CASE("grid assignment: degree floor and proper coordinate colourings") {
    for (int n : {2, 4}) {
        auto [g, pa] = complete_grid_assignment(n);
        PartitionOutcome out = apply_rules(g, all_edges(g), pa);
        int need = (n * n - 1) / 2;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int d1 = 0;
            for (const auto& [u, e] : g.neighbours(v))
                if (out.side[e] == Side::one) ++d1;
            CHECK(d1 >= need);
            CHECK(g.degree(v) - d1 >= need);
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (out.side[e] == Side::one) CHECK(ed.u / n != ed.v / n);
            else CHECK(ed.u % n != ed.v % n);
        }
    }
}

TEST_CASE("grid assignment rejects odd or tiny n") {
    CHECK_THROWS_AS(complete_grid_assignment(3), std::invalid_argument);
    CHECK_THROWS_AS(complete_grid_assignment(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_grid_assignment(-2), std::invalid_argument);
}

TEST_CASE("pair assignment text round trip") {
    Graph g = generate_gnp(12, 0.4, 3);
    std::vector<int> ranges(12, 8);
    PairAssignment pa = sample_uniform_pairs(g, ranges, 44);
    PairAssignment back = load_pair_assignment(serialize_pair_assignment(pa), g);
    CHECK(back.c1 == pa.c1);
    CHECK(back.c2 == pa.c2);
    CHECK(back.range == pa.range);

    CHECK_THROWS_AS(load_pair_assignment("0 0 0 4\n", g), ParseError);   // missing vertices
    CHECK_THROWS_AS(load_pair_assignment(serialize_pair_assignment(pa) + "3 0 0 8\n", g),
                    ParseError);                                          // repeated vertex
}

TEST_CASE("assignment validation") {
    Graph g = generate_complete(2);
    PairAssignment pa;
    pa.c1 = {0, 3};
    pa.c2 = {0, 0};
    pa.range = {2, 2};
    CHECK_THROWS_AS(pa.validate(g), std::invalid_argument); // c1 out of range
    pa.c1 = {0, 1};
    CHECK_NOTHROW(pa.validate(g));
}
