#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "unav/algos.hpp"
#include "unav/canonical.hpp"
#include "unav/constructions.hpp"
#include "unav/graph.hpp"
#include "unav/patterns.hpp"

using namespace unav;

TEST_CASE("matching and star colorings") {
    auto m6 = matching_coloring(6);
    auto s = class_sizes(m6);
    CHECK(s.red == 3);
    CHECK(s.blue == 12);
    CHECK(s.min_class == 3);
    CHECK(matching_coloring(7).red.edge_count() == 3);
    CHECK(!find_induced(matching_coloring(9).red, star_graph(2)).has_value());

    auto st = star_coloring(6);
    CHECK(class_sizes(st).min_class == 5);
    CHECK(matching_number(st.red) == 1);
}

TEST_CASE("clique blowup coloring") {
    auto c83 = clique_blowup_coloring(8, 3);
    CHECK(class_sizes(c83).blue == 4);
    auto c94 = clique_blowup_coloring(9, 4);
    CHECK(class_sizes(c94).blue == 9);
    CHECK(!find_induced_mono(c83, star_graph(3)).has_value());
    for (int t = 3; t <= 5; ++t)
        for (int n = t - 1; n <= 20; n += 3)
            CHECK(class_sizes(clique_blowup_coloring(n, t)).blue ==
                  (n / (t - 1)) * (t - 1) * (t - 2) / 2);
    CHECK_THROWS_AS(clique_blowup_coloring(8, 2), std::invalid_argument);
}

TEST_CASE("layered coloring edge formula") {
    CHECK(class_sizes(layered_coloring(10, 2, 2, 3)).blue == 17);
    CHECK(class_sizes(layered_coloring(12, 3, 3, 3)).blue == 34);
    CHECK(class_sizes(layered_coloring(14, 2, 2, 3)).blue == 25);
    for (int r = 2; r <= 5; ++r)
        for (int s = 2; s <= 5; ++s)
            for (int t = s; t <= 5; ++t) {
                int w = std::min(r, s);
                for (int n = (w - 1) * (t - 1) + 1; n <= 30; n += 7) {
                    int blue = (w - 1) * (t - 1) * (n - (w - 1) * (t - 1)) +
                               (w - 1) * (t - 1) * (t - 2) / 2;
                    CHECK(class_sizes(layered_coloring(n, r, s, t)).blue == blue);
                }
            }
    CHECK_THROWS_AS(layered_coloring(10, 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(layered_coloring(2, 2, 2, 3), std::invalid_argument);
}

TEST_CASE("layered coloring avoids its family at small n") {
    for (int r = 2; r <= 3; ++r)
        for (int s = 2; s <= 3; ++s)
            for (int t = s; t <= 4; ++t) {
                CHECK(avoids_family(layered_coloring(10, r, s, t), family_L(r, s, t)).avoids);
                CHECK(avoids_family(layered_coloring(13, r, s, t), family_L(r, s, t)).avoids);
            }
}

TEST_CASE("incidence graphs of projective planes") {
    for (int q : {2, 3, 5}) {
        SimpleGraph g = incidence_bipartite(q);
        int count = q * q + q + 1;
        CHECK(g.n == 2 * count);
        CHECK(g.edge_count() == (q + 1) * count);
        for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == q + 1);
        CHECK(!find_induced(g, complete_bipartite(2, 2)).has_value());
    }
    CHECK_THROWS_AS(incidence_bipartite(4), std::invalid_argument);
    CHECK_THROWS_AS(incidence_bipartite(1), std::invalid_argument);

    // q = 7 still fits in the 128-vertex cap.
    SimpleGraph big = incidence_bipartite(7);
    CHECK(big.n == 114);
    CHECK(big.edge_count() == 8 * 57);
    for (int v = 0; v < big.n; ++v) CHECK(big.degree(v) == 8);
}

TEST_CASE("heawood graph girth") {
    SimpleGraph g = incidence_bipartite(2);
    // Bipartite and C_4-free means girth >= 6; a 6-cycle exists.
    CHECK(!find_induced(g, complete_bipartite(2, 2)).has_value());
    CHECK(find_subgraph(g, cycle_graph(6)).has_value());
}

TEST_CASE("bipartite free coloring") {
    auto c = bipartite_free_coloring(14, 2);
    CHECK(class_sizes(c).blue == 21);
    CHECK(!find_induced(c.blue(), complete_bipartite(2, 2)).has_value());
    CHECK(avoids_family(c, family_single(complete_split(3, 3), Containment::induced_mono, "S33")).avoids);
    CHECK_THROWS_AS(bipartite_free_coloring(10, 2), std::invalid_argument);

    // Caller-supplied blue graph route.
    auto c2 = coloring_with_blue(16, incidence_bipartite(2));
    CHECK(class_sizes(c2).blue == 21);
}

TEST_CASE("multicolor partition coloring") {
    KColoring c = multicolor_partition_coloring(12, 3);
    CHECK(c.color_graph(1).edge_count() == 15);
    CHECK(c.color_graph(2).edge_count() == 15);
    CHECK(c.color_graph(3).edge_count() == 36);
    CHECK(isomorphic(strip_isolated(c.color_graph(1)), complete_graph(6)));

    KColoring c74 = multicolor_partition_coloring(7, 4);
    CHECK(c74.color_graph(1).edge_count() == 3); // part of size 3
    CHECK(c74.color_graph(2).edge_count() == 1); // parts of size 2
    CHECK(c74.color_graph(3).edge_count() == 1);
    CHECK_THROWS_AS(multicolor_partition_coloring(12, 2), std::invalid_argument);
}

TEST_CASE("kst bound values") {
    auto b44 = kst_bounds(4, 4, 2, 2);
    CHECK(b44.zarankiewicz_bound == doctest::Approx(10.0).epsilon(1e-9));
    auto b10 = kst_bounds(10, 10, 2, 2);
    CHECK(b10.extremal_bound == doctest::Approx(0.5 * (std::pow(10, 1.5) + 10)).epsilon(1e-9));
    auto b22 = kst_bounds(2, 2, 2, 2);
    CHECK(b22.zarankiewicz_bound == doctest::Approx(std::sqrt(2.0) + 2).epsilon(1e-9));
    CHECK_THROWS_AS(kst_bounds(4, 4, 3, 2), std::invalid_argument);
}

TEST_CASE("kst bounds are monotone in m and n") {
    for (int s = 1; s <= 3; ++s)
        for (int t = s; t <= 4; ++t)
            for (int m = std::max(2, t); m <= 8; ++m)
                for (int n = m; n <= 8; ++n) {
                    auto b = kst_bounds(m, n, s, t);
                    CHECK(b.zarankiewicz_bound >= 0);
                    CHECK(b.extremal_bound >= 0);
                    CHECK(kst_bounds(m + 1, n, s, t).zarankiewicz_bound >=
                          b.zarankiewicz_bound - 1e-12);
                    CHECK(kst_bounds(m, n + 1, s, t).zarankiewicz_bound >=
                          b.zarankiewicz_bound - 1e-12);
                    CHECK(kst_bounds(m, n + 1, s, t).extremal_bound >= b.extremal_bound - 1e-12);
                }
}
