#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unav/constructions.hpp"
#include "unav/graph.hpp"
#include "unav/multicolor.hpp"
#include "unav/patterns.hpp"

using namespace unav;

TEST_CASE("classification of the partition coloring") {
    KColoring c = multicolor_partition_coloring(12, 3);
    auto cls = classify_colors(c, 2);
    CHECK(cls.a_colors == std::vector<int>{3});
    CHECK(cls.b_colors == std::vector<int>{1, 2});
    REQUIRE(cls.witnesses.size() == 1);
    CHECK(cls.witnesses[0].color == 3);

    // The witness re-verifies inside G_3.
    SimpleGraph g3 = c.color_graph(3);
    const auto& w = cls.witnesses[0];
    SimpleGraph pattern = w.pattern == "star" ? star_graph(2) : matching_graph(2);
    for (int a = 0; a < pattern.n; ++a)
        for (int b = a + 1; b < pattern.n; ++b)
            CHECK(g3.has_edge(w.vertices[a], w.vertices[b]) == pattern.has_edge(a, b));
}

TEST_CASE("rainbow triangle has empty A_f") {
    KColoring rainbow = kcoloring_from_parts(3, 3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    auto cls = classify_colors(rainbow, 2);
    CHECK(cls.a_colors.empty());
    CHECK(cls.b_colors == std::vector<int>{1, 2, 3});
}

TEST_CASE("a 2-coloring view of the star coloring classifies red into A_f") {
    int n = 8;
    std::vector<std::tuple<int, int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v, u == 0 ? 1 : 2);
    KColoring c = kcoloring_from_parts(n, 2, edges);
    auto cls = classify_colors(c, 3);
    CHECK(std::find(cls.a_colors.begin(), cls.a_colors.end(), 1) != cls.a_colors.end());
}

TEST_CASE("classification over partition colorings with larger parts") {
    for (int k = 3; k <= 4; ++k)
        for (int t = 2; t <= 3; ++t)
            for (int n = (k - 1) * (t + 1); n <= 16; n += 3) {
                KColoring c = multicolor_partition_coloring(n, k);
                auto cls = classify_colors(c, t);
                CHECK(cls.a_colors == std::vector<int>{k});
                std::vector<int> want;
                for (int i = 1; i < k; ++i) want.push_back(i);
                CHECK(cls.b_colors == want);
            }
}

TEST_CASE("clique grid search and verification") {
    KColoring c = multicolor_partition_coloring(12, 3);
    auto grid = search_clique_grid(c, 2);
    REQUIRE(grid.has_value());
    CHECK(verify_multicolor_b(c, 2, *grid));

    KColoring c94 = multicolor_partition_coloring(9, 4);
    auto grid94 = search_clique_grid(c94, 2);
    REQUIRE(grid94.has_value());
    CHECK(verify_multicolor_b(c94, 2, *grid94));
}

TEST_CASE("clique grid fails when B_f colors lack cliques") {
    // Rainbow triangle with t=3: every B_f color graph is a single edge.
    KColoring rainbow = kcoloring_from_parts(3, 3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    CHECK(!search_clique_grid(rainbow, 3).has_value());
}

TEST_CASE("verify_multicolor_b precondition errors") {
    KColoring c = multicolor_partition_coloring(12, 3);
    // A straddling "clique" is not monochromatic of its color.
    std::map<int, std::vector<int>> bad = {{1, {0, 6}}, {2, {7, 8}}};
    CHECK_THROWS_AS(verify_multicolor_b(c, 2, bad), std::invalid_argument);
    // Wrong size.
    std::map<int, std::vector<int>> small = {{1, {0}}, {2, {6, 7}}};
    CHECK_THROWS_AS(verify_multicolor_b(c, 2, small), std::invalid_argument);
    // Color 3 is in A_f, not B_f.
    std::map<int, std::vector<int>> wrong_color = {{3, {0, 6}}};
    CHECK_THROWS_AS(verify_multicolor_b(c, 2, wrong_color), std::invalid_argument);
    // Overlapping cliques.
    std::map<int, std::vector<int>> overlap = {{1, {0, 1}}, {2, {0, 6}}};
    CHECK_THROWS_AS(verify_multicolor_b(c, 2, overlap), std::invalid_argument);
}

TEST_CASE("degenerate B_f is vacuously verified") {
    // All edges one color: k=2 view, B_f has at most one element.
    std::vector<std::tuple<int, int, int>> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v, 1);
    KColoring c = kcoloring_from_parts(5, 2, edges);
    auto cls = classify_colors(c, 2);
    if (cls.b_colors.size() <= 1) {
        auto grid = search_clique_grid(c, 2);
        if (grid) CHECK(verify_multicolor_b(c, 2, *grid));
    }
}

TEST_CASE("missing B_f clique in the map returns false, not an error") {
    KColoring c = multicolor_partition_coloring(12, 3);
    std::map<int, std::vector<int>> partial = {{1, {0, 1}}};
    CHECK(!verify_multicolor_b(c, 2, partial));
}
