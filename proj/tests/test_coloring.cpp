#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unav/coloring.hpp"
#include "unav/constructions.hpp"
#include "unav/graph.hpp"
#include "unav/patterns.hpp"

using namespace unav;

TEST_CASE("coloring_from_red and class sizes") {
    auto mono = coloring_from_red(4, complete_graph(4));
    auto s = class_sizes(mono);
    CHECK(s.red == 6);
    CHECK(s.blue == 0);
    CHECK(s.min_class == 0);

    SimpleGraph two_edges(5);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    auto c = coloring_from_red(5, two_edges);
    CHECK(class_sizes(c).red == 2);
    CHECK(class_sizes(c).blue == 8);

    auto star = coloring_from_red(6, star_graph(5));
    CHECK(class_sizes(star).min_class == 5);

    CHECK_THROWS_AS(coloring_from_red(5, complete_graph(4)), std::invalid_argument);
}

TEST_CASE("swap_colors") {
    auto c = star_coloring(6);
    CHECK(swap_colors(swap_colors(c)) == c);
    CHECK(swap_colors(c).red == complement(star_graph(5)));
    auto a = class_sizes(c);
    auto b = class_sizes(swap_colors(c));
    CHECK(a.red == b.blue);
    CHECK(a.blue == b.red);
    CHECK(a.min_class == b.min_class);
}

TEST_CASE("raw enumeration counts") {
    CHECK(enumerate_red_graphs(3, EnumMode::raw).size() == 8);
    CHECK(enumerate_red_graphs(4, EnumMode::raw).size() == 64);
    CHECK(enumerate_red_graphs(4, EnumMode::canonical).size() == 11);
    for (const auto& c : enumerate_red_graphs(4, EnumMode::raw)) {
        auto s = class_sizes(c);
        CHECK(s.red + s.blue == 6);
    }
    CHECK_THROWS_AS(enumerate_red_graphs(9, EnumMode::raw), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_red_graphs(11, EnumMode::canonical), std::invalid_argument);
}

TEST_CASE("raw and canonical streams agree on an avoidance maximum") {
    // Pattern containment is isomorphism-invariant, so the best min class
    // over the raw stream matches the best over class representatives.
    for (int n = 4; n <= 5; ++n) {
        for (const auto& fam : {family_F(1, 2), family_F(2, 2)}) {
            long long raw_best = -1, canon_best = -1;
            for_each_two_coloring(n, EnumMode::raw, [&](const TwoColoring& c) {
                if (avoids_family(c, fam).avoids)
                    raw_best = std::max<long long>(raw_best, class_sizes(c).min_class);
                return true;
            });
            for_each_two_coloring(n, EnumMode::canonical, [&](const TwoColoring& c) {
                if (avoids_family(c, fam).avoids)
                    canon_best = std::max<long long>(canon_best, class_sizes(c).min_class);
                return true;
            });
            CHECK(raw_best == canon_best);
        }
    }
}

TEST_CASE("kcoloring construction and color graphs") {
    KColoring rainbow = kcoloring_from_parts(3, 3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    for (int i = 1; i <= 3; ++i) CHECK(rainbow.color_graph(i).edge_count() == 1);

    std::vector<std::tuple<int, int, int>> all_one;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) all_one.emplace_back(u, v, 1);
    KColoring mono = kcoloring_from_parts(4, 2, all_one);
    CHECK(is_complete_graph(mono.color_graph(1)));
    CHECK(mono.color_graph(2).edge_count() == 0);

    CHECK_THROWS_AS(kcoloring_from_parts(3, 2, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(kcoloring_from_parts(3, 2, {{0, 1, 1}, {1, 2, 3}, {0, 2, 1}}),
                    std::invalid_argument);
}

TEST_CASE("color class sizes add up") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        int k = 2 + static_cast<int>(rng() % 3);
        std::vector<std::tuple<int, int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v, 1 + static_cast<int>(rng() % k));
        KColoring c = kcoloring_from_parts(n, k, edges);
        int total = 0;
        for (int i = 1; i <= k; ++i) {
            CHECK(c.color_graph(i).edge_count() == c.color_class_size(i));
            total += c.color_class_size(i);
        }
        CHECK(total == pair_count(n));
    }
}
