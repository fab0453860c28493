#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "unav/algos.hpp"
#include "unav/canonical.hpp"
#include "unav/graph.hpp"

using namespace unav;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("matching number examples") {
    CHECK(matching_number(complete_graph(4)) == 2);
    CHECK(matching_number(path_graph(4)) == 2);
    CHECK(matching_number(complete_split(2, 2)) == 2);
    CHECK(matching_number(cycle_graph(5)) == 2);
    CHECK(matching_number(empty_graph(6)) == 0);
    CHECK(matching_number(staircase_split(3)) == 3);
}

TEST_CASE("matching equals the DP oracle for every graph with n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for_each_graph_on_vertices(n, [&](const SimpleGraph& g) {
            CHECK(matching_number(g) == testoracle::matching_dp(testoracle::from_unav(g)));
            return true;
        });
}

TEST_CASE("maximum_matching returns a valid maximum matching") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + static_cast<int>(rng() % 9);
        SimpleGraph g = random_graph(rng, n);
        auto mm = maximum_matching(g);
        std::set<int> used;
        for (auto [u, v] : mm) {
            CHECK(g.has_edge(u, v));
            CHECK(used.insert(u).second);
            CHECK(used.insert(v).second);
        }
        CHECK(static_cast<int>(mm.size()) == matching_number(g));
    }
}

TEST_CASE("independence number examples and Turan bound") {
    CHECK(independence_number(empty_graph(5)) == 5);
    CHECK(independence_number(complete_graph(5)) == 1);
    CHECK(independence_number(cycle_graph(5)) == 2);

    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        SimpleGraph g = random_graph(rng, n);
        int alpha = independence_number(g);
        double avg_deg = n > 0 ? 2.0 * g.edge_count() / n : 0;
        CHECK(alpha >= static_cast<int>(std::ceil(n / (avg_deg + 1) - 1e-9)));
    }
}

TEST_CASE("independence agrees with the subset oracle") {
    for (int n = 1; n <= 6; ++n)
        for_each_graph_on_vertices(n, [&](const SimpleGraph& g) {
            CHECK(independence_number(g) == testoracle::independence_brute(testoracle::from_unav(g)));
            return true;
        });
    std::mt19937_64 rng(47);
    for (int i = 0; i < 50; ++i) {
        SimpleGraph g = random_graph(rng, 10 + static_cast<int>(rng() % 3));
        CHECK(independence_number(g) == testoracle::independence_brute(testoracle::from_unav(g)));
    }
}

TEST_CASE("clique helpers") {
    CHECK(clique_number(complete_graph(6)) == 6);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(find_clique(complete_graph(5), 4).size() == 4);
    CHECK(find_clique(cycle_graph(5), 3).empty());
    auto c = find_clique(complete_split(3, 2), 3);
    REQUIRE(c.size() == 3);
    SimpleGraph g = complete_split(3, 2);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) CHECK(g.has_edge(c[i], c[j]));
}

TEST_CASE("strong edge coloring examples") {
    auto m3 = greedy_strong_edge_coloring(matching_graph(3));
    CHECK(m3.classes == 1);
    auto star3 = greedy_strong_edge_coloring(star_graph(3));
    CHECK(star3.classes == 3);
    auto p4 = greedy_strong_edge_coloring(path_graph(4));
    CHECK(p4.classes == 3);
    CHECK(p4.classes <= 2 * 2 * 2 - 2 * 2 + 1);
}

TEST_CASE("strong edge coloring validity and greedy bound") {
    for (int n = 1; n <= 6; ++n)
        for_each_graph_on_vertices(n, [&](const SimpleGraph& g) {
            auto c = greedy_strong_edge_coloring(g);
            CHECK(is_valid_strong_edge_coloring(g, c));
            int d = g.max_degree();
            CHECK(c.classes <= 2 * d * d - 2 * d + 1);
            if (g.edge_count() > 0)
                CHECK(c.largest_class_size() * c.classes >= g.edge_count());
            return true;
        });
    std::mt19937_64 rng(53);
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + static_cast<int>(rng() % 11);
        SimpleGraph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
        auto c = greedy_strong_edge_coloring(g);
        CHECK(is_valid_strong_edge_coloring(g, c));
        int d = g.max_degree();
        CHECK(c.classes <= 2 * d * d - 2 * d + 1);
    }
}
