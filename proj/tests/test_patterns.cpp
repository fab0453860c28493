#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "unav/canonical.hpp"
#include "unav/constructions.hpp"
#include "unav/coloring.hpp"
#include "unav/graph.hpp"
#include "unav/patterns.hpp"

using namespace unav;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p) g.add_edge(u, v);
    return g;
}

bool image_is_induced_copy(const SimpleGraph& host, const SimpleGraph& pat,
                           const std::vector<int>& img) {
    for (int a = 0; a < pat.n; ++a)
        for (int b = a + 1; b < pat.n; ++b)
            if (host.has_edge(img[a], img[b]) != pat.has_edge(a, b)) return false;
    return true;
}

} // namespace

TEST_CASE("family constructors and validation") {
    auto f = family_F(2, 3);
    CHECK(f.members.size() == 2);
    CHECK(f.members[0].pattern.n == 5);  // K_{2,3}
    CHECK(f.members[1].pattern.n == 6);  // S_{3,3}
    auto l = family_L(2, 2, 3);
    CHECK(l.members.size() == 3);
    CHECK(l.members[0].pattern.edge_count() == 2); // 2K_2 first

    CHECK_THROWS_AS(family_F(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(family_single(complete_graph(3)).validate_for_ex2(), std::invalid_argument);
    CHECK_THROWS_AS(family_single(empty_graph(3)).validate_for_ex2(), std::invalid_argument);
    CHECK_THROWS_AS(
        family_single(path_graph(3), Containment::weakly_induced_mono).validate_for_ex2(),
        std::invalid_argument);
    CHECK_NOTHROW(family_L(3, 1, 3).validate_for_ex2());
}

TEST_CASE("find_induced examples") {
    CHECK(find_induced(cycle_graph(5), path_graph(3)).has_value());
    CHECK(!find_induced(complete_graph(4), star_graph(2)).has_value());
    CHECK(!find_induced(complete_bipartite(2, 2), matching_graph(2)).has_value());
    auto img = find_induced(cycle_graph(6), matching_graph(2));
    REQUIRE(img.has_value());
    CHECK(image_is_induced_copy(cycle_graph(6), matching_graph(2), *img));
}

TEST_CASE("find_induced_mono examples") {
    auto star_w = find_induced_mono(star_coloring(6), star_graph(3));
    REQUIRE(star_w.has_value());
    CHECK(star_w->color == WitnessColor::red);

    auto match_w = find_induced_mono(matching_coloring(8), matching_graph(3));
    REQUIRE(match_w.has_value());
    CHECK(match_w->color == WitnessColor::red);

    CHECK(!find_induced_mono(layered_coloring(20, 2, 2, 3), complete_bipartite(2, 3)).has_value());
}

TEST_CASE("color symmetry and complement duality") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
        int n = 4 + static_cast<int>(rng() % 4);
        TwoColoring c(n, random_graph(rng, n));
        SimpleGraph h = random_graph(rng, 2 + static_cast<int>(rng() % 3) + 1);
        bool direct = find_induced_mono(c, h).has_value();
        CHECK(direct == find_induced_mono(swap_colors(c), h).has_value());
        CHECK(direct == find_induced_mono(c, complement(h)).has_value());
    }
}

TEST_CASE("avoids_family") {
    auto mono = coloring_from_red(6, complete_graph(6));
    CHECK(avoids_family(mono, family_F(2, 2)).avoids);
    CHECK(avoids_family(mono, family_L(2, 2, 3)).avoids);

    // Any coloring of K_5 with an edge in each color violates F_{1,2}.
    auto fam = family_F(1, 2);
    for_each_two_coloring(5, EnumMode::raw, [&](const TwoColoring& c) {
        if (class_sizes(c).min_class >= 1) {
            auto rep = avoids_family(c, fam);
            CHECK(!rep.avoids);
            CHECK(rep.witness.has_value());
        }
        return true;
    });

    CHECK(avoids_family(layered_coloring(20, 2, 2, 3), family_L(2, 2, 3)).avoids);
    CHECK(avoids_family(layered_coloring(14, 2, 2, 3), family_L(2, 2, 3)).avoids);
}

TEST_CASE("violation witnesses re-verify") {
    std::mt19937_64 rng(73);
    auto fam = family_L(2, 2, 2);
    int seen = 0;
    while (seen < 100) {
        int n = 5 + static_cast<int>(rng() % 3);
        TwoColoring c(n, random_graph(rng, n));
        auto rep = avoids_family(c, fam);
        if (rep.avoids) continue;
        ++seen;
        REQUIRE(rep.witness.has_value());
        const auto& member = fam.members[rep.member_index].pattern;
        const SimpleGraph host = rep.witness->color == WitnessColor::red ? c.red : c.blue();
        CHECK(image_is_induced_copy(host, member, rep.witness->vertices));
    }
}

TEST_CASE("find_weakly_induced examples") {
    SimpleGraph two_k3 = disjoint_union({complete_graph(3), complete_graph(3)});
    CHECK(find_weakly_induced(two_k3, matching_graph(2)).has_value());
    CHECK(!find_weakly_induced(complete_graph(6), matching_graph(2)).has_value());

    auto img = find_weakly_induced(cycle_graph(6), matching_graph(2));
    REQUIRE(img.has_value());
    // Opposite edges of the hexagon: no host edge between the two images.
    CHECK(!cycle_graph(6).has_edge((*img)[0], (*img)[2]));
    CHECK(!cycle_graph(6).has_edge((*img)[0], (*img)[3]));
    CHECK(!cycle_graph(6).has_edge((*img)[1], (*img)[2]));
    CHECK(!cycle_graph(6).has_edge((*img)[1], (*img)[3]));

    // Strict mode requires induced component images.
    SimpleGraph two_p3 = disjoint_union({path_graph(3), path_graph(3)});
    CHECK(find_weakly_induced(two_k3, two_p3, false).has_value());
    CHECK(!find_weakly_induced(two_k3, two_p3, true).has_value());
}

TEST_CASE("find_balanced_copy examples") {
    SimpleGraph one_edge(4);
    one_edge.add_edge(0, 1);
    auto w = find_balanced_copy(TwoColoring(4, one_edge), path_graph(3));
    REQUIRE(w.has_value());
    CHECK(w->red_edges == 1);

    CHECK(!find_balanced_copy(coloring_from_red(5, complete_graph(5)), complete_graph(3)).has_value());

    SimpleGraph k3_in_k4(4);
    k3_in_k4.add_edge(0, 1);
    k3_in_k4.add_edge(1, 2);
    k3_in_k4.add_edge(0, 2);
    CHECK(find_balanced_copy(TwoColoring(4, k3_in_k4), path_graph(4)).has_value());

    CHECK_THROWS_AS(find_balanced_copy(TwoColoring(4, one_edge), empty_graph(3)),
                    std::invalid_argument);
}

TEST_CASE("balanced detection on hosts beyond the mask range") {
    // n = 12 exceeds the 64-bit pair mask; the backtracking path takes over.
    TwoColoring layered = layered_coloring(12, 2, 2, 3);
    auto w = find_balanced_copy(layered, cycle_graph(4));
    REQUIRE(w.has_value());
    int red = 0;
    for (auto [u, v] : w->copy_edges)
        if (layered.is_red(u, v)) ++red;
    CHECK(red == w->red_edges);
    CHECK(red == 2);
    CHECK(w->copy_edges.size() == 4);

    // Monochromatic hosts have no balanced triangle at any size.
    CHECK(!find_balanced_copy(coloring_from_red(12, complete_graph(12)), complete_graph(3))
               .has_value());

    // The backtracking path agrees with the injection oracle.
    std::mt19937_64 rng(89);
    for (int i = 0; i < 40; ++i) {
        SimpleGraph host = random_graph(rng, 12, 0.5);
        SimpleGraph pat = random_graph(rng, 3 + static_cast<int>(rng() % 2), 0.6);
        if (pat.edge_count() == 0) continue;
        TwoColoring c(12, host);
        CHECK(find_balanced_copy(c, pat).has_value() ==
              testoracle::has_balanced_copy(testoracle::from_unav(host), testoracle::from_unav(pat)));
    }
}

TEST_CASE("copy_masks counts and caching") {
    const CopySet& p4 = copy_masks(4, path_graph(4));
    CHECK(p4.masks.size() == 12); // 4! / |Aut(P_4)|
    const CopySet& again = copy_masks(4, path_graph(4));
    CHECK(&p4 == &again);
    CHECK(copy_masks(5, complete_graph(3)).masks.size() == 10); // C(5,3)
    CHECK(copy_masks(4, matching_graph(2)).masks.size() == 3);
}

TEST_CASE("detector agreement with oracles on random instances") {
    std::mt19937_64 rng(79);
    for (int i = 0; i < 800; ++i) {
        int hn = 4 + static_cast<int>(rng() % 4);
        int pn = 2 + static_cast<int>(rng() % 4);
        SimpleGraph host = random_graph(rng, hn, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
        SimpleGraph pat = random_graph(rng, pn, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
        auto oh = testoracle::from_unav(host);
        auto op = testoracle::from_unav(pat);
        CHECK(find_induced(host, pat).has_value() == testoracle::induced_somewhere(oh, op));
        CHECK(find_weakly_induced(host, pat).has_value() ==
              testoracle::weakly_induced_somewhere(oh, op));
        CHECK(find_weakly_induced(host, pat, true).has_value() ==
              testoracle::weakly_induced_somewhere(oh, op, true));
        if (pat.edge_count() >= 1) {
            TwoColoring c(hn, host);
            CHECK(find_balanced_copy(c, pat).has_value() == testoracle::has_balanced_copy(oh, op));
        }
    }
}

TEST_CASE("grid_alignment") {
    // All-red host: first ell columns work.
    TwoColoring all_red = coloring_from_red(8, complete_graph(8));
    std::vector<std::vector<int>> layout = {{0, 1, 2, 3}, {4, 5, 6, 7}};
    auto l = grid_alignment(all_red, layout, 3);
    REQUIRE(l.has_value());
    CHECK(*l == std::vector<int>{0, 1, 2});

    // One row of six: some triple always works since R(3) = 6.
    std::mt19937_64 rng(83);
    for (int i = 0; i < 50; ++i) {
        TwoColoring c(6, random_graph(rng, 6));
        auto found = grid_alignment(c, {{0, 1, 2, 3, 4, 5}}, 3);
        REQUIRE(found.has_value());
        std::vector<int> verts;
        for (int j : *found) verts.push_back(j);
        bool first = c.is_red(verts[0], verts[1]);
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                CHECK(c.is_red(verts[a], verts[b]) == first);
    }

    // Adversarial 2 x 5 layout: row 1 colored as C_5, row 2 as its complement.
    SimpleGraph red(10);
    for (int i = 0; i < 5; ++i) red.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(j == i + 1 || (i == 0 && j == 4))) red.add_edge(5 + i, 5 + j);
    TwoColoring adv(10, red);
    CHECK(!grid_alignment(adv, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, 3).has_value());

    CHECK_THROWS_AS(grid_alignment(all_red, {{0, 1}, {2}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(grid_alignment(all_red, {{0, 1}, {1, 2}}, 1), std::invalid_argument);
}

TEST_CASE("FamilyChecker matches the general detectors") {
    for (const auto& fam : {family_F(1, 2), family_F(2, 2), family_L(2, 2, 2), family_L(2, 1, 3)}) {
        FamilyChecker checker(5, fam);
        for (uint64_t mask = 0; mask < (uint64_t{1} << 10); ++mask) {
            TwoColoring c = coloring_from_mask(5, mask);
            CHECK(checker.violates(mask) == !avoids_family(c, fam).avoids);
        }
    }
    // 6-vertex members exercise the largest compiled tables.
    FamilyChecker big(6, family_L(3, 1, 3));
    for (uint64_t mask = 0; mask < (uint64_t{1} << 15); ++mask) {
        TwoColoring c = coloring_from_mask(6, mask);
        CHECK(big.violates(mask) == !avoids_family(c, family_L(3, 1, 3)).avoids);
    }
}

TEST_CASE("family_half") {
    auto p3 = family_half(path_graph(3));
    CHECK(p3.members.size() == 1);
    CHECK(isomorphic(p3.members[0].pattern, complete_graph(2)));

    auto k3 = family_half(complete_graph(3));
    CHECK(k3.members.size() == 2);

    auto c4 = family_half(cycle_graph(4));
    REQUIRE(c4.members.size() == 2);
    bool has_p3 = false, has_2k2 = false;
    for (const auto& m : c4.members) {
        if (isomorphic(m.pattern, path_graph(3))) has_p3 = true;
        if (isomorphic(m.pattern, matching_graph(2))) has_2k2 = true;
    }
    CHECK(has_p3);
    CHECK(has_2k2);

    auto kept = family_half(cycle_graph(4), true);
    for (const auto& m : kept.members) CHECK(m.pattern.n == 4);

    CHECK_THROWS_AS(family_half(empty_graph(3)), std::invalid_argument);
}
