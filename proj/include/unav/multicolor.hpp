#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unav/coloring.hpp"
#include "unav/graph.hpp"

namespace unav {

struct ColorWitness {
    int color = 0;
    std::string pattern;       // "star" (K_{1,t}) or "matching" (tK_2)
    std::vector<int> vertices; // image of the pattern in G_color
};

// A_f: colors whose graph G_i contains an induced K_{1,t} or induced tK_2,
// each with a verifying witness; B_f: the rest.
struct ColorClassification {
    std::vector<int> a_colors;
    std::vector<int> b_colors;
    std::vector<ColorWitness> witnesses;
};

ColorClassification classify_colors(const KColoring& c, int t);

// Checks the clique-grid conclusion: each C_i is a t-clique of color i in
// B_f, pairwise disjoint, and every cross pair C_i x C_j is monochromatic of
// a color in A_f. Throws on malformed clique maps.
bool verify_multicolor_b(const KColoring& c, int t, const std::map<int, std::vector<int>>& cliques);

// Exhaustive search for a clique map passing verify_multicolor_b (n <= 14).
std::optional<std::map<int, std::vector<int>>> search_clique_grid(const KColoring& c, int t);

} // namespace unav
