#pragma once

#include <cstdint>
#include <functional>
#include <tuple>
#include <vector>

#include "unav/graph.hpp"

namespace unav {

// Red/blue partition of E(K_n), stored as the red graph; blue is its
// complement and is never materialized except on demand.
struct TwoColoring {
    int n = 0;
    SimpleGraph red;

    TwoColoring() = default;
    TwoColoring(int n_, SimpleGraph red_);

    SimpleGraph blue() const { return complement(red); }
    bool is_red(int u, int v) const { return red.has_edge(u, v); }
    uint64_t red_mask() const { return edge_mask(red); }

    bool operator==(const TwoColoring&) const = default;
};

TwoColoring coloring_from_red(int n, const SimpleGraph& r);
TwoColoring coloring_from_mask(int n, uint64_t red_mask);

struct ClassSizes {
    int red = 0;
    int blue = 0;
    int min_class = 0;
};

ClassSizes class_sizes(const TwoColoring& c);
TwoColoring swap_colors(const TwoColoring& c);

enum class EnumMode { raw, canonical };

// Streams 2-colorings of K_n. Raw mode yields all 2^{n(n-1)/2} red edge
// subsets (n <= 8); canonical mode yields one representative per isomorphism
// class of red graphs via orderly generation (n <= 10). Return false from
// the visitor to stop.
void for_each_two_coloring(int n, EnumMode mode, const std::function<bool(const TwoColoring&)>& visit);

// Raw red-mask stream over a subrange of masks [begin, end); the search
// module partitions work across threads with this.
void for_each_red_mask(int n, uint64_t begin, uint64_t end, const std::function<bool(uint64_t)>& visit);

std::vector<TwoColoring> enumerate_red_graphs(int n, EnumMode mode);

// Assignment of each edge of K_n to a color in {1..k}.
struct KColoring {
    int n = 0;
    int k = 0;
    std::vector<uint8_t> color; // indexed by pair_index

    int color_of(int u, int v) const { return color[pair_index(u, v)]; }
    SimpleGraph color_graph(int i) const; // G_i: edges of color i on all n vertices
    int color_class_size(int i) const;
};

// Requires a total assignment with colors in {1..k}; throws on a missing
// edge or an out-of-range color.
KColoring kcoloring_from_parts(int n, int k, const std::vector<std::tuple<int, int, int>>& edges);

} // namespace unav
