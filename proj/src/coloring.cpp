#include "unav/coloring.hpp"

#include <stdexcept>

#include "unav/canonical.hpp"

namespace unav {

TwoColoring::TwoColoring(int n_, SimpleGraph red_) : n(n_), red(std::move(red_)) {
    if (red.n != n) throw std::invalid_argument("red graph vertex count mismatch");
}

TwoColoring coloring_from_red(int n, const SimpleGraph& r) { return TwoColoring(n, r); }

TwoColoring coloring_from_mask(int n, uint64_t red_mask) {
    return TwoColoring(n, graph_from_mask(n, red_mask));
}

ClassSizes class_sizes(const TwoColoring& c) {
    ClassSizes s;
    s.red = c.red.edge_count();
    s.blue = pair_count(c.n) - s.red;
    s.min_class = std::min(s.red, s.blue);
    return s;
}

TwoColoring swap_colors(const TwoColoring& c) { return TwoColoring(c.n, c.blue()); }

void for_each_red_mask(int n, uint64_t begin, uint64_t end, const std::function<bool(uint64_t)>& visit) {
    if (n > 8) throw std::invalid_argument("raw enumeration supports n <= 8");
    uint64_t total = uint64_t{1} << pair_count(n);
    if (end > total) end = total;
    for (uint64_t mask = begin; mask < end; ++mask)
        if (!visit(mask)) return;
}

void for_each_two_coloring(int n, EnumMode mode, const std::function<bool(const TwoColoring&)>& visit) {
    if (mode == EnumMode::raw) {
        for_each_red_mask(n, 0, uint64_t{1} << pair_count(n),
                          [&](uint64_t mask) { return visit(coloring_from_mask(n, mask)); });
        return;
    }
    if (n > 10) throw std::invalid_argument("canonical enumeration supports n <= 10");
    for_each_graph_on_vertices(n, [&](const SimpleGraph& g) { return visit(TwoColoring(n, g)); });
}

std::vector<TwoColoring> enumerate_red_graphs(int n, EnumMode mode) {
    std::vector<TwoColoring> out;
    for_each_two_coloring(n, mode, [&](const TwoColoring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

SimpleGraph KColoring::color_graph(int i) const {
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (color[pair_index(u, v)] == i) g.add_edge(u, v);
    return g;
}

int KColoring::color_class_size(int i) const {
    int count = 0;
    for (uint8_t c : color)
        if (c == i) ++count;
    return count;
}

KColoring kcoloring_from_parts(int n, int k, const std::vector<std::tuple<int, int, int>>& edges) {
    if (k < 1 || k > 255) throw std::invalid_argument("color count out of range");
    KColoring kc;
    kc.n = n;
    kc.k = k;
    kc.color.assign(pair_count(n), 0);
    for (auto [u, v, c] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("bad edge in k-coloring");
        if (c < 1 || c > k) throw std::invalid_argument("color out of range");
        kc.color[pair_index(u, v)] = static_cast<uint8_t>(c);
    }
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (kc.color[pair_index(u, v)] == 0)
                throw std::invalid_argument("missing edge color for (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
    return kc;
}

} // namespace unav
