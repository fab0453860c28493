#include "unav/multicolor.hpp"

#include <algorithm>
#include <stdexcept>

#include "unav/patterns.hpp"

namespace unav {

ColorClassification classify_colors(const KColoring& c, int t) {
    if (t < 2) throw std::invalid_argument("classify_colors needs t >= 2");
    ColorClassification out;
    SimpleGraph star = star_graph(t);
    SimpleGraph matching = matching_graph(t);
    for (int i = 1; i <= c.k; ++i) {
        SimpleGraph gi = c.color_graph(i);
        if (auto img = find_induced(gi, star)) {
            out.a_colors.push_back(i);
            out.witnesses.push_back({i, "star", *img});
        } else if (auto img2 = find_induced(gi, matching)) {
            out.a_colors.push_back(i);
            out.witnesses.push_back({i, "matching", *img2});
        } else {
            out.b_colors.push_back(i);
        }
    }
    return out;
}

namespace {

bool is_clique_of_color(const KColoring& c, const std::vector<int>& verts, int color) {
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (c.color_of(verts[a], verts[b]) != color) return false;
    return true;
}

} // namespace

bool verify_multicolor_b(const KColoring& c, int t, const std::map<int, std::vector<int>>& cliques) {
    ColorClassification cls = classify_colors(c, t);
    std::vector<char> in_a(c.k + 1, 0);
    for (int i : cls.a_colors) in_a[i] = 1;
    std::vector<char> seen(c.n, 0);
    for (const auto& [color, verts] : cliques) {
        if (std::find(cls.b_colors.begin(), cls.b_colors.end(), color) == cls.b_colors.end())
            throw std::invalid_argument("clique color " + std::to_string(color) + " is not in B_f");
        if (static_cast<int>(verts.size()) != t)
            throw std::invalid_argument("clique for color " + std::to_string(color) +
                                        " must have t vertices");
        for (int v : verts) {
            if (v < 0 || v >= c.n) throw std::invalid_argument("clique vertex out of range");
            if (seen[v]) throw std::invalid_argument("cliques must be pairwise disjoint");
            seen[v] = 1;
        }
        if (!is_clique_of_color(c, verts, color))
            throw std::invalid_argument("set for color " + std::to_string(color) +
                                        " is not a monochromatic clique of its color");
    }
    for (int i : cls.b_colors)
        if (!cliques.count(i)) return false; // some B_f color has no clique
    for (auto it = cliques.begin(); it != cliques.end(); ++it)
        for (auto jt = std::next(it); jt != cliques.end(); ++jt) {
            int cross = c.color_of(it->second[0], jt->second[0]);
            if (!in_a[cross]) return false;
            for (int u : it->second)
                for (int v : jt->second)
                    if (c.color_of(u, v) != cross) return false;
        }
    return true;
}

namespace {

void collect_cliques(const SimpleGraph& g, int t, std::vector<std::vector<int>>& out) {
    std::vector<int> current;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(current.size()) == t) {
            out.push_back(current);
            return;
        }
        for (int v = from; v < g.n; ++v) {
            bool ok = true;
            for (int u : current)
                if (!g.has_edge(u, v)) ok = false;
            if (!ok) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

std::optional<std::map<int, std::vector<int>>> search_clique_grid(const KColoring& c, int t) {
    if (c.n > 14) throw std::invalid_argument("search_clique_grid supports n <= 14");
    ColorClassification cls = classify_colors(c, t);
    std::vector<char> in_a(c.k + 1, 0);
    for (int i : cls.a_colors) in_a[i] = 1;

    std::vector<std::vector<std::vector<int>>> candidates; // per B_f color
    for (int i : cls.b_colors) {
        std::vector<std::vector<int>> cliques;
        collect_cliques(c.color_graph(i), t, cliques);
        if (cliques.empty()) return std::nullopt;
        candidates.push_back(std::move(cliques));
    }

    std::map<int, std::vector<int>> chosen;
    std::vector<char> used(c.n, 0);
    auto compatible = [&](const std::vector<int>& verts) {
        for (int v : verts)
            if (used[v]) return false;
        for (const auto& [color, other] : chosen) {
            int cross = c.color_of(other[0], verts[0]);
            if (!in_a[cross]) return false;
            for (int u : other)
                for (int v : verts)
                    if (c.color_of(u, v) != cross) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, size_t pos) -> bool {
        if (pos == cls.b_colors.size()) return true;
        for (const auto& clique : candidates[pos]) {
            if (!compatible(clique)) continue;
            chosen[cls.b_colors[pos]] = clique;
            for (int v : clique) used[v] = 1;
            if (self(self, pos + 1)) return true;
            for (int v : clique) used[v] = 0;
            chosen.erase(cls.b_colors[pos]);
        }
        return false;
    };
    if (rec(rec, 0)) return chosen;
    return std::nullopt;
}

} // namespace unav
