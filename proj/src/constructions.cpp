#include "unav/constructions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace unav {

TwoColoring matching_coloring(int n) {
    if (n < 2) throw std::invalid_argument("matching coloring needs n >= 2");
    SimpleGraph red(n);
    for (int i = 0; i + 1 < n; i += 2) red.add_edge(i, i + 1);
    return TwoColoring(n, red);
}

TwoColoring star_coloring(int n) {
    if (n < 2) throw std::invalid_argument("star coloring needs n >= 2");
    SimpleGraph red(n);
    for (int v = 1; v < n; ++v) red.add_edge(0, v);
    return TwoColoring(n, red);
}

TwoColoring clique_blowup_coloring(int n, int t) {
    if (t < 3) throw std::invalid_argument("clique blowup needs t >= 3");
    if (n < t - 1) throw std::invalid_argument("clique blowup needs n >= t-1");
    SimpleGraph blue(n);
    int parts = n / (t - 1);
    for (int p = 0; p < parts; ++p) {
        int base = p * (t - 1);
        for (int i = 0; i < t - 1; ++i)
            for (int j = i + 1; j < t - 1; ++j) blue.add_edge(base + i, base + j);
    }
    return TwoColoring(n, complement(blue));
}

TwoColoring layered_coloring(int n, int r, int s, int t) {
    if (t < s || s < 2 || r < 2) throw std::invalid_argument("layered coloring needs t >= s >= 2, r >= 2");
    int w = std::min(r, s);
    if (n <= (w - 1) * (t - 1))
        throw std::invalid_argument("layered coloring needs n > (min(r,s)-1)(t-1)");
    int boundary = (w - 1) * (t - 1); // vertices [0, boundary) are the V_i, W is the rest
    auto part_of = [&](int v) { return v < boundary ? v / (t - 1) : -1; };
    SimpleGraph red(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int pu = part_of(u), pv = part_of(v);
            bool in_w_both = pu < 0 && pv < 0;
            bool cross_parts = pu >= 0 && pv >= 0 && pu != pv;
            if (in_w_both || cross_parts) red.add_edge(u, v);
        }
    return TwoColoring(n, red);
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

SimpleGraph incidence_bipartite(int q) {
    if (!is_prime(q)) throw std::invalid_argument("incidence construction needs q prime");
    // Points and lines of PG(2,q) as homogeneous triples over Z_q, normalized
    // so that the first nonzero coordinate is 1. Incidence: dot product = 0.
    std::vector<std::array<int, 3>> points;
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) points.push_back({1, b, c});
    for (int c = 0; c < q; ++c) points.push_back({0, 1, c});
    points.push_back({0, 0, 1});
    int count = static_cast<int>(points.size());
    if (count != q * q + q + 1) throw std::logic_error("projective plane point count mismatch");
    SimpleGraph g(2 * count);
    for (int p = 0; p < count; ++p)
        for (int l = 0; l < count; ++l) {
            int dot = points[p][0] * points[l][0] + points[p][1] * points[l][1] +
                      points[p][2] * points[l][2];
            if (dot % q == 0) g.add_edge(p, count + l);
        }
    return g;
}

TwoColoring coloring_with_blue(int n, const SimpleGraph& blue) {
    if (blue.n > n) throw std::invalid_argument("blue graph larger than host");
    SimpleGraph red = complete_graph(n);
    for (auto [u, v] : blue.edges()) red.remove_edge(u, v);
    return TwoColoring(n, red);
}

TwoColoring bipartite_free_coloring(int n, int q) {
    SimpleGraph blue = incidence_bipartite(q);
    if (n < blue.n)
        throw std::invalid_argument("need n >= 2(q^2+q+1) = " + std::to_string(blue.n));
    return coloring_with_blue(n, blue);
}

KColoring multicolor_partition_coloring(int n, int k) {
    if (k < 3) throw std::invalid_argument("multicolor partition needs k >= 3");
    if (n < k - 1) throw std::invalid_argument("multicolor partition needs n >= k-1");
    // Part sizes as equal as possible, larger parts first.
    int parts = k - 1;
    std::vector<int> part_of(n);
    int base = n / parts, extra = n % parts, v = 0;
    for (int p = 0; p < parts; ++p) {
        int size = base + (p < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) part_of[v++] = p;
    }
    KColoring kc;
    kc.n = n;
    kc.k = k;
    kc.color.assign(pair_count(n), 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            kc.color[pair_index(i, j)] =
                static_cast<uint8_t>(part_of[i] == part_of[j] ? part_of[i] + 1 : k);
    return kc;
}

BoundReport kst_bounds(int m, int n, int s, int t) {
    if (s > t || s < 1 || m < 1 || n < 1) throw std::invalid_argument("kst bounds need 1 <= s <= t");
    BoundReport r;
    r.m = m;
    r.n = n;
    r.s = s;
    r.t = t;
    r.zarankiewicz_bound = std::pow(s - 1, 1.0 / t) * (n - t + 1) * std::pow(m, 1.0 - 1.0 / t) +
                           static_cast<double>(t - 1) * m;
    r.extremal_bound =
        0.5 * (std::pow(t - 1, 1.0 / s) * std::pow(n, 2.0 - 1.0 / s) + static_cast<double>(s - 1) * n);
    return r;
}

} // namespace unav
