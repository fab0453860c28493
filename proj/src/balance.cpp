#include "unav/balance.hpp"

#include <algorithm>
#include <stdexcept>

#include "unav/algos.hpp"

namespace unav {

namespace {

std::vector<int> mask_to_vertices(uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

} // namespace

std::optional<BalanceWitness> charBP_witness(const SimpleGraph& g) {
    int e = g.edge_count();
    if (e < 1) throw std::invalid_argument("charBP needs e(G) >= 1");
    if (g.n > 24) throw std::invalid_argument("charBP subset scan supports n <= 24");
    int lo = e / 2, hi = (e + 1) / 2;
    auto edges = g.edges();
    std::optional<uint32_t> x_mask, w_mask;
    for (uint32_t mask = 0; mask < (uint32_t{1} << g.n) && (!x_mask || !w_mask); ++mask) {
        int cut = 0, inside = 0;
        for (auto [u, v] : edges) {
            bool mu = mask >> u & 1, mv = mask >> v & 1;
            if (mu != mv) ++cut;
            if (mu && mv) ++inside;
        }
        if (!x_mask && (cut == lo || cut == hi)) x_mask = mask;
        if (!w_mask && (inside == lo || inside == hi)) w_mask = mask;
    }
    if (!x_mask || !w_mask) return std::nullopt;
    BalanceWitness w;
    w.x_side = mask_to_vertices(*x_mask, g.n);
    w.w_set = mask_to_vertices(*w_mask, g.n);
    for (auto [u, v] : edges) {
        bool xu = *x_mask >> u & 1, xv = *x_mask >> v & 1;
        if (xu != xv) ++w.cut_edges;
        if ((*w_mask >> u & 1) && (*w_mask >> v & 1)) ++w.inside_edges;
    }
    return w;
}

BalanceWitness ktt_witness(int t) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    BalanceWitness w;
    // X = A_1 + B_1 with |A_1| = |B_1| = floor(t/2).
    for (int i = 0; i < t / 2; ++i) w.x_side.push_back(i);
    for (int i = 0; i < t / 2; ++i) w.x_side.push_back(t + i);
    // W = A' + B' with |A'| = t or t-1 by parity and |B'| = ceil(t/2).
    int a_size = (t % 2 == 0) ? t : t - 1;
    for (int i = 0; i < a_size; ++i) w.w_set.push_back(i);
    for (int i = 0; i < (t + 1) / 2; ++i) w.w_set.push_back(t + i);
    w.cut_edges = 2 * (t / 2) * ((t + 1) / 2);
    w.inside_edges = a_size * ((t + 1) / 2);
    return w;
}

CkReport in_Ck(const SimpleGraph& g) {
    CkReport report;
    report.k = g.edge_count();
    if (report.k < 2) throw std::invalid_argument("in_Ck needs e(G) >= 2");
    report.beta = matching_number(g);
    if (report.k % 2 != 0) return report; // k must be even
    int half = report.k / 2;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == half) {
            report.apex = v;
            break;
        }
    report.member = report.beta >= half && report.apex.has_value();
    if (!report.member) return report;

    // (a) beta <= k/2 + 1
    report.beta_at_most = report.beta <= half + 1;

    // (b) an edge e such that G - e splits into the star at some apex plus a
    // matching on the remaining edges; exhaustive over apex and edge choices.
    for (int x = 0; x < g.n && !report.decomposition; ++x) {
        if (g.degree(x) != half) continue;
        auto edges = g.edges();
        for (auto [a, b] : edges) {
            if (a == x || b == x) continue; // the star needs all k/2 edges at x
            std::vector<std::pair<int, int>> rest;
            for (auto [u, v] : edges)
                if (!(u == a && v == b) && u != x && v != x) rest.emplace_back(u, v);
            bool disjoint = true;
            for (size_t i = 0; i < rest.size() && disjoint; ++i)
                for (size_t j = i + 1; j < rest.size() && disjoint; ++j) {
                    auto [u1, v1] = rest[i];
                    auto [u2, v2] = rest[j];
                    if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) disjoint = false;
                }
            if (!disjoint || static_cast<int>(rest.size()) != half - 1) continue;
            CkReport::Decomposition d;
            d.removed_edge = {a, b};
            d.star_center = x;
            for (int v = 0; v < g.n; ++v)
                if (g.has_edge(x, v)) d.star_leaves.push_back(v);
            d.matching = rest;
            report.decomposition = std::move(d);
            break;
        }
    }

    // (c) every vertex has degree <= 3 or exactly k/2.
    report.degree_dichotomy = true;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 3 && g.degree(v) != half) report.degree_dichotomy = false;

    // (d) a maximum matching with an edge at the apex.
    int x = *report.apex;
    for (int y = 0; y < g.n; ++y) {
        if (!g.has_edge(x, y)) continue;
        std::vector<int> others;
        for (int v = 0; v < g.n; ++v)
            if (v != x && v != y) others.push_back(v);
        SimpleGraph reduced = induced_subgraph(g, others);
        if (matching_number(reduced) == report.beta - 1) {
            auto rest = maximum_matching(reduced);
            report.matching_at_apex.emplace_back(std::min(x, y), std::max(x, y));
            for (auto [u, v] : rest)
                report.matching_at_apex.emplace_back(others[u], others[v]);
            break;
        }
    }
    return report;
}

ConstantBalResult constant_bal_predicate(const SimpleGraph& g) {
    int k = g.edge_count();
    if (k < 2) throw std::invalid_argument("constant_bal_predicate needs e(G) >= 2");
    if (k % 2 == 0) return {in_Ck(g).member, std::nullopt};
    for (auto [u, v] : g.edges()) {
        SimpleGraph h = g;
        h.remove_edge(u, v);
        if (in_Ck(h).member) return {true, std::make_pair(u, v)};
    }
    return {false, std::nullopt};
}

TwoSquares two_squares(int t) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    TwoSquares out;
    for (int a = 0; a * a <= t; ++a)
        for (int b = a; a * a + b * b <= t; ++b)
            if (a * a + b * b == t) {
                out.nonnegative = true;
                if (a >= 1) out.positive = true;
            }
    return out;
}

} // namespace unav
