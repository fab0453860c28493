#include "unav/algos.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace unav {

namespace {

// Classic O(V^3) blossom algorithm; match[v] = partner or -1.
struct Blossom {
    const SimpleGraph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit Blossom(const SimpleGraph& graph)
        : g(graph), n(graph.n), match(n, -1), parent(n, -1), base(n), used(n, 0), in_blossom(n, 0) {}

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int lca(int a, int b) {
        std::vector<char> on_path(n, 0);
        int x = a;
        while (true) {
            x = base[x];
            on_path[x] = 1;
            if (match[x] == -1) break;
            x = parent[match[x]];
        }
        int y = b;
        while (true) {
            y = base[y];
            if (on_path[y]) return y;
            y = parent[match[y]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to = 0; to < n; ++to) {
                if (!g.has_edge(v, to)) continue;
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void run() {
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_augmenting_path(v);
            while (u != -1) {
                int pv = parent[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
};

} // namespace

std::vector<std::pair<int, int>> maximum_matching(const SimpleGraph& g) {
    Blossom b(g);
    b.run();
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.n; ++v)
        if (b.match[v] > v) out.emplace_back(v, b.match[v]);
    return out;
}

int matching_number(const SimpleGraph& g) {
    return static_cast<int>(maximum_matching(g).size());
}

namespace {

struct IndependenceSearch {
    const SimpleGraph& g;
    int best = 0;

    void rec(VertexSet candidates, int size) {
        int remaining = static_cast<int>(candidates.count());
        if (size + remaining <= best) return;
        if (remaining == 0) {
            best = std::max(best, size);
            return;
        }
        // Branch on a candidate of maximum degree within the candidate set.
        int pick = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (!candidates.test(v)) continue;
            int d = static_cast<int>((g.adj[v] & candidates).count());
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        VertexSet take = candidates;
        take.reset(pick);
        take &= ~g.adj[pick];
        rec(take, size + 1);
        candidates.reset(pick);
        rec(candidates, size);
    }
};

} // namespace

int independence_number(const SimpleGraph& g) {
    IndependenceSearch s{g};
    VertexSet all;
    for (int v = 0; v < g.n; ++v) all.set(v);
    s.rec(all, 0);
    return s.best;
}

int clique_number(const SimpleGraph& g) { return independence_number(complement(g)); }

namespace {

bool clique_rec(const SimpleGraph& g, VertexSet candidates, std::vector<int>& current, int size) {
    if (static_cast<int>(current.size()) == size) return true;
    if (static_cast<int>(current.size() + candidates.count()) < size) return false;
    for (int v = 0; v < g.n; ++v) {
        if (!candidates.test(v)) continue;
        candidates.reset(v);
        current.push_back(v);
        if (clique_rec(g, candidates & g.adj[v], current, size)) return true;
        current.pop_back();
    }
    return false;
}

} // namespace

std::vector<int> find_clique(const SimpleGraph& g, int size) {
    if (size <= 0) return {};
    if (size > g.n) return {};
    VertexSet all;
    for (int v = 0; v < g.n; ++v) all.set(v);
    std::vector<int> current;
    if (clique_rec(g, all, current, size)) return current;
    return {};
}

int StrongEdgeColoring::largest_class_size() const {
    std::vector<int> count(classes, 0);
    for (int c : class_of) ++count[c];
    int best = 0;
    for (int c : count) best = std::max(best, c);
    return best;
}

namespace {

// Two edges conflict in a strong coloring when they share a vertex or some
// edge of g joins their endpoints.
bool strong_conflict(const SimpleGraph& g, std::pair<int, int> e, std::pair<int, int> f) {
    auto [a, b] = e;
    auto [c, d] = f;
    if (a == c || a == d || b == c || b == d) return true;
    return g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d);
}

} // namespace

StrongEdgeColoring greedy_strong_edge_coloring(const SimpleGraph& g) {
    StrongEdgeColoring out;
    out.edge_order = g.edges();
    out.class_of.assign(out.edge_order.size(), -1);
    for (size_t i = 0; i < out.edge_order.size(); ++i) {
        std::vector<char> blocked(out.classes, 0);
        for (size_t j = 0; j < i; ++j)
            if (strong_conflict(g, out.edge_order[i], out.edge_order[j])) blocked[out.class_of[j]] = 1;
        int c = 0;
        while (c < out.classes && blocked[c]) ++c;
        if (c == out.classes) ++out.classes;
        out.class_of[i] = c;
    }
    return out;
}

bool is_valid_strong_edge_coloring(const SimpleGraph& g, const StrongEdgeColoring& c) {
    if (c.edge_order.size() != static_cast<size_t>(g.edge_count())) return false;
    for (size_t i = 0; i < c.edge_order.size(); ++i) {
        auto [a, b] = c.edge_order[i];
        if (!g.has_edge(a, b)) return false;
        for (size_t j = i + 1; j < c.edge_order.size(); ++j)
            if (c.class_of[i] == c.class_of[j] && strong_conflict(g, c.edge_order[i], c.edge_order[j]))
                return false;
    }
    for (int cls : c.class_of)
        if (cls < 0 || cls >= c.classes) return false;
    return true;
}

} // namespace unav
