#include "unav/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace unav {

SimpleGraph::SimpleGraph(int n_) : n(n_), adj(n_) {
    if (n_ < 0 || n_ > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n_));
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    adj[u].set(v);
    adj[v].set(u);
}

void SimpleGraph::remove_edge(int u, int v) {
    adj[u].reset(v);
    adj[v].reset(u);
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

int SimpleGraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (adj[i].test(j)) out.emplace_back(i, j);
    return out;
}

SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    SimpleGraph g(n);
    for (auto [u, v] : edge_list) g.add_edge(u, v);
    return g;
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

SimpleGraph disjoint_union(const std::vector<SimpleGraph>& parts) {
    int total = 0;
    for (const auto& p : parts) total += p.n;
    SimpleGraph g(total);
    int offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(offset + u, offset + v);
        offset += p.n;
    }
    return g;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts) {
    SimpleGraph h(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

SimpleGraph strip_isolated(const SimpleGraph& g) {
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (!g.is_isolated(v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w = 0; w < g.n; ++w)
                if (g.adj[v].test(w) && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const SimpleGraph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

bool is_complete_graph(const SimpleGraph& g) {
    return g.edge_count() == pair_count(g.n);
}

bool is_empty_graph(const SimpleGraph& g) { return g.edge_count() == 0; }

namespace {

void require_positive(int x, const char* what) {
    if (x <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

} // namespace

SimpleGraph complete_graph(int n) {
    require_positive(n, "n");
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    return SimpleGraph(n);
}

SimpleGraph path_graph(int n) {
    require_positive(n, "n");
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph star_graph(int t) {
    require_positive(t, "t");
    SimpleGraph g(t + 1);
    for (int v = 1; v <= t; ++v) g.add_edge(0, v);
    return g;
}

SimpleGraph matching_graph(int r) {
    require_positive(r, "r");
    SimpleGraph g(2 * r);
    for (int i = 0; i < r; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

SimpleGraph complete_bipartite(int s, int t) {
    require_positive(s, "s");
    require_positive(t, "t");
    SimpleGraph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
    return g;
}

SimpleGraph complete_split(int s, int t) {
    require_positive(s, "s");
    require_positive(t, "t");
    SimpleGraph g(s + t);
    for (int u = 0; u < s; ++u) {
        for (int v = u + 1; v < s; ++v) g.add_edge(u, v);
        for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
    }
    return g;
}

// A = {0..t-1} independent, B = {t..2t-1}; cross edge (i, t+j) iff j <= i
// (0-indexed). For H_t the B side is a clique, for E_t it is independent.
static SimpleGraph staircase(int t, bool clique_side) {
    require_positive(t, "t");
    SimpleGraph g(2 * t);
    if (clique_side)
        for (int u = t; u < 2 * t; ++u)
            for (int v = u + 1; v < 2 * t; ++v) g.add_edge(u, v);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j <= i; ++j) g.add_edge(i, t + j);
    return g;
}

SimpleGraph staircase_split(int t) { return staircase(t, true); }
SimpleGraph staircase_bipartite(int t) { return staircase(t, false); }

SimpleGraph generate_named(const NamedGraph& named) {
    switch (named.kind) {
        case GraphKind::complete: return complete_graph(named.a);
        case GraphKind::empty: return empty_graph(named.a);
        case GraphKind::path: return path_graph(named.a);
        case GraphKind::cycle: return cycle_graph(named.a);
        case GraphKind::star: return star_graph(named.a);
        case GraphKind::matching: return matching_graph(named.a);
        case GraphKind::complete_bipartite: return complete_bipartite(named.a, named.b);
        case GraphKind::complete_split: return complete_split(named.a, named.b);
        case GraphKind::staircase_split: return staircase_split(named.a);
        case GraphKind::staircase_bipartite: return staircase_bipartite(named.a);
    }
    throw std::invalid_argument("unknown graph kind");
}

std::optional<NamedGraph> parse_named(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string head = text.substr(0, colon);
    std::string args = text.substr(colon + 1);
    int a = 0, b = 0;
    int nargs = 0;
    {
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                int val = std::stoi(tok);
                if (nargs == 0) a = val;
                else if (nargs == 1) b = val;
                else return std::nullopt;
                ++nargs;
            } catch (...) {
                return std::nullopt;
            }
        }
    }
    if (nargs == 0) return std::nullopt;
    if (head == "K") {
        if (nargs == 1) return NamedGraph{GraphKind::complete, a, 0};
        return NamedGraph{GraphKind::complete_bipartite, a, b};
    }
    if (head == "S" && nargs == 2) return NamedGraph{GraphKind::complete_split, a, b};
    if ((head == "star" || head == "K1") && nargs == 1) return NamedGraph{GraphKind::star, a, 0};
    if ((head == "matching" || head == "M") && nargs == 1) return NamedGraph{GraphKind::matching, a, 0};
    if ((head == "path" || head == "P") && nargs == 1) return NamedGraph{GraphKind::path, a, 0};
    if ((head == "cycle" || head == "C") && nargs == 1) return NamedGraph{GraphKind::cycle, a, 0};
    if (head == "empty" && nargs == 1) return NamedGraph{GraphKind::empty, a, 0};
    if ((head == "H_t" || head == "H") && nargs == 1) return NamedGraph{GraphKind::staircase_split, a, 0};
    if ((head == "E_t" || head == "E") && nargs == 1) return NamedGraph{GraphKind::staircase_bipartite, a, 0};
    return std::nullopt;
}

std::string named_to_string(const NamedGraph& named) {
    auto one = [&](const char* name) { return std::string(name) + ":" + std::to_string(named.a); };
    auto two = [&](const char* name) {
        return std::string(name) + ":" + std::to_string(named.a) + "," + std::to_string(named.b);
    };
    switch (named.kind) {
        case GraphKind::complete: return one("K");
        case GraphKind::empty: return one("empty");
        case GraphKind::path: return one("path");
        case GraphKind::cycle: return one("cycle");
        case GraphKind::star: return one("star");
        case GraphKind::matching: return one("matching");
        case GraphKind::complete_bipartite: return two("K");
        case GraphKind::complete_split: return two("S");
        case GraphKind::staircase_split: return one("H_t");
        case GraphKind::staircase_bipartite: return one("E_t");
    }
    return "?";
}

uint64_t edge_mask(const SimpleGraph& g) {
    if (pair_count(g.n) > 64) throw std::invalid_argument("graph too large for a 64-bit edge mask");
    uint64_t mask = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) mask |= uint64_t{1} << pair_index(i, j);
    return mask;
}

SimpleGraph graph_from_mask(int n, uint64_t mask) {
    if (pair_count(n) > 64) throw std::invalid_argument("vertex count too large for a 64-bit edge mask");
    SimpleGraph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_index(i, j) & 1) g.add_edge(i, j);
    return g;
}

} // namespace unav
