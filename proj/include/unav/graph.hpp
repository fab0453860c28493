#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unav {

// Hard cap on vertex counts; everything in this toolkit is desk-scale.
inline constexpr int kMaxVertices = 128;

using VertexSet = std::bitset<kMaxVertices>;

// Labeled undirected graph on vertex set {0..n-1}.
// Adjacency is kept as one bitset row per vertex so that neighborhood
// intersections and degree counts are popcount operations.
struct SimpleGraph {
    int n = 0;
    std::vector<VertexSet> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n_);

    bool has_edge(int u, int v) const { return adj[u].test(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const { return static_cast<int>(adj[v].count()); }
    int edge_count() const;
    int max_degree() const;
    bool is_isolated(int v) const { return adj[v].none(); }

    // Edges as (i,j) with i<j, ordered by pair_index.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const SimpleGraph&) const = default;
};

// --- construction -----------------------------------------------------------

// Builds a graph with exactly the listed edges; duplicates collapse.
// Throws std::invalid_argument on out-of-range vertices or self-loops.
SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

SimpleGraph complement(const SimpleGraph& g);
SimpleGraph disjoint_union(const std::vector<SimpleGraph>& parts);
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts);
// Drops isolated vertices, relabeling the rest in order.
SimpleGraph strip_isolated(const SimpleGraph& g);

std::vector<std::vector<int>> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool is_complete_graph(const SimpleGraph& g);
bool is_empty_graph(const SimpleGraph& g);

// --- named generators -------------------------------------------------------

enum class GraphKind {
    complete,            // K_n
    empty,               // no edges
    path,                // P_n
    cycle,               // C_n
    star,                // K_{1,t}
    matching,            // rK_2
    complete_bipartite,  // K_{s,t}
    complete_split,      // S_{s,t}: s-clique joined to t independent vertices
    staircase_split,     // H_t: clique side B, independent side A, v_i v_{t+j} iff j <= i
    staircase_bipartite, // E_t: both sides independent, same staircase rule
};

struct NamedGraph {
    GraphKind kind;
    int a = 0;
    int b = 0;
};

// Throws std::invalid_argument on non-positive parameters.
SimpleGraph generate_named(const NamedGraph& named);

SimpleGraph complete_graph(int n);
SimpleGraph empty_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph star_graph(int t);
SimpleGraph matching_graph(int r);
SimpleGraph complete_bipartite(int s, int t);
SimpleGraph complete_split(int s, int t);
SimpleGraph staircase_split(int t);
SimpleGraph staircase_bipartite(int t);

// Parses generator names like "K:5", "K:2,3", "S:2,2", "star:3", "matching:2",
// "path:4", "cycle:5", "H_t:3", "E_t:3", "empty:4". Returns nullopt if the
// text is not a recognized named-graph reference.
std::optional<NamedGraph> parse_named(const std::string& text);
std::string named_to_string(const NamedGraph& named);

// --- edge masks -------------------------------------------------------------

// Pair (i,j) with i<j maps to bit j*(j-1)/2 + i: column-wise upper triangle,
// the same order graph6 uses.
inline int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}
inline int pair_count(int n) { return n * (n - 1) / 2; }

// Edge set as a bitmask over pair indices; requires pair_count(n) <= 64.
uint64_t edge_mask(const SimpleGraph& g);
SimpleGraph graph_from_mask(int n, uint64_t mask);

} // namespace unav
