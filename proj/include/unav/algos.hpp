#pragma once

#include <utility>
#include <vector>

#include "unav/graph.hpp"

namespace unav {

// Maximum matching size via augmenting paths with blossom contraction.
int matching_number(const SimpleGraph& g);

// One maximum matching as an edge list.
std::vector<std::pair<int, int>> maximum_matching(const SimpleGraph& g);

// Exact independence number by branch and bound; intended for small n.
int independence_number(const SimpleGraph& g);

int clique_number(const SimpleGraph& g);

// Any clique of the requested size, or empty if none exists.
std::vector<int> find_clique(const SimpleGraph& g, int size);

struct StrongEdgeColoring {
    int classes = 0;
    std::vector<std::pair<int, int>> edge_order; // edges in assignment order
    std::vector<int> class_of;                   // class per edge, 0-based
    int largest_class_size() const;
};

// Greedy strong edge coloring: each class is an induced matching (no two
// class edges share a vertex or are joined by an edge of g).
StrongEdgeColoring greedy_strong_edge_coloring(const SimpleGraph& g);

// Checks that a class assignment really partitions E(g) into induced matchings.
bool is_valid_strong_edge_coloring(const SimpleGraph& g, const StrongEdgeColoring& c);

} // namespace unav
