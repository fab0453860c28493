#pragma once

#include <functional>
#include <string>
#include <vector>

#include "unav/graph.hpp"

namespace unav {

// Canonical labeling + certificate. Two graphs are isomorphic iff their
// certificates are equal. labeling[p] = original vertex placed at position p.
struct CanonicalForm {
    std::vector<int> labeling;
    std::string certificate;
};

// Backtracking max-code canonicalization, decomposed over connected
// components so sparse unions (e.g. rK_2) stay cheap. Intended for small n.
CanonicalForm canonical_form(const SimpleGraph& g);

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// |Aut(G)|, via the same search (leaves of the max-code tree).
unsigned long long automorphism_count(const SimpleGraph& g);

// True iff the identity labeling attains the maximum column code, i.e. the
// graph is its own canonical representative under vertex extension order.
// This is the canonicity test of the orderly generator below.
bool is_identity_max(const SimpleGraph& g);

// Streams exactly one representative per isomorphism class of graphs on n
// labeled vertices (isolated vertices included), by orderly generation:
// extend by one vertex, keep extensions whose identity labeling is maximal.
// Return false from the visitor to stop early.
void for_each_graph_on_vertices(int n, const std::function<bool(const SimpleGraph&)>& visit);

// All isomorphism classes with exactly k_edges edges and minimum degree >= 1
// (vertex counts range up to 2*k_edges). With min_degree_one = false, each
// class is additionally emitted padded with isolated vertices for every
// total vertex count up to 2*k_edges. Exhaustive mode requires k_edges <= 9.
std::vector<SimpleGraph> enumerate_graphs(int k_edges, bool min_degree_one = true);

} // namespace unav
