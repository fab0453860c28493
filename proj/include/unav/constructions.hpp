#pragma once

#include "unav/coloring.hpp"
#include "unav/graph.hpp"

namespace unav {

// red = maximum matching of K_n; min class = floor(n/2).
TwoColoring matching_coloring(int n);

// red = K_{1,n-1}; min class = n-1.
TwoColoring star_coloring(int n);

// blue = floor(n/(t-1)) disjoint (t-1)-cliques; no induced monochromatic K_{1,t}.
TwoColoring clique_blowup_coloring(int n, int t);

// With w = min(r,s): parts V_1..V_{w-1} of size t-1 first in vertex order, W
// last; red = inside W plus between distinct V_i, V_j; blue = the rest.
// Avoids {rK_2, K_{s,t}, S_{t,t}} (checked by the detectors, not assumed).
TwoColoring layered_coloring(int n, int r, int s, int t);

// Point-line incidence graph of PG(2,q), q prime: bipartite, C_4-free,
// (q+1)-regular on 2(q^2+q+1) vertices.
SimpleGraph incidence_bipartite(int q);

// blue = incidence_bipartite(q) padded with isolated vertices to n; red = rest.
TwoColoring bipartite_free_coloring(int n, int q);

// As bipartite_free_coloring but with a caller-supplied bipartite blue graph.
TwoColoring coloring_with_blue(int n, const SimpleGraph& blue);

// Parts P_1..P_{k-1} as equal as possible; edges inside P_i get color i,
// cross edges get color k.
KColoring multicolor_partition_coloring(int n, int k);

struct BoundReport {
    int m = 0, n = 0, s = 0, t = 0;
    double zarankiewicz_bound = 0; // (s-1)^{1/t} (n-t+1) m^{1-1/t} + (t-1) m
    double extremal_bound = 0;     // ((t-1)^{1/s} n^{2-1/s} + (s-1) n) / 2
};

// Evaluated in floating point (tolerance 1e-9); for pruning and reporting
// only, never for exact decisions.
BoundReport kst_bounds(int m, int n, int s, int t);

bool is_prime(int q);

} // namespace unav
