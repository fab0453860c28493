#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unav/graph.hpp"
#include "unav/patterns.hpp"

namespace unav {

// Half-edge family F(G); see family_half in patterns.hpp.
inline PatternFamily half_family(const SimpleGraph& g, bool keep_isolated = false) {
    return family_half(g, keep_isolated);
}

// Witness for the balanceability characterization: a vertex partition whose
// cut and a vertex subset whose inside both carry floor(e/2) or ceil(e/2)
// edges.
struct BalanceWitness {
    std::vector<int> x_side; // X; Y is the complement
    std::vector<int> w_set;  // W
    int cut_edges = 0;       // e(X, Y)
    int inside_edges = 0;    // e(W)
};

// Exhaustive subset scan (n(G) <= 24). Returns a witness iff one exists.
std::optional<BalanceWitness> charBP_witness(const SimpleGraph& g);

// The explicit closed-form witness for K_{t,t} with parts A = {0..t-1},
// B = {t..2t-1}: both counts equal floor(t^2/2).
BalanceWitness ktt_witness(int t);

// Membership report for the constant-balancing family C_k (k = e(G) even,
// matching number >= k/2, a vertex of degree k/2), with the structural
// witnesses that members must admit.
struct CkReport {
    int k = 0;
    int beta = 0;
    std::optional<int> apex; // a vertex of degree k/2
    bool member = false;

    bool beta_at_most = false; // (a) beta <= k/2 + 1
    struct Decomposition {     // (b) G - e = star at the apex + matching
        std::pair<int, int> removed_edge;
        int star_center = -1;
        std::vector<int> star_leaves;
        std::vector<std::pair<int, int>> matching;
    };
    std::optional<Decomposition> decomposition;
    bool degree_dichotomy = false; // (c) every degree <= 3 or = k/2
    std::vector<std::pair<int, int>> matching_at_apex; // (d) maximum matching touching the apex
};

CkReport in_Ck(const SimpleGraph& g);

// Constant balancing number characterization: even k needs G in C_k, odd k
// needs G - e in C_{k-1} for some edge e (returned).
struct ConstantBalResult {
    bool constant = false;
    std::optional<std::pair<int, int>> removed_edge;
};

ConstantBalResult constant_bal_predicate(const SimpleGraph& g);

// t as a sum of two squares, under both conventions.
struct TwoSquares {
    bool positive = false;    // squares of positive integers
    bool nonnegative = false; // squares of non-negative integers
};

TwoSquares two_squares(int t);

} // namespace unav
