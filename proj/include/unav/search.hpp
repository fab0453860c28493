#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unav/coloring.hpp"
#include "unav/graph.hpp"
#include "unav/patterns.hpp"

namespace unav {

// Exact value plus a witness and search statistics. Witness colorings are
// canonically relabeled, so results are identical across worker counts and
// enumeration modes. wall_seconds is informational and excluded from the
// canonical JSON serialization.
struct ExtremalCertificate {
    std::string quantity;
    std::vector<std::pair<std::string, long long>> params;
    std::string family_name; // ex2 searches only
    long long value = 0;
    std::optional<TwoColoring> witness_coloring;
    std::optional<SimpleGraph> witness_graph;
    bool exhaustive = true;
    bool max_possible = false; // value equals floor(C(n,2)/2)
    unsigned long long nodes_searched = 0;
    double wall_seconds = 0;
};

enum class SearchMode { raw, canonical, automatic };

// Largest min{e(R), e(B)} over 2-colorings of K_n with no induced
// monochromatic member of the family. Raw mode scans all 2^{n(n-1)/2} red
// masks (n <= 8); canonical mode scans isomorphism classes (n <= 10).
// Throws if the family contains a complete or empty member.
ExtremalCertificate ex2_exact(int n, const PatternFamily& family,
                              SearchMode mode = SearchMode::automatic, int workers = 1);

// Largest min{e(R), e(B)} over colorings containing no balanced copy of G
// (the forcing definition from the abstract). Value -1 means every coloring
// of K_n contains a balanced copy. max_possible flags value = floor(C(n,2)/2),
// i.e. G is not forced at this n by any min-class threshold.
ExtremalCertificate bal_exact(int n, const SimpleGraph& g, int workers = 1);

// The family-based route bal(n,G) = ex2(K_n, F(G)); nullopt when F(G)
// contains a complete or empty member and the ex2 value is undefined.
// Always an upper bound for bal_exact's value.
std::optional<ExtremalCertificate> bal_via_half_family(int n, const SimpleGraph& g,
                                                       int workers = 1);

struct RamseyCheck {
    bool forced = false;                  // every coloring has the target
    std::optional<TwoColoring> witness;   // a coloring without it, if any
    std::optional<SimpleGraph> witness_bipartite; // bipartite case: red cross graph
    unsigned long long nodes_searched = 0;
};

// True iff every 2-coloring of K_n contains a monochromatic K_k (canonical
// enumeration, n <= 8).
RamseyCheck ramsey_check(int k, int n);

struct ValueWithProvenance {
    int value = 0;
    std::string provenance; // "computed" or "literature"
};

// R(k): recomputed for k <= 3; k = 4 comes from the literature table and
// requires allow_literature. Throws beyond the known range.
ValueWithProvenance ramsey_value(int k, bool allow_literature = true);

// True iff every 2-coloring of K_{n,n} contains a monochromatic K_{t,t}
// (exhaustive with row-symmetry pruning, n <= 5).
RamseyCheck bipartite_ramsey_check(int t, int n);

// BR(t): recomputed for t <= 2; t = 3 from the literature with the flag.
ValueWithProvenance bipartite_ramsey_value(int t, bool allow_literature = true);

// Exact Zarankiewicz number z(m,n;s,t): maximum edges of a bipartite graph
// with parts X (size m), Y (size n) and no K_{s,t} having s vertices in X
// and t in Y. Branch and bound over row masks with symmetry breaking.
ExtremalCertificate zarankiewicz_exact(int m, int n, int s, int t);

// The constant-regime forcing threshold r(2 R(2t)^2 - 6 R(2t) + 5); throws
// when R(2t) is unknown.
long long constant_regime_threshold(int r, int t);

// Canonical relabeling of a coloring's red graph.
TwoColoring canonicalize_coloring(const TwoColoring& c);

} // namespace unav
