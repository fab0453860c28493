#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unav/coloring.hpp"
#include "unav/graph.hpp"

namespace unav {

enum class Containment { induced_mono, weakly_induced_mono };

struct PatternMember {
    SimpleGraph pattern;
    Containment mode = Containment::induced_mono;
};

// A list of forbidden/forced patterns. Families built by family_F/family_L
// are always legal for ex2 searches; half-edge families F(G) may contain
// complete members (e.g. K_2) and are validated at the point of use.
struct PatternFamily {
    std::string name;
    std::vector<PatternMember> members;

    // Throws if some member is complete or empty (illegal under the ex2
    // definition) or a weakly-induced member is connected.
    void validate_for_ex2() const;
};

PatternFamily family_F(int s, int t);          // {K_{s,t}, S_{t,t}}
PatternFamily family_L(int r, int s, int t);   // {rK_2} + F_{s,t}
PatternFamily family_single(const SimpleGraph& g, Containment mode = Containment::induced_mono,
                            const std::string& name = "");

// Half-edge family F(G): spanning edge subsets of G with floor(e/2) or
// ceil(e/2) edges, one representative per isomorphism class. Isolated
// vertices are stripped unless keep_isolated is set. May contain complete
// members (e.g. K_2); callers that need an ex2-legal family must validate.
PatternFamily family_half(const SimpleGraph& g, bool keep_isolated = false);

enum class WitnessColor { red, blue };

struct PatternWitness {
    WitnessColor color = WitnessColor::red;
    std::vector<int> vertices;                   // image of the pattern
    std::vector<std::pair<int, int>> copy_edges; // balanced copies only
    int red_edges = -1;                          // balanced copies only
};

// Induced subgraph search: a vertex set U with host[U] isomorphic to the
// pattern, as an image indexed by pattern vertex. Backtracking with
// rarest-degree-first pattern ordering and degree pruning.
std::optional<std::vector<int>> find_induced(const SimpleGraph& host, const SimpleGraph& pattern);

// Ordinary (not necessarily induced) subgraph embedding.
std::optional<std::vector<int>> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern);

// Induced monochromatic copy of H in either color. Searches H and
// complement(H) in the red graph only; a complement match is a blue witness.
std::optional<PatternWitness> find_induced_mono(const TwoColoring& c, const SimpleGraph& h);

struct AvoidReport {
    bool avoids = true;
    int member_index = -1;
    std::optional<PatternWitness> witness;
};

AvoidReport avoids_family(const TwoColoring& c, const PatternFamily& family);

// Embeds a disconnected H so that each component is an ordinary subgraph of
// the host and the host has no edge between images of distinct components.
// With induced_components, component images must additionally be induced.
std::optional<std::vector<int>> find_weakly_induced(const SimpleGraph& host, const SimpleGraph& h,
                                                    bool induced_components = false);

// A copy of G in K_n with floor(e/2) or ceil(e/2) red edges.
std::optional<PatternWitness> find_balanced_copy(const TwoColoring& c, const SimpleGraph& g);

// Copies of G inside K_n as edge masks, one per distinct mask (automorphic
// duplicates collapse); shared cache keyed by (n, certificate of G).
struct CopySet {
    int pattern_vertices = 0;
    int pattern_edges = 0;
    std::vector<uint64_t> masks;
    std::vector<std::vector<int>> embeddings; // core embedding per mask
};
const CopySet& copy_masks(int n, const SimpleGraph& g);

// Column-alignment extraction: given an m x q layout of distinct vertices,
// finds L with |L| = ell such that every row's selected vertices induce a
// monochromatic clique. Iterative row-by-row shrinking when the layout is
// wide enough for the known Ramsey targets, exhaustive scan for q <= 20.
std::optional<std::vector<int>> grid_alignment(const TwoColoring& c,
                                               const std::vector<std::vector<int>>& layout, int ell);

// Mask-compiled avoidance checker for tight enumeration loops. Members on
// at most 6 vertices with induced-mono containment are table lookups; other
// members fall back to the general detectors.
class FamilyChecker {
  public:
    FamilyChecker(int n, const PatternFamily& family);
    bool violates(uint64_t red_mask) const;
    int host_vertices() const { return n_; }

  private:
    struct Group {
        int p = 0;
        int bits = 0;
        std::vector<int> subset_bits; // C(n,p) blocks of C(p,2) global pair indices
        std::vector<uint8_t> table;   // 2^{C(p,2)} entries
    };
    int n_ = 0;
    std::vector<Group> groups_;
    std::vector<PatternMember> fallback_;
};

} // namespace unav
