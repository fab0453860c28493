#include "unav/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace unav {

namespace {

// Depth-first search for the lexicographically maximal column code of a
// labeled graph. Column p holds bits adj(perm[p], perm[i]) for i < p, most
// significant bit first, and earlier columns dominate the comparison, so at
// every position only the candidates attaining the maximal column value need
// exploring. Leaves are compared against the best code found so far; in
// fixed-reference mode the reference is the identity code and any branch
// exceeding it aborts the search.
struct CodeSearch {
    const SimpleGraph& g;
    int n;
    bool fixed_ref = false;
    bool exceeded = false;
    bool ref_valid = false;
    std::vector<uint32_t> ref;   // ref[p] = column value at position p
    std::vector<uint32_t> cols;
    std::vector<int> perm;
    std::vector<int> best_perm;
    std::vector<char> used;
    unsigned long long aut_leaves = 0;

    explicit CodeSearch(const SimpleGraph& graph)
        : g(graph), n(graph.n), ref(graph.n, 0), cols(graph.n, 0), perm(graph.n, -1),
          best_perm(graph.n, -1), used(graph.n, 0) {}

    void load_identity_ref() {
        for (int p = 0; p < n; ++p) {
            uint32_t col = 0;
            for (int i = 0; i < p; ++i) col = col << 1 | (g.has_edge(p, i) ? 1 : 0);
            ref[p] = col;
        }
        ref_valid = true;
        fixed_ref = true;
    }

    // rel_equal: current prefix equals the reference prefix.
    void dfs(int p, bool rel_equal) {
        if (exceeded) return;
        if (p == n) {
            if (fixed_ref) {
                ++aut_leaves; // identity-code leaf = an automorphism
                return;
            }
            if (!ref_valid) {
                ref = cols;
                best_perm = perm;
                ref_valid = true;
                aut_leaves = 1;
                return;
            }
            // Authoritative full compare: the reference may have moved since
            // this branch diverged.
            for (int i = 0; i < n; ++i) {
                if (cols[i] > ref[i]) {
                    ref = cols;
                    best_perm = perm;
                    aut_leaves = 1;
                    return;
                }
                if (cols[i] < ref[i]) return;
            }
            ++aut_leaves;
            return;
        }
        uint32_t best_col = 0;
        bool any = false;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint32_t col = 0;
            for (int i = 0; i < p; ++i) col = col << 1 | (g.has_edge(v, perm[i]) ? 1 : 0);
            if (!any || col > best_col) {
                best_col = col;
                any = true;
            }
        }
        bool next_equal = rel_equal;
        if (ref_valid && rel_equal) {
            if (best_col < ref[p]) return; // cannot reach the reference
            if (best_col > ref[p]) {
                if (fixed_ref) {
                    exceeded = true;
                    return;
                }
                next_equal = false;
            }
        }
        for (int v = 0; v < n && !exceeded; ++v) {
            if (used[v]) continue;
            uint32_t col = 0;
            for (int i = 0; i < p; ++i) col = col << 1 | (g.has_edge(v, perm[i]) ? 1 : 0);
            if (col != best_col) continue;
            used[v] = 1;
            perm[p] = v;
            cols[p] = col;
            dfs(p + 1, next_equal);
            used[v] = 0;
        }
    }
};

std::string cols_to_cert(int n, const std::vector<uint32_t>& cols) {
    // Bits in pair-index order, hex packed.
    std::string bits;
    bits.reserve(pair_count(n));
    for (int p = 1; p < n; ++p)
        for (int i = 0; i < p; ++i) bits.push_back((cols[p] >> (p - 1 - i) & 1) ? '1' : '0');
    static const char* hexd = "0123456789abcdef";
    std::string out;
    int acc = 0, nb = 0;
    for (char b : bits) {
        acc = acc << 1 | (b == '1');
        if (++nb == 4) {
            out.push_back(hexd[acc]);
            acc = 0;
            nb = 0;
        }
    }
    if (nb) out.push_back(hexd[acc << (4 - nb)]);
    return out;
}

struct ComponentCanon {
    std::vector<int> vertices;   // original ids in component, sorted
    std::vector<int> best_perm;  // positions into `vertices`
    std::string cert;            // "<size>:<hex>"
    unsigned long long aut = 1;
};

ComponentCanon canonicalize_component(const SimpleGraph& g, const std::vector<int>& verts) {
    ComponentCanon out;
    out.vertices = verts;
    SimpleGraph sub = induced_subgraph(g, verts);
    CodeSearch search(sub);
    search.dfs(0, true);
    out.best_perm = search.best_perm;
    out.cert = std::to_string(sub.n) + ":" + cols_to_cert(sub.n, search.ref);
    out.aut = search.aut_leaves;
    return out;
}

} // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
    if (g.n == 0) return {{}, "0#"};
    auto comps = connected_components(g);
    std::vector<ComponentCanon> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) parts.push_back(canonicalize_component(g, c));
    std::sort(parts.begin(), parts.end(), [](const ComponentCanon& a, const ComponentCanon& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
        return a.cert < b.cert;
    });
    CanonicalForm result;
    result.certificate = std::to_string(g.n) + "#";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) result.certificate.push_back('|');
        result.certificate += parts[i].cert;
        for (int pos : parts[i].best_perm) result.labeling.push_back(parts[i].vertices[pos]);
    }
    return result;
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).certificate == canonical_form(b).certificate;
}

unsigned long long automorphism_count(const SimpleGraph& g) {
    if (g.n == 0) return 1;
    auto comps = connected_components(g);
    std::map<std::string, std::pair<unsigned long long, unsigned long long>> groups; // cert -> (aut, count)
    for (const auto& c : comps) {
        auto canon = canonicalize_component(g, c);
        auto& entry = groups[canon.cert];
        entry.first = canon.aut;
        entry.second += 1;
    }
    unsigned long long total = 1;
    for (const auto& [cert, info] : groups) {
        auto [aut, count] = info;
        for (unsigned long long i = 0; i < count; ++i) total *= aut;
        for (unsigned long long i = 2; i <= count; ++i) total *= i; // interchange of equal components
    }
    return total;
}

bool is_identity_max(const SimpleGraph& g) {
    if (g.n <= 1) return true;
    // With any edge present, the maximal code starts with a 1.
    if (g.edge_count() > 0 && !g.has_edge(0, 1)) return false;
    CodeSearch search(g);
    search.load_identity_ref();
    search.dfs(0, true);
    return !search.exceeded;
}

namespace {

bool extend_orderly(const SimpleGraph& g, int target_n,
                    const std::function<bool(const SimpleGraph&)>& visit) {
    if (g.n == target_n) return visit(g);
    SimpleGraph next(g.n + 1);
    for (auto [u, v] : g.edges()) next.add_edge(u, v);
    int m = g.n;
    for (uint32_t colmask = 0; colmask < (uint32_t{1} << m); ++colmask) {
        for (int i = 0; i < m; ++i)
            if (colmask >> i & 1) next.add_edge(m, i);
        if (is_identity_max(next)) {
            if (!extend_orderly(next, target_n, visit)) return false;
        }
        for (int i = 0; i < m; ++i) next.remove_edge(m, i);
    }
    return true;
}

} // namespace

void for_each_graph_on_vertices(int n, const std::function<bool(const SimpleGraph&)>& visit) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n == 0) {
        visit(SimpleGraph(0));
        return;
    }
    extend_orderly(SimpleGraph(1), n, visit);
}

std::vector<SimpleGraph> enumerate_graphs(int k_edges, bool min_degree_one) {
    if (k_edges < 0) throw std::invalid_argument("negative edge count");
    if (k_edges > 9) throw std::invalid_argument("edge count too large for exhaustive mode (max 9)");
    // Level-by-level growth: every graph with k edges and no isolated vertex
    // arises from one with k-1 edges by adding an edge on 0, 1 or 2 fresh
    // vertices. Deduplicate levels by canonical certificate.
    std::vector<SimpleGraph> level{SimpleGraph(0)};
    for (int k = 1; k <= k_edges; ++k) {
        std::map<std::string, SimpleGraph> next;
        auto offer = [&](const SimpleGraph& g) {
            auto cert = canonical_form(g).certificate;
            next.emplace(cert, g);
        };
        for (const auto& g : level) {
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v)
                    if (!g.has_edge(u, v)) {
                        SimpleGraph h = g;
                        h.add_edge(u, v);
                        offer(h);
                    }
            for (int u = 0; u < g.n; ++u) {
                SimpleGraph h(g.n + 1);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                h.add_edge(g.n, u);
                offer(h);
            }
            {
                SimpleGraph h(g.n + 2);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                h.add_edge(g.n, g.n + 1);
                offer(h);
            }
        }
        level.clear();
        for (auto& [cert, g] : next) level.push_back(std::move(g));
    }
    if (min_degree_one || k_edges == 0) return level;
    std::vector<SimpleGraph> padded;
    for (const auto& g : level)
        for (int total = g.n; total <= 2 * k_edges; ++total) {
            SimpleGraph h(total);
            for (auto [a, b] : g.edges()) h.add_edge(a, b);
            padded.push_back(std::move(h));
        }
    return padded;
}

} // namespace unav
