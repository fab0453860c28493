#include "unav/patterns.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "unav/algos.hpp"
#include "unav/canonical.hpp"

namespace unav {

void PatternFamily::validate_for_ex2() const {
    for (const auto& m : members) {
        if (m.pattern.n == 0) throw std::invalid_argument("family member is the null graph");
        if (is_complete_graph(m.pattern))
            throw std::invalid_argument("family member is a complete graph");
        if (is_empty_graph(m.pattern)) throw std::invalid_argument("family member is an empty graph");
        if (m.mode == Containment::weakly_induced_mono && is_connected(m.pattern))
            throw std::invalid_argument("weakly-induced member must be disconnected");
    }
}

PatternFamily family_F(int s, int t) {
    if (t < std::max(2, s) || s < 1)
        throw std::invalid_argument("family F_{s,t} needs t >= max(2, s), s >= 1");
    PatternFamily f;
    f.name = "F:" + std::to_string(s) + "," + std::to_string(t);
    f.members.push_back({complete_bipartite(s, t), Containment::induced_mono});
    f.members.push_back({complete_split(t, t), Containment::induced_mono});
    return f;
}

PatternFamily family_L(int r, int s, int t) {
    if (r < 2) throw std::invalid_argument("family L_{r,s,t} needs r >= 2");
    PatternFamily f = family_F(s, t);
    f.name = "L:" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t);
    f.members.insert(f.members.begin(), {matching_graph(r), Containment::induced_mono});
    return f;
}

PatternFamily family_single(const SimpleGraph& g, Containment mode, const std::string& name) {
    PatternFamily f;
    f.name = name;
    f.members.push_back({g, mode});
    return f;
}

PatternFamily family_half(const SimpleGraph& g, bool keep_isolated) {
    int e = g.edge_count();
    if (e < 1) throw std::invalid_argument("half family needs e(G) >= 1");
    if (e > 24) throw std::invalid_argument("half family limited to e(G) <= 24");
    auto all_edges = g.edges();
    int lo = e / 2, hi = (e + 1) / 2;
    std::map<std::string, SimpleGraph> classes;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int remaining) -> void {
        if (remaining == 0) {
            SimpleGraph h(g.n);
            for (int i : pick) h.add_edge(all_edges[i].first, all_edges[i].second);
            if (!keep_isolated) h = strip_isolated(h);
            classes.emplace(canonical_form(h).certificate, h);
            return;
        }
        for (int i = from; i + remaining <= e; ++i) {
            pick.push_back(i);
            self(self, i + 1, remaining - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, lo);
    if (hi != lo) rec(rec, 0, hi);
    PatternFamily f;
    f.name = "half";
    for (auto& [cert, h] : classes) f.members.push_back({h, Containment::induced_mono});
    return f;
}

namespace {

// Rarest degree value first, then higher degree, then vertex id.
std::vector<int> pattern_order(const SimpleGraph& p) {
    std::map<int, int> freq;
    for (int v = 0; v < p.n; ++v) ++freq[p.degree(v)];
    std::vector<int> order(p.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int fa = freq[p.degree(a)], fb = freq[p.degree(b)];
        if (fa != fb) return fa < fb;
        if (p.degree(a) != p.degree(b)) return p.degree(a) > p.degree(b);
        return a < b;
    });
    return order;
}

struct EmbedSearch {
    const SimpleGraph& host;
    const SimpleGraph& pattern;
    bool induced;
    std::vector<int> order;
    std::vector<int> image; // image[pattern vertex] = host vertex
    std::vector<char> used;

    EmbedSearch(const SimpleGraph& h, const SimpleGraph& p, bool ind)
        : host(h), pattern(p), induced(ind), order(pattern_order(p)), image(p.n, -1), used(h.n, 0) {}

    bool rec(int pos) {
        if (pos == pattern.n) return true;
        int v = order[pos];
        for (int w = 0; w < host.n; ++w) {
            if (used[w] || host.degree(w) < pattern.degree(v)) continue;
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q) {
                bool pe = pattern.has_edge(v, order[q]);
                bool he = host.has_edge(w, image[order[q]]);
                ok = induced ? (pe == he) : (!pe || he);
            }
            if (!ok) continue;
            used[w] = 1;
            image[v] = w;
            if (rec(pos + 1)) return true;
            used[w] = 0;
            image[v] = -1;
        }
        return false;
    }
};

std::optional<std::vector<int>> embed(const SimpleGraph& host, const SimpleGraph& pattern, bool induced) {
    if (pattern.n > host.n) return std::nullopt;
    if (pattern.n == 0) return std::vector<int>{};
    EmbedSearch s(host, pattern, induced);
    if (s.rec(0)) return s.image;
    return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> find_induced(const SimpleGraph& host, const SimpleGraph& pattern) {
    return embed(host, pattern, true);
}

std::optional<std::vector<int>> find_subgraph(const SimpleGraph& host, const SimpleGraph& pattern) {
    return embed(host, pattern, false);
}

std::optional<PatternWitness> find_induced_mono(const TwoColoring& c, const SimpleGraph& h) {
    if (auto img = find_induced(c.red, h)) {
        PatternWitness w;
        w.color = WitnessColor::red;
        w.vertices = *img;
        return w;
    }
    if (auto img = find_induced(c.red, complement(h))) {
        PatternWitness w;
        w.color = WitnessColor::blue;
        w.vertices = *img;
        return w;
    }
    return std::nullopt;
}

AvoidReport avoids_family(const TwoColoring& c, const PatternFamily& family) {
    for (size_t i = 0; i < family.members.size(); ++i) {
        const auto& m = family.members[i];
        if (m.mode == Containment::induced_mono) {
            if (auto w = find_induced_mono(c, m.pattern))
                return {false, static_cast<int>(i), std::move(w)};
        } else {
            if (auto img = find_weakly_induced(c.red, m.pattern)) {
                PatternWitness w;
                w.color = WitnessColor::red;
                w.vertices = *img;
                return {false, static_cast<int>(i), std::move(w)};
            }
            if (auto img = find_weakly_induced(c.blue(), m.pattern)) {
                PatternWitness w;
                w.color = WitnessColor::blue;
                w.vertices = *img;
                return {false, static_cast<int>(i), std::move(w)};
            }
        }
    }
    return {};
}

namespace {

struct WeakEmbed {
    const SimpleGraph& host;
    const SimpleGraph& pattern;
    bool induced_components;
    std::vector<std::vector<int>> comps; // pattern components, largest first
    std::vector<int> comp_of;            // pattern vertex -> component index
    std::vector<int> image;
    std::vector<char> used;

    WeakEmbed(const SimpleGraph& h, const SimpleGraph& p, bool ind)
        : host(h), pattern(p), induced_components(ind), comp_of(p.n), image(p.n, -1), used(h.n, 0) {
        comps = connected_components(p);
        std::sort(comps.begin(), comps.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        for (size_t ci = 0; ci < comps.size(); ++ci)
            for (int v : comps[ci]) comp_of[v] = static_cast<int>(ci);
    }

    bool rec(int ci, int pos) {
        if (ci == static_cast<int>(comps.size())) return true;
        if (pos == static_cast<int>(comps[ci].size())) return rec(ci + 1, 0);
        int v = comps[ci][pos];
        for (int w = 0; w < host.n; ++w) {
            if (used[w] || host.degree(w) < pattern.degree(v)) continue;
            bool ok = true;
            // Within the component: subgraph (or induced) consistency.
            for (int q = 0; q < pos && ok; ++q) {
                int u = comps[ci][q];
                bool pe = pattern.has_edge(v, u);
                bool he = host.has_edge(w, image[u]);
                ok = induced_components ? (pe == he) : (!pe || he);
            }
            // Across components: no host edge at all.
            for (int u = 0; u < pattern.n && ok; ++u)
                if (image[u] >= 0 && comp_of[u] != ci && host.has_edge(w, image[u])) ok = false;
            if (!ok) continue;
            used[w] = 1;
            image[v] = w;
            if (rec(ci, pos + 1)) return true;
            used[w] = 0;
            image[v] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_weakly_induced(const SimpleGraph& host, const SimpleGraph& h,
                                                    bool induced_components) {
    if (h.n > host.n) return std::nullopt;
    if (h.n == 0) return std::vector<int>{};
    WeakEmbed s(host, h, induced_components);
    if (s.rec(0, 0)) return s.image;
    return std::nullopt;
}

namespace {

struct CopyCacheKey {
    int n;
    std::string cert;
    bool operator<(const CopyCacheKey& o) const {
        return n != o.n ? n < o.n : cert < o.cert;
    }
};

std::mutex copy_cache_mutex;
std::map<CopyCacheKey, CopySet> copy_cache; // single-initialization, read-mostly

CopySet build_copy_set(int n, const SimpleGraph& g) {
    CopySet out;
    out.pattern_vertices = g.n;
    out.pattern_edges = g.edge_count();
    SimpleGraph core = strip_isolated(g);
    std::vector<int> image(core.n, -1);
    std::vector<char> used(n, 0);
    std::unordered_set<uint64_t> seen;
    // All injective placements of the core; masks dedup automorphic copies.
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == core.n) {
            uint64_t mask = 0;
            for (auto [u, v] : core.edges()) mask |= uint64_t{1} << pair_index(image[u], image[v]);
            if (seen.insert(mask).second) {
                out.masks.push_back(mask);
                out.embeddings.push_back(image);
            }
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            used[w] = 1;
            image[pos] = w;
            self(self, pos + 1);
            used[w] = 0;
        }
    };
    if (core.n <= n) rec(rec, 0);
    std::vector<size_t> idx(out.masks.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return out.masks[a] < out.masks[b]; });
    CopySet sorted;
    sorted.pattern_vertices = out.pattern_vertices;
    sorted.pattern_edges = out.pattern_edges;
    for (size_t i : idx) {
        sorted.masks.push_back(out.masks[i]);
        sorted.embeddings.push_back(std::move(out.embeddings[i]));
    }
    return sorted;
}

} // namespace

const CopySet& copy_masks(int n, const SimpleGraph& g) {
    if (pair_count(n) > 64) throw std::invalid_argument("host too large for edge masks");
    CopyCacheKey key{n, canonical_form(g).certificate};
    std::lock_guard<std::mutex> lock(copy_cache_mutex);
    auto it = copy_cache.find(key);
    if (it == copy_cache.end()) it = copy_cache.emplace(key, build_copy_set(n, g)).first;
    return it->second;
}

namespace {

// Injective backtracking for hosts too large for edge masks: place the core
// vertices one by one, pruning once the red count can no longer land in
// {lo, hi}.
std::optional<PatternWitness> balanced_by_backtracking(const TwoColoring& c, const SimpleGraph& g) {
    SimpleGraph core = strip_isolated(g);
    int e = core.edge_count();
    int lo = e / 2, hi = (e + 1) / 2;
    // edges_behind[v] = core edges from v into {0..v-1}.
    std::vector<int> edges_behind(core.n, 0), remaining_after(core.n + 1, 0);
    for (auto [u, v] : core.edges()) ++edges_behind[std::max(u, v)];
    for (int v = core.n - 1; v >= 0; --v)
        remaining_after[v] = remaining_after[v + 1] + edges_behind[v];
    std::vector<int> image(core.n, -1);
    std::vector<char> used(c.n, 0);
    auto rec = [&](auto&& self, int v, int red) -> bool {
        if (red > hi || red + remaining_after[v] < lo) return false;
        if (v == core.n) return red == lo || red == hi;
        for (int w = 0; w < c.n; ++w) {
            if (used[w]) continue;
            int add = 0;
            for (int q = 0; q < v; ++q)
                if (core.has_edge(v, q) && c.is_red(w, image[q])) ++add;
            used[w] = 1;
            image[v] = w;
            if (self(self, v + 1, red + add)) return true;
            used[w] = 0;
        }
        return false;
    };
    if (!rec(rec, 0, 0)) return std::nullopt;
    PatternWitness w;
    w.color = WitnessColor::red;
    w.vertices = image;
    w.red_edges = 0;
    for (auto [u, v] : core.edges()) {
        w.copy_edges.emplace_back(std::min(image[u], image[v]), std::max(image[u], image[v]));
        if (c.is_red(image[u], image[v])) ++w.red_edges;
    }
    std::sort(w.copy_edges.begin(), w.copy_edges.end());
    return w;
}

} // namespace

std::optional<PatternWitness> find_balanced_copy(const TwoColoring& c, const SimpleGraph& g) {
    if (g.n > c.n) return std::nullopt;
    if (g.edge_count() == 0) throw std::invalid_argument("balanced copy needs at least one edge");
    if (pair_count(c.n) > 64) return balanced_by_backtracking(c, g);
    const CopySet& copies = copy_masks(c.n, g);
    int lo = copies.pattern_edges / 2;
    int hi = (copies.pattern_edges + 1) / 2;
    uint64_t red = c.red_mask();
    for (size_t i = 0; i < copies.masks.size(); ++i) {
        int r = static_cast<int>(std::popcount(red & copies.masks[i]));
        if (r == lo || r == hi) {
            PatternWitness w;
            w.color = WitnessColor::red;
            w.vertices = copies.embeddings[i];
            w.red_edges = r;
            for (int j = 1; j < c.n; ++j)
                for (int k = 0; k < j; ++k)
                    if (copies.masks[i] >> pair_index(k, j) & 1) w.copy_edges.emplace_back(k, j);
            return w;
        }
    }
    return std::nullopt;
}

namespace {

// Known diagonal 2-color Ramsey values, for the iterative strategy targets.
int small_ramsey(int k) {
    switch (k) {
        case 1: return 1;
        case 2: return 2;
        case 3: return 6;
        case 4: return 18;
        default: return -1;
    }
}

bool row_is_mono(const TwoColoring& c, const std::vector<int>& row, const std::vector<int>& cols) {
    if (cols.size() <= 1) return true;
    bool first = c.is_red(row[cols[0]], row[cols[1]]);
    for (size_t a = 0; a < cols.size(); ++a)
        for (size_t b = a + 1; b < cols.size(); ++b)
            if (c.is_red(row[cols[a]], row[cols[b]]) != first) return false;
    return true;
}

std::optional<std::vector<int>> grid_exhaustive(const TwoColoring& c,
                                                const std::vector<std::vector<int>>& layout, int ell) {
    int q = static_cast<int>(layout[0].size());
    std::vector<int> pick(ell);
    auto rec = [&](auto&& self, int pos, int from) -> bool {
        if (pos == ell) {
            for (const auto& row : layout)
                if (!row_is_mono(c, row, pick)) return false;
            return true;
        }
        for (int j = from; j < q; ++j) {
            pick[pos] = j;
            if (self(self, pos + 1, j + 1)) return true;
        }
        return false;
    };
    if (rec(rec, 0, 0)) return pick;
    return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> grid_alignment(const TwoColoring& c,
                                               const std::vector<std::vector<int>>& layout, int ell) {
    if (layout.empty()) throw std::invalid_argument("empty layout");
    int m = static_cast<int>(layout.size());
    int q = static_cast<int>(layout[0].size());
    std::vector<char> seen(c.n, 0);
    for (const auto& row : layout) {
        if (static_cast<int>(row.size()) != q) throw std::invalid_argument("layout is not rectangular");
        for (int v : row) {
            if (v < 0 || v >= c.n) throw std::invalid_argument("layout vertex out of range");
            if (seen[v]) throw std::invalid_argument("layout vertices must be distinct");
            seen[v] = 1;
        }
    }
    if (ell < 1 || ell > q) return std::nullopt;

    // Targets R^{m-1}(ell), ..., R^0(ell) = ell for the row-by-row strategy.
    std::vector<int> targets(m);
    bool table_ok = true;
    targets[m - 1] = ell;
    for (int i = m - 2; i >= 0 && table_ok; --i) {
        int r = small_ramsey(targets[i + 1]);
        if (r < 0) table_ok = false;
        else targets[i] = r;
    }
    int needed = table_ok ? small_ramsey(targets[0]) : -1;
    if (table_ok && needed > 0 && q >= needed) {
        std::vector<int> cols(q);
        std::iota(cols.begin(), cols.end(), 0);
        for (int i = 0; i < m; ++i) {
            // Monochromatic clique of size targets[i] within the current columns.
            std::vector<int> verts;
            for (int j : cols) verts.push_back(layout[i][j]);
            SimpleGraph red_sub = induced_subgraph(c.red, verts);
            std::vector<int> found = find_clique(red_sub, targets[i]);
            if (found.empty()) found = find_clique(complement(red_sub), targets[i]);
            if (found.empty()) break; // fall through to the exhaustive scan
            std::sort(found.begin(), found.end());
            std::vector<int> next;
            for (int pos : found) next.push_back(cols[pos]);
            cols = std::move(next);
            if (i == m - 1) return cols;
        }
    }
    if (q <= 20) return grid_exhaustive(c, layout, ell);
    throw std::invalid_argument("layout too wide for exhaustive search and Ramsey targets unknown");
}

FamilyChecker::FamilyChecker(int n, const PatternFamily& family) : n_(n) {
    if (pair_count(n) > 64) throw std::invalid_argument("host too large for mask checker");
    std::map<int, std::vector<const SimpleGraph*>> by_size;
    for (const auto& m : family.members) {
        if (m.mode == Containment::induced_mono && m.pattern.n <= 6 && m.pattern.n <= n)
            by_size[m.pattern.n].push_back(&m.pattern);
        else if (m.pattern.n <= n)
            fallback_.push_back(m);
    }
    for (auto& [p, patterns] : by_size) {
        Group g;
        g.p = p;
        g.bits = pair_count(p);
        g.table.assign(size_t{1} << g.bits, 0);
        for (const SimpleGraph* pat : patterns) {
            for (int side = 0; side < 2; ++side) {
                SimpleGraph graph = side == 0 ? *pat : complement(*pat);
                std::vector<int> perm(p);
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    uint64_t mask = 0;
                    for (auto [u, v] : graph.edges())
                        mask |= uint64_t{1} << pair_index(perm[u], perm[v]);
                    g.table[mask] = 1;
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
        // All p-subsets of [n], as blocks of global pair indices in local
        // pair order.
        std::vector<int> subset(p);
        auto rec = [&](auto&& self, int pos, int from) -> void {
            if (pos == p) {
                for (int j = 1; j < p; ++j)
                    for (int i = 0; i < j; ++i)
                        g.subset_bits.push_back(pair_index(subset[i], subset[j]));
                return;
            }
            for (int v = from; v < n; ++v) {
                subset[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
        groups_.push_back(std::move(g));
    }
}

bool FamilyChecker::violates(uint64_t red_mask) const {
    for (const auto& g : groups_) {
        size_t blocks = g.subset_bits.size() / g.bits;
        const int* bits = g.subset_bits.data();
        for (size_t s = 0; s < blocks; ++s, bits += g.bits) {
            uint64_t local = 0;
            for (int b = 0; b < g.bits; ++b) local |= (red_mask >> bits[b] & 1) << b;
            if (g.table[local]) return true;
        }
    }
    if (!fallback_.empty()) {
        TwoColoring c = coloring_from_mask(n_, red_mask);
        for (const auto& m : fallback_) {
            if (m.mode == Containment::induced_mono) {
                if (find_induced_mono(c, m.pattern)) return true;
            } else {
                if (find_weakly_induced(c.red, m.pattern) || find_weakly_induced(c.blue(), m.pattern))
                    return true;
            }
        }
    }
    return false;
}

} // namespace unav
