#include "unav/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "unav/algos.hpp"
#include "unav/canonical.hpp"

namespace unav {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SimpleGraph apply_labeling(const SimpleGraph& g, const std::vector<int>& labeling) {
    SimpleGraph out(g.n);
    for (int p = 0; p < g.n; ++p)
        for (int q = p + 1; q < g.n; ++q)
            if (g.has_edge(labeling[p], labeling[q])) out.add_edge(p, q);
    return out;
}

// Best witness under (value desc, certificate asc); cert identifies the
// isomorphism class, which fixes the canonical witness.
struct BestColoring {
    long long value = -1;
    std::string cert;
    SimpleGraph canonical_red;

    void offer(long long v, const SimpleGraph& red) {
        auto canon = canonical_form(red);
        if (v > value || (v == value && canon.certificate < cert)) {
            value = v;
            cert = canon.certificate;
            canonical_red = apply_labeling(red, canon.labeling);
        }
    }
    void merge(const BestColoring& other) {
        if (other.value < 0) return;
        if (other.value > value || (other.value == value && (cert.empty() || other.cert < cert))) {
            value = other.value;
            cert = other.cert;
            canonical_red = other.canonical_red;
        }
    }
};

// Raw-mode scan over a mask range: keep the best coloring whose min class is
// maximal among those where `keep` holds. Pruning is local to the range, so
// node accounting and results are independent of the thread count.
template <typename Keep>
BestColoring scan_masks(int n, uint64_t begin, uint64_t end, const Keep& keep) {
    BestColoring best;
    int total_pairs = pair_count(n);
    for (uint64_t mask = begin; mask < end; ++mask) {
        int red = std::popcount(mask);
        long long min_class = std::min(red, total_pairs - red);
        if (min_class < best.value) continue;
        if (!keep(mask)) continue;
        best.offer(min_class, graph_from_mask(n, mask));
    }
    return best;
}

template <typename Keep>
BestColoring parallel_scan(int n, int workers, const Keep& keep) {
    uint64_t total = uint64_t{1} << pair_count(n);
    workers = std::max(1, std::min({workers, 64, static_cast<int>(total)}));
    if (workers == 1) return scan_masks(n, 0, total, keep);
    std::vector<BestColoring> results(workers);
    std::vector<std::thread> threads;
    uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            uint64_t begin = chunk * w;
            uint64_t end = std::min(total, begin + chunk);
            results[w] = scan_masks(n, begin, end, keep);
        });
    for (auto& t : threads) t.join();
    BestColoring best;
    for (const auto& r : results) best.merge(r);
    return best;
}

} // namespace

TwoColoring canonicalize_coloring(const TwoColoring& c) {
    auto canon = canonical_form(c.red);
    return TwoColoring(c.n, apply_labeling(c.red, canon.labeling));
}

ExtremalCertificate ex2_exact(int n, const PatternFamily& family, SearchMode mode, int workers) {
    family.validate_for_ex2();
    if (mode == SearchMode::automatic) mode = n <= 8 ? SearchMode::raw : SearchMode::canonical;
    if (mode == SearchMode::raw && n > 8) throw std::invalid_argument("raw ex2 supports n <= 8");
    if (mode == SearchMode::canonical && n > 10)
        throw std::invalid_argument("canonical ex2 supports n <= 10");
    if (n < 2) throw std::invalid_argument("ex2 needs n >= 2");
    auto start = Clock::now();

    ExtremalCertificate cert;
    cert.quantity = "ex2";
    cert.params = {{"n", n}, {"members", static_cast<long long>(family.members.size())}};
    cert.family_name = family.name;

    BestColoring best;
    unsigned long long nodes = 0;
    if (mode == SearchMode::raw) {
        FamilyChecker checker(n, family);
        best = parallel_scan(n, workers, [&](uint64_t mask) { return !checker.violates(mask); });
        nodes = uint64_t{1} << pair_count(n);
    } else {
        int total_pairs = pair_count(n);
        for_each_graph_on_vertices(n, [&](const SimpleGraph& red) {
            ++nodes;
            int e = red.edge_count();
            long long min_class = std::min(e, total_pairs - e);
            if (min_class < best.value) return true;
            TwoColoring c(n, red);
            if (avoids_family(c, family).avoids) best.offer(min_class, red);
            return true;
        });
    }
    cert.value = best.value;
    cert.witness_coloring = TwoColoring(n, best.canonical_red);
    cert.max_possible = best.value == pair_count(n) / 2;
    cert.nodes_searched = nodes;
    cert.wall_seconds = seconds_since(start);
    return cert;
}

ExtremalCertificate bal_exact(int n, const SimpleGraph& g, int workers) {
    if (g.n > n) throw std::invalid_argument("pattern graph larger than host");
    if (g.edge_count() < 1) throw std::invalid_argument("bal needs e(G) >= 1");
    if (n > 8) throw std::invalid_argument("bal_exact supports n <= 8");
    auto start = Clock::now();

    const CopySet& copies = copy_masks(n, g); // initialize the shared cache up front
    int lo = copies.pattern_edges / 2;
    int hi = (copies.pattern_edges + 1) / 2;
    const std::vector<uint64_t>& masks = copies.masks;

    auto no_balanced_copy = [&](uint64_t red) {
        for (uint64_t copy : masks) {
            int r = std::popcount(red & copy);
            if (r == lo || r == hi) return false;
        }
        return true;
    };
    BestColoring best = parallel_scan(n, workers, no_balanced_copy);

    ExtremalCertificate cert;
    cert.quantity = "bal";
    cert.params = {{"n", n}, {"graph_order", g.n}, {"graph_edges", g.edge_count()}};
    cert.value = best.value;
    if (best.value >= 0) cert.witness_coloring = TwoColoring(n, best.canonical_red);
    cert.max_possible = best.value == pair_count(n) / 2;
    cert.nodes_searched = uint64_t{1} << pair_count(n);
    cert.wall_seconds = seconds_since(start);
    return cert;
}

std::optional<ExtremalCertificate> bal_via_half_family(int n, const SimpleGraph& g, int workers) {
    // Members keep their isolated vertices: an induced monochromatic copy of
    // a spanning half-subgraph completes to a balanced copy of G, so this
    // route always dominates the forcing value. Stripped members lose that
    // guarantee at fixed n (the completing vertices become unconstrained).
    PatternFamily fam = family_half(g, true);
    try {
        fam.validate_for_ex2();
    } catch (const std::invalid_argument&) {
        return std::nullopt; // e(G) <= 1: the family contains an empty graph
    }
    ExtremalCertificate cert = ex2_exact(n, fam, SearchMode::automatic, workers);
    cert.quantity = "bal-half-family";
    return cert;
}

RamseyCheck ramsey_check(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("ramsey_check needs k, n >= 1");
    if (n > 8) throw std::invalid_argument("ramsey_check supports n <= 8");
    RamseyCheck out;
    out.forced = true;
    for_each_graph_on_vertices(n, [&](const SimpleGraph& red) {
        ++out.nodes_searched;
        if (find_clique(red, k).empty() && find_clique(complement(red), k).empty()) {
            out.forced = false;
            out.witness = TwoColoring(n, red);
            return false;
        }
        return true;
    });
    return out;
}

ValueWithProvenance ramsey_value(int k, bool allow_literature) {
    if (k < 1) throw std::invalid_argument("ramsey_value needs k >= 1");
    if (k <= 3) {
        for (int n = 1; n <= 8; ++n)
            if (ramsey_check(k, n).forced) return {n, "computed"};
        throw std::logic_error("R(k) not located within n <= 8");
    }
    if (k == 4) {
        if (!allow_literature)
            throw std::invalid_argument("R(4) requires the literature table; recompute covers k <= 3");
        return {18, "literature"};
    }
    throw std::invalid_argument("R(" + std::to_string(k) + ") unknown; table covers k <= 4");
}

namespace {

bool matrix_has_mono_ktt(const std::vector<uint32_t>& rows, int n, int t) {
    uint32_t full = (n == 32) ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    std::vector<int> pick(t);
    auto rec = [&](auto&& self, int pos, int from, uint32_t red_common, uint32_t blue_common) -> bool {
        if (pos == t)
            return std::popcount(red_common) >= t || std::popcount(blue_common) >= t;
        for (int i = from; i < n; ++i) {
            uint32_t r = red_common & rows[i];
            uint32_t b = blue_common & ~rows[i] & full;
            if (std::popcount(r) < t && std::popcount(b) < t) continue;
            if (self(self, pos + 1, i + 1, r, b)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0, full, full);
}

} // namespace

RamseyCheck bipartite_ramsey_check(int t, int n) {
    if (t < 1 || n < 1) throw std::invalid_argument("bipartite_ramsey_check needs t, n >= 1");
    if (n > 5) throw std::invalid_argument("bipartite_ramsey_check supports n <= 5");
    RamseyCheck out;
    out.forced = true;
    std::vector<uint32_t> rows(n, 0);
    // Row-sorted enumeration: rows non-decreasing as masks (row permutations
    // preserve monochromatic K_{t,t} containment).
    auto rec = [&](auto&& self, int i, uint32_t from) -> bool {
        if (i == n) {
            ++out.nodes_searched;
            if (!matrix_has_mono_ktt(rows, n, t)) {
                out.forced = false;
                SimpleGraph red(2 * n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (rows[a] >> b & 1) red.add_edge(a, n + b);
                out.witness_bipartite = red;
                return false;
            }
            return true;
        }
        for (uint32_t mask = from; mask < (uint32_t{1} << n); ++mask) {
            rows[i] = mask;
            if (!self(self, i + 1, mask)) return false;
        }
        return true;
    };
    rec(rec, 0, 0);
    return out;
}

ValueWithProvenance bipartite_ramsey_value(int t, bool allow_literature) {
    if (t < 1) throw std::invalid_argument("bipartite_ramsey_value needs t >= 1");
    if (t <= 2) {
        for (int n = 1; n <= 5; ++n)
            if (bipartite_ramsey_check(t, n).forced) return {n, "computed"};
        throw std::logic_error("BR(t) not located within n <= 5");
    }
    if (t == 3) {
        if (!allow_literature)
            throw std::invalid_argument("BR(3) requires the literature table; recompute covers t <= 2");
        return {17, "literature"};
    }
    throw std::invalid_argument("BR(" + std::to_string(t) + ") unknown; table covers t <= 3");
}

namespace {

// DFS over Y-neighborhood masks of the X-side vertices, rows non-increasing
// by (popcount, mask); every t-subset of Y may be covered by at most s-1 rows.
struct ZarankiewiczSearch {
    int m, n, s, t;
    std::vector<std::vector<int>> tsubsets_of_mask;  // per mask: indices of t-subsets
    std::vector<int> coverage;                       // per t-subset
    std::vector<std::vector<uint32_t>> masks_by_pc;  // descending within each popcount
    std::vector<int> pos_in_pc;                      // index of mask within its popcount list
    std::vector<uint32_t> rows, best_rows;
    int best = -1;
    unsigned long long nodes = 0;

    ZarankiewiczSearch(int m_, int n_, int s_, int t_) : m(m_), n(n_), s(s_), t(t_) {
        uint32_t total = uint32_t{1} << n;
        std::vector<int> rank(total, -1);
        int next = 0;
        for (uint32_t mask = 0; mask < total; ++mask)
            if (std::popcount(mask) == t) rank[mask] = next++;
        coverage.assign(next, 0);
        tsubsets_of_mask.resize(total);
        masks_by_pc.assign(n + 1, {});
        pos_in_pc.assign(total, 0);
        for (uint32_t mask = total; mask-- > 0;) {
            int pc = std::popcount(mask);
            pos_in_pc[mask] = static_cast<int>(masks_by_pc[pc].size());
            masks_by_pc[pc].push_back(mask);
            std::vector<int> bits;
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1) bits.push_back(b);
            if (static_cast<int>(bits.size()) < t) continue;
            std::vector<int> pick(t);
            auto rec = [&](auto&& self, int pos, int from) -> void {
                if (pos == t) {
                    uint32_t sub = 0;
                    for (int x : pick) sub |= uint32_t{1} << x;
                    tsubsets_of_mask[mask].push_back(rank[sub]);
                    return;
                }
                for (size_t i = from; i < bits.size(); ++i) {
                    pick[pos] = bits[i];
                    self(self, pos + 1, static_cast<int>(i) + 1);
                }
            };
            rec(rec, 0, 0);
        }
        rows.assign(m, 0);
    }

    bool row_ok(uint32_t mask) {
        for (int idx : tsubsets_of_mask[mask])
            if (coverage[idx] + 1 > s - 1) return false;
        return true;
    }
    void place(uint32_t mask, int delta) {
        for (int idx : tsubsets_of_mask[mask]) coverage[idx] += delta;
    }

    // Rows non-increasing by (popcount, mask): any assignment can be sorted
    // this way, so the symmetry breaking loses nothing.
    void dfs(int i, int prev_pc, uint32_t prev_mask, int edges) {
        ++nodes;
        if (edges + prev_pc * (m - i) <= best) return;
        if (i == m) {
            best = edges;
            best_rows = rows;
            return;
        }
        for (int pc = prev_pc; pc >= 0; --pc) {
            if (edges + pc * (m - i) <= best) break;
            const auto& list = masks_by_pc[pc];
            size_t from = (pc == prev_pc) ? pos_in_pc[prev_mask] : 0;
            for (size_t idx = from; idx < list.size(); ++idx) {
                uint32_t mask = list[idx];
                if (!row_ok(mask)) continue;
                place(mask, 1);
                rows[i] = mask;
                dfs(i + 1, pc, mask, edges + pc);
                place(mask, -1);
            }
        }
    }
};

} // namespace

ExtremalCertificate zarankiewicz_exact(int m, int n, int s, int t) {
    if (m < 1 || n < 1 || s < 1 || t < 1) throw std::invalid_argument("parameters must be positive");
    if (s > t) throw std::invalid_argument("zarankiewicz expects s <= t");
    auto start = Clock::now();
    ExtremalCertificate cert;
    cert.quantity = "zarankiewicz";
    cert.params = {{"m", m}, {"n", n}, {"s", s}, {"t", t}};
    if (s > m || t > n) {
        // No K_{s,t} fits: the complete bipartite graph is the witness.
        cert.value = static_cast<long long>(m) * n;
        cert.witness_graph = complete_bipartite(m, n);
        cert.nodes_searched = 1;
        cert.wall_seconds = seconds_since(start);
        return cert;
    }
    if (n > 16 || static_cast<long long>(m) * n > 64)
        throw std::invalid_argument("zarankiewicz search supports m*n <= 64 with n <= 16");
    ZarankiewiczSearch search(m, n, s, t);
    search.dfs(0, n, (uint32_t{1} << n) - 1, 0);
    cert.value = search.best;
    SimpleGraph witness(m + n);
    for (int i = 0; i < m; ++i)
        for (int b = 0; b < n; ++b)
            if (search.best_rows[i] >> b & 1) witness.add_edge(i, m + b);
    cert.witness_graph = witness;
    cert.nodes_searched = search.nodes;
    cert.wall_seconds = seconds_since(start);
    return cert;
}

long long constant_regime_threshold(int r, int t) {
    if (r < 2 || t < 2) throw std::invalid_argument("constant_regime_threshold needs r, t >= 2");
    ValueWithProvenance big_r = ramsey_value(2 * t, true); // throws when R(2t) is unknown
    long long bigT = big_r.value;
    return r * (2 * bigT * bigT - 6 * bigT + 5);
}

} // namespace unav
