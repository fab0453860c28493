#include "unav/graph6.hpp"

#include <stdexcept>

namespace unav {

std::string graph6_encode(const SimpleGraph& g) {
    if (g.n > kMaxVertices) throw std::invalid_argument("graph too large");
    std::string out;
    int n = g.n;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 258047: '~' followed by 18 bits in three 6-bit chunks.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

SimpleGraph graph6_decode(const std::string& text) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    int n;
    if (!text.empty() && text[0] == '~') {
        ++pos;
        int a = next(), b = next(), c = next();
        n = a << 12 | b << 6 | c;
    } else {
        n = next();
    }
    if (n > kMaxVertices) throw std::invalid_argument("graph6: graph too large for this build");
    int bits_needed = pair_count(n);
    size_t expect = pos + (bits_needed + 5) / 6;
    if (text.size() != expect)
        throw std::invalid_argument("graph6: length mismatch for n=" + std::to_string(n));
    SimpleGraph g(n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if (acc >> (nbits - 1) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    return g;
}

} // namespace unav
