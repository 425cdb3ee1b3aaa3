#include "planex/graph6.hpp"

namespace planex {

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else {
        // 63 <= n <= 258047: '~' then 18 bits, big-endian 6-bit groups.
        out.push_back(126);
        out.push_back((char)(((n >> 12) & 0x3f) + 63));
        out.push_back((char)(((n >> 6) & 0x3f) + 63));
        out.push_back((char)((n & 0x3f) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back((char)(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back((char)((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& line) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (line.size() < pos + k) throw Graph6ParseError("graph6: truncated input", line.size());
    };
    auto byte = [&](std::size_t at) -> int {
        unsigned char c = (unsigned char)line[at];
        if (c < 63 || c > 126) throw Graph6ParseError("graph6: byte out of range 63..126", at);
        return c - 63;
    };

    need(1);
    long long n;
    if ((unsigned char)line[0] != 126) {
        n = byte(0);
        pos = 1;
    } else {
        need(4);
        if ((unsigned char)line[1] == 126) throw Graph6ParseError("graph6: order beyond supported range", 1);
        n = ((long long)byte(1) << 12) | ((long long)byte(2) << 6) | byte(3);
        pos = 4;
    }
    if (n > kMaxVertices) throw Graph6ParseError("graph6: order exceeds capacity 512", 0);

    Graph g((int)n);
    long long nbits = n * (n - 1) / 2;
    std::size_t nbytes = (std::size_t)((nbits + 5) / 6);
    need(nbytes);
    if (line.size() > pos + nbytes) throw Graph6ParseError("graph6: trailing bytes", pos + nbytes);

    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    for (long long t = bit; t < (long long)nbytes * 6; ++t) {
        int b = byte(pos + t / 6);
        if ((b >> (5 - t % 6)) & 1) throw Graph6ParseError("graph6: nonzero padding", pos + t / 6);
    }
    return g;
}

}  // namespace planex
