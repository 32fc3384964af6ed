#include "geodetic/graph6.hpp"

namespace geodetic {

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(char(n + 63));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    if (line.empty()) throw FormatError("empty graph6 line");
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c < 63 || c > 126)
            throw FormatError("invalid graph6 byte at column " + std::to_string(i + 1));
    }
    int n = line[0] - 63;
    if (n == 63) throw FormatError("multi-byte graph6 orders not supported");
    if (n > kMaxVertices)
        throw CapacityError("graph6 line encodes " + std::to_string(n) +
                            " vertices, capacity is 32");
    size_t need = size_t(n) * (n - 1) / 2;
    size_t bytes = (need + 5) / 6;
    if (line.size() != 1 + bytes)
        throw FormatError("graph6 line has " + std::to_string(line.size()) + " bytes, expected " +
                          std::to_string(1 + bytes) + " for order " + std::to_string(n));
    Graph g(n);
    size_t bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((line[1 + bit / 6] - 63) >> (5 - bit % 6) & 1) g.add_edge(row, col);
    // padding bits must be zero
    for (; bit < bytes * 6; ++bit)
        if ((line[1 + bit / 6] - 63) >> (5 - bit % 6) & 1)
            throw FormatError("nonzero padding in graph6 line");
    return g;
}

}  // namespace geodetic
