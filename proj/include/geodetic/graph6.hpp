#pragma once

#include <string>
#include <string_view>

#include "geodetic/graph.hpp"

namespace geodetic {

// graph6 text format for graphs on up to 62 vertices (we accept at most 32):
// one byte n+63, then the upper triangle in column order, six bits per byte,
// each byte offset by 63, padded with zero bits.
std::string graph6_encode(const Graph& g);

// Throws FormatError on malformed input, CapacityError for n > 32.
Graph graph6_decode(std::string_view line);

}  // namespace geodetic
