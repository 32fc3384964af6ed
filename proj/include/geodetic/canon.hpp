#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "geodetic/graph.hpp"

namespace geodetic {

// Order-independent fingerprint of a graph: byte 0 holds n, the rest pack
// the upper triangle (row order) of the canonically relabeled adjacency
// matrix.  Equal keys iff isomorphic graphs.
struct CanonicalKey {
    std::array<uint8_t, 63> bytes{};

    auto operator<=>(const CanonicalKey&) const = default;

    int order() const { return bytes[0]; }
    std::string hex() const;
    size_t hash() const;
};

struct CanonicalKeyHash {
    size_t operator()(const CanonicalKey& k) const { return k.hash(); }
};

using AutCount = unsigned __int128;

std::string aut_count_to_string(AutCount c);

struct CanonicalResult {
    CanonicalKey key;
    std::array<int8_t, 32> labeling{};  // vertex v of the input becomes labeling[v]
    AutCount aut_order = 1;             // colour-preserving automorphisms
};

// Canonical labeling by equitable-partition refinement with individualization
// backtracking; the key is the least adjacency encoding over all labelings
// consistent with the refinement.  An optional colouring constrains the
// initial partition (cells in increasing colour order); automorphisms then
// preserve colours.
CanonicalResult canonicalize(const Graph& g, std::span<const uint8_t> colors = {});

CanonicalKey canonical_form(const Graph& g);

// Rebuild the canonically labeled graph a key encodes.
Graph canonical_graph(const CanonicalKey& key);

bool are_isomorphic(const Graph& a, const Graph& b);

AutCount automorphism_group_order(const Graph& g);

}  // namespace geodetic
