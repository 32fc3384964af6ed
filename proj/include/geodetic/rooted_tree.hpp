#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace geodetic {

// Rooted tree on n <= 32 vertices in level order: vertex 0 is the root,
// levels are non-decreasing with vertex index, and parent[v] < v for v > 0.
// Children of a common parent occupy consecutive indices.
struct RootedTree {
    int n = 0;
    std::array<int8_t, 32> parent{};  // parent[0] is unused (-1)
    std::array<int8_t, 32> level{};   // level[0] == 0

    bool operator==(const RootedTree&) const = default;
};

// True iff t satisfies the level-order representation invariants above.
bool valid_rooted_tree(const RootedTree& t);

// Canonical encoding of the subtree rooted at v: the lexicographically
// greatest preorder depth sequence over all orderings of children, one byte
// per vertex, root depth 1.  Two subtrees get equal encodings iff they are
// isomorphic as rooted trees.  A single vertex encodes as {1}.
std::vector<uint8_t> rooted_tree_canonical(const RootedTree& t, int v = 0);

// Partition of the children of v into classes of pairwise isomorphic
// subtrees.  Classes are ordered by decreasing subtree encoding; members are
// listed in increasing vertex order.
std::vector<std::vector<int>> subtree_classes(const RootedTree& t, int v);

// Rebuild t in canonical level order: children of every vertex sorted by
// (subtree encoding desc, previous index asc), then vertices renumbered by
// (level, parent position).  The result compares equal for isomorphic inputs
// rooted at the same vertex.  The second form also reports where each input
// vertex ended up.
RootedTree canonical_level_order(const RootedTree& t);
RootedTree canonical_level_order(const RootedTree& t, std::array<int8_t, 32>& moved_to);

}  // namespace geodetic
