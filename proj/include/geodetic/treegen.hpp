#pragma once

#include <cstdint>
#include <optional>

#include "geodetic/rooted_tree.hpp"

namespace geodetic {

// Streams every rooted tree on n vertices exactly once, constant amortized
// work per tree.  Internally walks canonical preorder depth sequences in
// decreasing lexicographic order with the classic successor rule: locate the
// rightmost entry of depth >= 3, then repeat the block starting at its
// parent.  Each sequence is converted to a level-order RootedTree; children
// of a vertex appear by decreasing subtree encoding, so isomorphic sibling
// subtrees occupy identically shaped consecutive slices.
//
// With root_degree > 0 only trees whose root has exactly root_degree
// children and whose other vertices have at most root_degree - 1 children
// are produced: the shapes a breadth-first tree can take in a graph with
// degree cap root_degree rooted at a full-degree vertex.  Sequences sharing
// a violating prefix are contiguous in the walk order and get jumped over
// wholesale, so the cost scales with the trees produced, not with all trees.
class RootedTreeStream {
public:
    explicit RootedTreeStream(int n, int root_degree = 0);

    std::optional<RootedTree> next();

private:
    int n_;
    int root_degree_;
    bool done_ = false;
    bool first_ = true;
    uint8_t seq_[32];  // preorder depths, root depth 1

    RootedTree current() const;
    bool advance();
    int violation_pos() const;
    bool settle();
};

}  // namespace geodetic
