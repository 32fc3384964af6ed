#include "geodetic/treegen.hpp"

#include "geodetic/errors.hpp"

namespace geodetic {

RootedTreeStream::RootedTreeStream(int n, int root_degree) : n_(n), root_degree_(root_degree) {
    if (n < 1 || n > 32)
        throw BadParameterError("tree order " + std::to_string(n) + " out of range [1, 32]");
    if (root_degree < 0 || root_degree > 31)
        throw BadParameterError("root degree " + std::to_string(root_degree) +
                                " out of range [0, 31]");
    for (int i = 0; i < n; ++i) seq_[i] = uint8_t(i + 1);  // the path, lexicographically greatest
}

std::optional<RootedTree> RootedTreeStream::next() {
    if (done_) return std::nullopt;
    if (!first_ && !advance()) {
        done_ = true;
        return std::nullopt;
    }
    first_ = false;
    if (root_degree_ && !settle()) {
        done_ = true;
        return std::nullopt;
    }
    return current();
}

bool RootedTreeStream::advance() {
    int p = -1;
    for (int i = n_ - 1; i > 0; --i)
        if (seq_[i] >= 3) {
            p = i;
            break;
        }
    if (p < 0) return false;  // the star was the last tree
    int q = p - 1;
    while (seq_[q] != seq_[p] - 1) --q;
    for (int i = p; i < n_; ++i) seq_[i] = seq_[i - (p - q)];
    return true;
}

// First position at which every completion of the prefix breaks the degree
// constraint: a child count can only grow until the walk leaves its vertex,
// and the all-2 tail maximises the root's remaining intake.  -1 when clean.
int RootedTreeStream::violation_pos() const {
    int kids[32] = {};
    int last_at_depth[33];
    int kroot = 0;
    last_at_depth[1] = 0;
    for (int i = 1; i < n_; ++i) {
        int q = seq_[i];
        if (q == 2) {
            if (++kroot > root_degree_) return i;
        } else {
            if (++kids[last_at_depth[q - 1]] > root_degree_ - 1) return i;
        }
        last_at_depth[q] = i;
        if (kroot + (n_ - 1 - i) < root_degree_) return i;
    }
    return kroot == root_degree_ ? -1 : 0;  // 0 only for the root-only tree
}

// Hop over contiguous blocks of violating sequences: the last sequence with
// prefix seq_[0..bad] is that prefix followed by all 2s, so its successor is
// the first sequence past the whole block.
bool RootedTreeStream::settle() {
    for (;;) {
        int bad = violation_pos();
        if (bad < 0) return true;
        for (int i = bad + 1; i < n_; ++i) seq_[i] = 2;
        if (!advance()) return false;
    }
}

RootedTree RootedTreeStream::current() const {
    // preorder parents via the rightmost shallower entry
    int8_t parent_pre[32];
    int last_at_depth[33];
    parent_pre[0] = -1;
    last_at_depth[1] = 0;
    for (int i = 1; i < n_; ++i) {
        parent_pre[i] = int8_t(last_at_depth[seq_[i] - 1]);
        last_at_depth[seq_[i]] = i;
    }
    // stable renumbering by (depth, preorder position): counting sort
    int8_t to_new[32];
    int start[34] = {};
    for (int i = 0; i < n_; ++i) ++start[seq_[i] + 1];
    for (int d = 1; d <= 32; ++d) start[d + 1] += start[d];
    for (int i = 0; i < n_; ++i) to_new[i] = int8_t(start[seq_[i]]++);
    RootedTree t;
    t.n = n_;
    t.parent[0] = -1;
    for (int i = 1; i < n_; ++i) {
        t.parent[to_new[i]] = to_new[parent_pre[i]];
        t.level[to_new[i]] = int8_t(seq_[i] - 1);
    }
    return t;
}

}  // namespace geodetic
