#include "geodetic/rooted_tree.hpp"

#include <algorithm>

namespace geodetic {

bool valid_rooted_tree(const RootedTree& t) {
    if (t.n < 1 || t.n > 32) return false;
    if (t.level[0] != 0) return false;
    for (int v = 1; v < t.n; ++v) {
        if (t.parent[v] < 0 || t.parent[v] >= v) return false;
        if (t.level[v] != t.level[t.parent[v]] + 1) return false;
        if (t.level[v] < t.level[v - 1]) return false;
        // same level: parents must not interleave
        if (t.level[v] == t.level[v - 1] && v > 1 && t.parent[v] < t.parent[v - 1]) return false;
    }
    return true;
}

namespace {

void collect_children(const RootedTree& t, std::array<std::vector<int>, 32>& kids) {
    for (int v = 1; v < t.n; ++v) kids[t.parent[v]].push_back(v);
}

std::vector<uint8_t> encode(const std::array<std::vector<int>, 32>& kids, int v) {
    std::vector<std::vector<uint8_t>> sub;
    sub.reserve(kids[v].size());
    for (int c : kids[v]) sub.push_back(encode(kids, c));
    std::sort(sub.begin(), sub.end(), std::greater<>());
    std::vector<uint8_t> out{1};
    for (const auto& s : sub)
        for (uint8_t d : s) out.push_back(uint8_t(d + 1));
    return out;
}

}  // namespace

std::vector<uint8_t> rooted_tree_canonical(const RootedTree& t, int v) {
    std::array<std::vector<int>, 32> kids;
    collect_children(t, kids);
    return encode(kids, v);
}

std::vector<std::vector<int>> subtree_classes(const RootedTree& t, int v) {
    std::array<std::vector<int>, 32> kids;
    collect_children(t, kids);
    std::vector<std::pair<std::vector<uint8_t>, int>> enc;
    for (int c : kids[v]) enc.emplace_back(encode(kids, c), c);
    std::sort(enc.begin(), enc.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < enc.size(); ++i) {
        if (i == 0 || enc[i].first != enc[i - 1].first) classes.emplace_back();
        classes.back().push_back(enc[i].second);
    }
    return classes;
}

RootedTree canonical_level_order(const RootedTree& t, std::array<int8_t, 32>& moved_to) {
    std::array<std::vector<int>, 32> kids;
    collect_children(t, kids);
    std::vector<std::vector<uint8_t>> enc(size_t(t.n));
    // encode() recurses anyway; memoize by computing bottom-up over indices
    // (children always have larger index than their parent).
    for (int v = t.n - 1; v >= 0; --v) {
        std::vector<std::vector<uint8_t>> sub;
        for (int c : kids[v]) sub.push_back(enc[c]);
        std::sort(sub.begin(), sub.end(), std::greater<>());
        enc[v] = {1};
        for (const auto& s : sub)
            for (uint8_t d : s) enc[v].push_back(uint8_t(d + 1));
    }
    for (int v = 0; v < t.n; ++v)
        std::sort(kids[v].begin(), kids[v].end(), [&](int a, int b) {
            if (enc[a] != enc[b]) return enc[a] > enc[b];
            return a < b;
        });
    RootedTree out;
    out.n = t.n;
    out.parent[0] = -1;
    int order[32];
    order[0] = 0;
    moved_to[0] = 0;
    int filled = 1;
    for (int i = 0; i < filled; ++i) {
        int v = order[i];
        for (int c : kids[v]) {
            order[filled] = c;
            moved_to[c] = int8_t(filled);
            out.parent[filled] = int8_t(i);
            out.level[filled] = int8_t(out.level[i] + 1);
            ++filled;
        }
    }
    return out;
}

RootedTree canonical_level_order(const RootedTree& t) {
    std::array<int8_t, 32> moved{};
    return canonical_level_order(t, moved);
}

}  // namespace geodetic
