#include <array>
#include <vector>

#include "doctest.h"
#include "geodetic/rooted_tree.hpp"

using namespace geodetic;

namespace {

RootedTree make_tree(std::vector<int> parents) {
    RootedTree t;
    t.n = int(parents.size()) + 1;
    t.parent[0] = -1;
    for (size_t i = 0; i < parents.size(); ++i) {
        t.parent[i + 1] = int8_t(parents[i]);
        t.level[i + 1] = int8_t(t.level[parents[i]] + 1);
    }
    return t;
}

}  // namespace

TEST_CASE("valid_rooted_tree accepts level-order trees") {
    CHECK(valid_rooted_tree(make_tree({})));          // single vertex
    CHECK(valid_rooted_tree(make_tree({0, 0, 0})));   // star
    CHECK(valid_rooted_tree(make_tree({0, 1, 2})));   // path
    CHECK(valid_rooted_tree(make_tree({0, 0, 1, 1, 2})));
}

TEST_CASE("valid_rooted_tree rejects broken invariants") {
    RootedTree t = make_tree({0, 0, 1});
    t.level[3] = 3;  // level inconsistent with parent
    CHECK_FALSE(valid_rooted_tree(t));

    t = make_tree({0, 0, 1});
    t.parent[2] = 2;  // self parent
    CHECK_FALSE(valid_rooted_tree(t));

    t = make_tree({0, 0, 1});
    t.level[0] = 1;
    CHECK_FALSE(valid_rooted_tree(t));

    // Interleaved siblings: children of 1 and 2 alternate at level 2.
    t = make_tree({0, 0, 1, 2, 1});
    CHECK_FALSE(valid_rooted_tree(t));
    CHECK(valid_rooted_tree(make_tree({0, 0, 1, 1, 2})));

    t.n = 0;
    CHECK_FALSE(valid_rooted_tree(t));
}

TEST_CASE("rooted_tree_canonical encodes by greatest depth sequence") {
    CHECK(rooted_tree_canonical(make_tree({})) == std::vector<uint8_t>{1});
    CHECK(rooted_tree_canonical(make_tree({0, 0, 0})) ==
          std::vector<uint8_t>({1, 2, 2, 2}));
    CHECK(rooted_tree_canonical(make_tree({0, 1, 2})) ==
          std::vector<uint8_t>({1, 2, 3, 4}));
    // Root with a leaf child listed before a path child: the deeper subtree
    // must still come first in the encoding.
    CHECK(rooted_tree_canonical(make_tree({0, 0, 2})) ==
          std::vector<uint8_t>({1, 2, 3, 2}));
    CHECK(rooted_tree_canonical(make_tree({0, 0, 1})) ==
          std::vector<uint8_t>({1, 2, 3, 2}));
    // Subtree encodings are relative to the chosen vertex.
    RootedTree t = make_tree({0, 0, 1, 1});
    CHECK(rooted_tree_canonical(t, 1) == std::vector<uint8_t>({1, 2, 2}));
    CHECK(rooted_tree_canonical(t, 2) == std::vector<uint8_t>{1});
}

TEST_CASE("equal encodings exactly for isomorphic rooted trees") {
    // Two labelings of the spider with legs 2,2,1.
    RootedTree a = make_tree({0, 0, 0, 1, 2});
    RootedTree b = make_tree({0, 0, 0, 2, 3});
    CHECK(rooted_tree_canonical(a) == rooted_tree_canonical(b));
    // Different tree, same degree sequence at the root.
    RootedTree c = make_tree({0, 0, 0, 1, 1});
    CHECK(rooted_tree_canonical(a) != rooted_tree_canonical(c));
}

TEST_CASE("subtree_classes groups isomorphic children") {
    // Root children: 1 (path of length 1 below), 2 (leaf), 3 (leaf).
    RootedTree t = make_tree({0, 0, 0, 1});
    auto classes = subtree_classes(t, 0);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<int>{1});     // deeper subtree first
    CHECK(classes[1] == std::vector<int>({2, 3}));  // leaves, ascending

    // All children isomorphic.
    RootedTree star = make_tree({0, 0, 0});
    auto sc = subtree_classes(star, 0);
    REQUIRE(sc.size() == 1);
    CHECK(sc[0] == std::vector<int>({1, 2, 3}));

    // A leaf has no children.
    CHECK(subtree_classes(t, 3).empty());
}

TEST_CASE("canonical_level_order is a rooted-isomorphism invariant") {
    RootedTree a = make_tree({0, 0, 0, 1, 2});
    RootedTree b = make_tree({0, 0, 0, 2, 3});
    RootedTree ca = canonical_level_order(a);
    RootedTree cb = canonical_level_order(b);
    CHECK(valid_rooted_tree(ca));
    CHECK(ca == cb);
    CHECK(rooted_tree_canonical(ca) == rooted_tree_canonical(a));
    // Idempotent.
    CHECK(canonical_level_order(ca) == ca);
}

TEST_CASE("canonical_level_order reports vertex moves") {
    RootedTree t = make_tree({0, 0, 2});  // child 2 carries the path
    std::array<int8_t, 32> moved{};
    RootedTree c = canonical_level_order(t, moved);
    CHECK(valid_rooted_tree(c));
    CHECK(moved[0] == 0);
    for (int v = 0; v < t.n; ++v) {
        CHECK(c.level[moved[v]] == t.level[v]);
        if (v > 0) CHECK(c.parent[moved[v]] == moved[t.parent[v]]);
    }
    // The path child sorts before the leaf child.
    CHECK(moved[2] == 1);
    CHECK(moved[1] == 2);
    CHECK(moved[3] == 3);
}
