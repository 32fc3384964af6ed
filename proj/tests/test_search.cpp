#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "geodetic/canon.hpp"
#include "geodetic/constructions.hpp"
#include "geodetic/errors.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/oracle.hpp"
#include "geodetic/search.hpp"

using namespace geodetic;
using namespace geodetic::search;

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

// Same classes on both sides, each entry carrying a genuine member of its
// class; representatives may differ with exploration order.
bool same_graphs(const std::map<CanonicalKey, Graph>& a,
                 const std::map<CanonicalKey, Graph>& b) {
    if (a.size() != b.size()) return false;
    auto it = b.begin();
    for (const auto& [key, g] : a) {
        if (it->first != key) return false;
        if (canonical_form(g) != key || canonical_form(it->second) != key) return false;
        ++it;
    }
    return true;
}

// Multiset view of a partition list, independent of generation order.
std::set<std::vector<uint32_t>> partition_set(std::vector<Partition> ps) {
    std::set<std::vector<uint32_t>> out;
    for (auto& p : ps) {
        std::sort(p.begin(), p.end());
        out.insert(p);
    }
    return out;
}

}  // namespace

TEST_CASE("search equals the exhaustive oracle") {
    for (int n = 2; n <= 7; ++n) {
        Result res = enumerate_geodetic(n);
        auto oracle = brute_force_graphs(n, OracleFilter::GeodeticBiconnected);
        CHECK(same_graphs(res.graphs, oracle));
        CHECK(res.stats.n == n);
        CHECK(res.stats.emitted >= res.graphs.size());
    }
}

TEST_CASE("class counts for n up to 12") {
    const size_t expect[] = {1, 1, 1, 2, 1, 3, 1, 3, 4, 3, 1};
    for (int n = 2; n <= 12; ++n)
        CHECK(enumerate_geodetic(n).graphs.size() == expect[n - 2]);
}

TEST_CASE("emitted representatives are verified and canonical") {
    Result res = enumerate_geodetic(11);
    REQUIRE(res.graphs.size() == 3);
    for (const auto& [key, g] : res.graphs) {
        CHECK(g.order() == 11);
        CHECK(is_geodetic(g));
        CHECK(is_biconnected(g));
        CHECK(g == canonical_graph(key));
    }
    // C_11 and K_11 are among the classes.
    CHECK(res.graphs.count(canonical_form(cycle_graph(11))) == 1);
    CHECK(res.graphs.count(canonical_form(complete_graph(11))) == 1);
}

TEST_CASE("every prune switch is sound") {
    Result base = enumerate_geodetic(10);
    REQUIRE(base.graphs.size() == 4);

    Options opt;
    opt.prune_small_cycles = false;
    Result no_cycles = enumerate_geodetic(10, opt);
    CHECK(same_graphs(base.graphs, no_cycles.graphs));

    opt = Options{};
    opt.prune_biconnectivity = false;
    Result no_biconn = enumerate_geodetic(10, opt);
    CHECK(same_graphs(base.graphs, no_biconn.graphs));

    opt = Options{};
    opt.prune_clique_neighbour = false;
    Result no_clique = enumerate_geodetic(10, opt);
    CHECK(same_graphs(base.graphs, no_clique.graphs));

    opt = Options{};
    opt.cache_capacity = 0;
    Result no_cache = enumerate_geodetic(10, opt);
    CHECK(same_graphs(base.graphs, no_cache.graphs));
    CHECK(no_cache.stats.cache_hits == 0);

    opt = Options{};
    opt.prune_small_cycles = false;
    opt.prune_biconnectivity = false;
    opt.prune_clique_neighbour = false;
    opt.cache_capacity = 0;
    Result bare = enumerate_geodetic(10, opt);
    CHECK(same_graphs(base.graphs, bare.graphs));
    // The bare run explores at least as many states.
    CHECK(bare.stats.states >= base.stats.states);
}

TEST_CASE("worker count does not change the result") {
    Result serial = enumerate_geodetic(11);
    for (int threads : {2, 3}) {
        Options opt;
        opt.threads = threads;
        Result par = enumerate_geodetic(11, opt);
        CHECK(same_graphs(serial.graphs, par.graphs));
        CHECK(par.stats.trees + par.stats.trees_skipped ==
              serial.stats.trees + serial.stats.trees_skipped);
    }
}

TEST_CASE("regular mode sweeps the orders and keeps only regular graphs") {
    Result res = enumerate_regular(12);
    CHECK(res.graphs.size() == 16);
    std::map<int, int> by_order;
    for (const auto& [key, g] : res.graphs) {
        CHECK(is_geodetic(g));
        CHECK(is_biconnected(g));
        CHECK(graph_report(g).regular);
        ++by_order[g.order()];
    }
    // Cliques at every order, odd cycles from 5 up, the Petersen graph at 10.
    const std::map<int, int> expect = {{2, 1}, {3, 1}, {4, 1}, {5, 2},  {6, 1}, {7, 2},
                                       {8, 1}, {9, 2}, {10, 2}, {11, 2}, {12, 1}};
    CHECK(by_order == expect);
    CHECK(res.graphs.count(canonical_form(petersen_graph())) == 1);
    CHECK(res.graphs.count(canonical_form(cycle_graph(9))) == 1);
    CHECK(res.graphs.count(canonical_form(complete_graph(12))) == 1);
    CHECK(res.graphs.count(canonical_form(cycle_graph(12))) == 0);
}

TEST_CASE("degree filter splits the enumeration by root degree") {
    // Union over root degrees of the filtered runs equals the full run.
    Result base = enumerate_geodetic(9);
    std::map<CanonicalKey, Graph> merged;
    for (int d = 1; d <= 8; ++d) {
        Options opt;
        opt.degree_filter = d;
        Result part = enumerate_geodetic(9, opt);
        for (const auto& [key, g] : part.graphs) merged.emplace(key, g);
    }
    CHECK(same_graphs(base.graphs, merged));
}

TEST_CASE("search rejects out-of-range orders") {
    CHECK_THROWS_AS(enumerate_geodetic(0), BadParameterError);
    CHECK_THROWS_AS(enumerate_geodetic(33), CapacityError);
    CHECK_THROWS_AS(enumerate_regular(33), CapacityError);
}

TEST_CASE("tree context layout") {
    // Root with children 1, 2, 3; vertex 1 has children 4, 5; vertex 2 has 6.
    TreeContext ctx{make_tree({0, 0, 0, 1, 1, 2})};
    CHECK(ctx.n == 7);
    CHECK(ctx.levels == 3);
    CHECK(ctx.max_degree == 3);
    CHECK(ctx.feasible);
    CHECK(ctx.level_mask[0] == 0b0000001u);
    CHECK(ctx.level_mask[1] == 0b0001110u);
    CHECK(ctx.level_mask[2] == 0b1110000u);
    CHECK(ctx.child_mask[0] == 0b0001110u);
    CHECK(ctx.child_mask[1] == 0b0110000u);
    CHECK(ctx.child_mask[4] == 0u);
    CHECK(ctx.tree_deg[0] == 3);
    CHECK(ctx.tree_deg[1] == 3);
    CHECK(ctx.tree_deg[2] == 2);
    CHECK(ctx.tree_deg[4] == 1);
    CHECK(ctx.sibling_mask[1] == 0b0001100u);
    CHECK(ctx.sibling_mask[4] == 0b0100000u);
    CHECK(ctx.sibling_mask[6] == 0u);
    CHECK(ctx.desc[0][2] == 0b1110000u);
    CHECK(ctx.desc[1][2] == 0b0110000u);
    CHECK(ctx.desc[2][2] == 0b1000000u);
    CHECK(ctx.desc[3][2] == 0u);
    // Children of the root fall into three distinct classes, largest subtree
    // first; the leaf children of vertex 1 share one class.
    CHECK(ctx.sib_class[1] == 0);
    CHECK(ctx.sib_class[2] == 1);
    CHECK(ctx.sib_class[3] == 2);
    CHECK(ctx.sib_class[4] == 0);
    CHECK(ctx.sib_class[5] == 0);

    // A path hanging off a degree-1 root cannot stay under the degree cap.
    TreeContext path{make_tree({0, 1})};
    CHECK(path.max_degree == 1);
    CHECK_FALSE(path.feasible);
}

TEST_CASE("initial state carries the tree") {
    TreeContext ctx{make_tree({0, 0, 0, 1, 1, 2})};
    State st = initial_state(ctx);
    CHECK(st.adj[0] == ctx.child_mask[0]);
    CHECK(st.adj[1] == (0b0110000u | 1u));
    CHECK(st.adj[4] == 0b10u);
    CHECK(st.status[0] == kComplete);
    for (int v = 1; v < 7; ++v) {
        CHECK(st.status[v] == kUnprocessed);
        CHECK(st.degree[v] == ctx.tree_deg[v]);
        CHECK(st.block[v] == uint32_t(1) << v);
    }
}

TEST_CASE("sibling partitions on isomorphic children") {
    // Star: three interchangeable children, so exactly the three shapes
    // 3, 2+1 and 1+1+1 survive, each with lowest-first block filling.
    TreeContext star{make_tree({0, 0, 0})};
    auto ps = partition_set(sibling_partitions(star, 0));
    std::set<std::vector<uint32_t>> expect = {
        {0b1110u}, {0b0110u, 0b1000u}, {0b0010u, 0b0100u, 0b1000u}};
    CHECK(ps == expect);

    // Two interchangeable children under a degree cap of 2.
    TreeContext pair{make_tree({0, 0})};
    CHECK(partition_set(sibling_partitions(pair, 0)) ==
          std::set<std::vector<uint32_t>>({{0b110u}, {0b010u, 0b100u}}));

    // A leaf has exactly the empty partition.
    auto leaf = sibling_partitions(star, 3);
    REQUIRE(leaf.size() == 1);
    CHECK(leaf[0].empty());
}

TEST_CASE("sibling partitions respect the degree cap") {
    // Root children: one path child, one leaf; clique edges would push the
    // path child past the root degree.
    TreeContext ctx{make_tree({0, 0, 1})};
    CHECK(ctx.max_degree == 2);
    auto ps = partition_set(sibling_partitions(ctx, 0));
    CHECK(ps == std::set<std::vector<uint32_t>>({{0b010u, 0b100u}}));
}

TEST_CASE("apply_partition adds clique edges and forbidden pairs") {
    TreeContext ctx{make_tree({0, 0, 0, 1, 1, 2})};
    State st = initial_state(ctx);
    Partition p = {0b0110u, 0b1000u};  // {1,2} together, {3} alone
    apply_partition(ctx, st, 0, p);
    CHECK((st.adj[1] >> 2 & 1) == 1);
    CHECK((st.adj[2] >> 1 & 1) == 1);
    CHECK((st.adj[1] >> 3 & 1) == 0);
    CHECK(st.degree[1] == 4);
    CHECK(st.degree[3] == 1);
    CHECK(st.status[1] == kSemiComplete);
    CHECK(st.status[2] == kSemiComplete);
    CHECK(st.status[3] == kSemiComplete);
    CHECK(st.block[1] == 0b0110u);
    CHECK(st.block[2] == 0b0110u);
    CHECK(st.block[3] == 0b1000u);
    // Descendants of the joined pair may never bridge: {4,6} and {5,6}.
    CHECK((st.forbidden[4] >> 6 & 1) == 1);
    CHECK((st.forbidden[5] >> 6 & 1) == 1);
    CHECK((st.forbidden[6] & 0b0110000u) == 0b0110000u);
    CHECK((st.forbidden[4] >> 5 & 1) == 0);  // siblings are not forbidden pairs
}

TEST_CASE("forbidden pairs cover every level below an edge") {
    // Two depth-3 limbs under the root.
    TreeContext ctx{make_tree({0, 0, 1, 2, 3, 4})};
    State st = initial_state(ctx);
    add_forbidden_pairs(ctx, st, 1, 2);
    CHECK((st.forbidden[3] >> 4 & 1) == 1);
    CHECK((st.forbidden[5] >> 6 & 1) == 1);
    CHECK((st.forbidden[4] >> 3 & 1) == 1);
    CHECK((st.forbidden[6] >> 5 & 1) == 1);
    CHECK((st.forbidden[1] >> 2 & 1) == 0);  // the pair itself stays legal
    CHECK((st.forbidden[3] >> 6 & 1) == 0);  // different levels never pair
}

TEST_CASE("neighbour candidates") {
    TreeContext ctx{make_tree({0, 0, 0, 1, 1, 2})};
    State st = initial_state(ctx);
    // Vertex 4 may reach the later vertex 6 of another parent, but not its
    // sibling 5.
    CHECK(neighbour_candidates(ctx, st, 4) == 0b1000000u);
    CHECK(neighbour_candidates(ctx, st, 6) == 0u);

    // Forbidden pairs drop out.
    State forb = st;
    add_forbidden_pairs(ctx, forb, 1, 2);
    CHECK(neighbour_candidates(ctx, forb, 4) == 0u);

    // Saturated partners drop out.
    State sat = st;
    sat.degree[6] = int8_t(ctx.max_degree);
    CHECK(neighbour_candidates(ctx, sat, 4) == 0u);

    // A sibling already adjacent to the partner closes a 4-cycle: once 5-6
    // exists, 4-6 would give 6 two common neighbours with 5's parent slice.
    State twin = st;
    twin.adj[5] |= 1u << 6;
    twin.adj[6] |= 1u << 5;
    ++twin.degree[5];
    ++twin.degree[6];
    CHECK(neighbour_candidates(ctx, twin, 4) == 0u);
}

TEST_CASE("clique neighbour force") {
    // Children of the root in one clique block plus a deeper limb: a clique
    // vertex with no outside neighbour cannot complete at its tree degree.
    TreeContext ctx{make_tree({0, 0, 0, 1})};
    State st = initial_state(ctx);
    Partition p = {0b1110u};
    apply_partition(ctx, st, 0, p);
    CHECK(clique_neighbour_forces_edge(ctx, st, 2));
    CHECK(clique_neighbour_forces_edge(ctx, st, 3));
    // Vertex 1 has the child 4 outside the block.
    CHECK_FALSE(clique_neighbour_forces_edge(ctx, st, 1));

    // When clique + parent is the whole graph (K_4 in the making), nothing
    // is forced.
    TreeContext k4{make_tree({0, 0, 0})};
    State k4st = initial_state(k4);
    apply_partition(k4, k4st, 0, p);
    CHECK_FALSE(clique_neighbour_forces_edge(k4, k4st, 1));
    CHECK_FALSE(clique_neighbour_forces_edge(k4, k4st, 2));

    // Singleton blocks never force.
    State singles = initial_state(ctx);
    apply_partition(ctx, singles, 0, {0b0010u, 0b0100u, 0b1000u});
    CHECK_FALSE(clique_neighbour_forces_edge(ctx, singles, 2));
}

TEST_CASE("four-cycle screen catches a duplicated two-path") {
    // Completed cousins 5 and 6 share the parent 2 and the far vertex 3.
    TreeContext ctx{make_tree({0, 0, 1, 1, 2, 2})};
    State st = initial_state(ctx);
    st.adj[3] |= (1u << 5) | (1u << 6);
    st.adj[5] |= 1u << 3;
    st.adj[6] |= 1u << 3;
    st.degree[3] += 2;
    ++st.degree[5];
    ++st.degree[6];
    st.status[5] = kComplete;
    st.status[6] = kComplete;
    CHECK(small_cycle_violation(ctx, st, 6));
    // With one of the pair still open the row may yet change.
    st.status[5] = kSemiComplete;
    CHECK_FALSE(small_cycle_violation(ctx, st, 6));
}

TEST_CASE("six-cycle screen needs a middle for fixed opposite pairs") {
    // Path 4 - 5 - 6 along level 2 whose ends hang under different root
    // children: the six-cycle 4 5 6 3 0 1 fixes the opposite pair {4, 3}.
    TreeContext ctx{make_tree({0, 0, 0, 1, 2, 3})};
    State st = initial_state(ctx);
    st.adj[4] |= 1u << 5;
    st.adj[5] |= (1u << 4) | (1u << 6);
    st.adj[6] |= 1u << 5;
    ++st.degree[4];
    st.degree[5] += 2;
    ++st.degree[6];
    st.status[4] = kComplete;
    st.status[3] = kComplete;
    CHECK(small_cycle_violation(ctx, st, 4));
    // An open end keeps the pattern alive.
    State open = st;
    open.status[3] = kSemiComplete;
    CHECK_FALSE(small_cycle_violation(ctx, open, 4));
    // A common neighbour of the pair discharges it: join 1 and 3 directly.
    State mid = st;
    mid.adj[1] |= 1u << 3;
    mid.adj[3] |= 1u << 1;
    ++mid.degree[1];
    ++mid.degree[3];
    CHECK_FALSE(small_cycle_violation(ctx, mid, 4));
}

TEST_CASE("optimistic completion bounds biconnectivity") {
    // A star can close into K_4.
    TreeContext star{make_tree({0, 0, 0})};
    CHECK(optimistic_biconnected(star, initial_state(star)));

    // A bare path has nothing to add.
    TreeContext path{make_tree({0, 1})};
    CHECK_FALSE(optimistic_biconnected(path, initial_state(path)));

    // Two limbs may close through level edges at both depths.
    TreeContext limbs{make_tree({0, 0, 1, 2})};
    State st = initial_state(limbs);
    CHECK(optimistic_biconnected(limbs, st));
    // Forbidding the deep pair leaves the leaves dangling.
    st.forbidden[3] |= 1u << 4;
    st.forbidden[4] |= 1u << 3;
    CHECK_FALSE(optimistic_biconnected(limbs, st));
    // A saturated endpoint cannot take the closing edge either.
    State sat = initial_state(limbs);
    sat.degree[3] = int8_t(limbs.max_degree);
    CHECK_FALSE(optimistic_biconnected(limbs, sat));
}
