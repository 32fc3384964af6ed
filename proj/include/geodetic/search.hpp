#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "geodetic/canon.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/rooted_tree.hpp"

namespace geodetic::search {

struct Options {
    int threads = 1;
    // Isomorphism cache entries per generation step and worker; 0 disables
    // the cache entirely.
    size_t cache_capacity = 1'000'000;
    bool regular_only = false;
    // When nonzero, only seed trees whose root has exactly this degree.
    int degree_filter = 0;
    // Individual prune switches; disabling any of them must not change the
    // result set, only the running time.
    bool prune_small_cycles = true;
    bool prune_biconnectivity = true;
    bool prune_clique_neighbour = true;
    // Called about once per progress_interval trees when set.
    std::function<void(const struct Stats&)> progress;
    uint64_t progress_interval = 1 << 14;
};

struct Stats {
    int n = 0;
    uint64_t trees = 0;          // seed trees searched
    uint64_t trees_skipped = 0;  // rejected by the degree feasibility filter
    uint64_t states = 0;         // recursion steps entered
    uint64_t emitted = 0;        // final graphs passing verification (with duplicates)
    uint64_t pruned_cycles = 0;
    uint64_t pruned_biconn = 0;
    uint64_t pruned_clique = 0;
    uint64_t pruned_degree = 0;  // regular mode: some degree cannot reach the cap
    uint64_t cache_hits = 0;

    void merge(const Stats& o);
};

struct Result {
    std::map<CanonicalKey, Graph> graphs;
    Stats stats;
};

// All biconnected geodetic graphs on n vertices, one representative per
// isomorphism class, keyed by canonical form.  Every result is re-verified
// (is_geodetic && is_biconnected) before emission, so pruning bugs cannot
// produce false positives.
Result enumerate_geodetic(int n, const Options& opts = {});

// Regular biconnected geodetic graphs on up to n_max vertices: the search
// additionally requires every finished vertex to reach the root degree.
Result enumerate_regular(int n_max, const Options& opts = {});

// ---- search internals, exposed for targeted tests --------------------------

enum : uint8_t { kUnprocessed = 0, kSemiComplete = 1, kComplete = 2 };

// Static per-tree data: level layout, subtree slices, sibling classes.
struct TreeContext {
    RootedTree tree;
    int n = 0;
    int levels = 0;      // number of levels
    int max_degree = 0;  // root degree, the degree cap for every vertex
    bool feasible = true;  // false when some tree degree exceeds the cap
    std::array<int8_t, 32> level_of{};
    std::array<int8_t, 32> parent{};
    std::array<uint32_t, 33> level_mask{};
    std::array<uint32_t, 32> child_mask{};
    std::array<int8_t, 32> tree_deg{};
    std::array<uint32_t, 32> sibling_mask{};        // same-parent vertices, self excluded
    std::array<std::array<uint32_t, 32>, 32> desc{};  // [v][lvl]: subtree of v on lvl
    std::array<int8_t, 32> sib_class{};  // subtree class among siblings, by decreasing encoding

    explicit TreeContext(const RootedTree& t);
};

struct State {
    std::array<uint32_t, 32> adj{};
    std::array<uint32_t, 32> forbidden{};  // same-level pairs excluded for good
    std::array<uint32_t, 32> block{};      // sibling clique block of v, self included
    std::array<int8_t, 32> degree{};
    std::array<uint8_t, 32> status{};
};

State initial_state(const TreeContext& ctx);

// A clique partition of the children of one vertex, one member mask per block.
using Partition = std::vector<uint32_t>;

// Partitions of children(v) inequivalent under permutations of isomorphic
// sibling subtrees, filtered by the degree cap.  Block type vectors are
// chosen in decreasing lexicographic order and filled with the lowest
// unassigned child of each class, which picks one canonical representative
// per symmetry orbit.
std::vector<Partition> sibling_partitions(const TreeContext& ctx, int v);

// Adds the clique edges of a partition of children(v), marks the children
// semi-complete, records their blocks and the forbidden descendant pairs.
void apply_partition(const TreeContext& ctx, State& st, int v, const Partition& p);

// Forbidden-pair bookkeeping for a new same-level edge {u, v}: no edge may
// ever join the subtrees of u and v below the pair itself.
void add_forbidden_pairs(const TreeContext& ctx, State& st, int u, int v);

// Same-level candidates that may still be joined to v: later vertices of
// other parents, not forbidden, not degree-saturated, and not creating a
// two-siblings 4-cycle with the edges already present.
uint32_t neighbour_candidates(const TreeContext& ctx, const State& st, int v);

// True when v sits in a proper sibling clique (block size >= 2) with no
// neighbours outside block + parent: unless the whole graph is that clique,
// v must then gain at least one non-sibling edge.
bool clique_neighbour_forces_edge(const TreeContext& ctx, const State& st, int v);

// Four- and six-cycle screen run after v completes: complete same-level
// pairs with two common neighbours must be adjacent, and every tree-shaped
// six-cycle pattern through a new edge of v needs a middle vertex for each
// fully fixed opposite pair.
bool small_cycle_violation(const TreeContext& ctx, const State& st, int v);

// Connectivity bound: the state completed with every edge that could still
// be added; if even that graph is not biconnected the branch is dead.
bool optimistic_biconnected(const TreeContext& ctx, const State& st);

}  // namespace geodetic::search
