#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "geodetic/errors.hpp"
#include "geodetic/rooted_tree.hpp"

namespace geodetic {

inline constexpr int kMaxVertices = 32;

// Undirected simple graph on at most 32 vertices, one adjacency bitmask row
// per vertex.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw CapacityError("graph order " + std::to_string(n) + " out of range [0, 32]");
    }

    int order() const { return n_; }

    uint32_t row(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }

    void remove_edge(int u, int v) {
        adj_[u] &= ~(1u << v);
        adj_[v] &= ~(1u << u);
    }

    int degree(int v) const { return __builtin_popcount(adj_[v]); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    uint32_t vertex_mask() const { return n_ == 32 ? ~0u : (1u << n_) - 1u; }

    // Relabeled copy: vertex v of *this becomes perm[v] in the result.
    Graph permuted(std::span<const int> perm) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::array<uint32_t, 32> adj_{};
};

// Distances and saturating geodesic counts from one or all sources.
// dist -1 means unreachable; sigma counts shortest paths, capped at 2.
inline constexpr int8_t kUnreachable = -1;

struct PathCounts {
    std::array<int8_t, 32> dist{};
    std::array<uint8_t, 32> sigma{};
};

struct DistanceTable {
    std::array<std::array<int8_t, 32>, 32> dist{};
    std::array<std::array<uint8_t, 32>, 32> sigma{};
};

PathCounts bfs_paths(const Graph& g, int src);
DistanceTable all_pairs(const Graph& g);

// True iff every vertex pair is joined by at most one shortest path.
// Disconnected graphs qualify when each component does.
bool is_geodetic(const Graph& g);

bool is_connected(const Graph& g);

// Biconnected: connected with no articulation vertex.  K_2 counts as
// biconnected, the one-vertex graph does not.
bool is_biconnected(const Graph& g);

// True iff every 4-cycle induces a complete subgraph; equivalently no
// non-adjacent pair has two common neighbours.
bool check_4cycles(const Graph& g);

struct GraphReport {
    int radius = 0;
    int diameter = 0;
    int min_degree = 0;
    bool regular = false;
    bool hamiltonian = false;
};

// Requires a connected graph, throws DisconnectedError otherwise.
// Hamiltonicity by backtracking; fine for the orders this library holds.
GraphReport graph_report(const Graph& g);

// Shortest-path tree rooted at r, defined only when every vertex has a
// unique shortest path from r (throws NotGeodeticError otherwise, and
// DisconnectedError when some vertex is unreachable).  The result is in
// canonical level order; old_label[i] gives the input vertex that became
// tree vertex i.
struct ShortestPathTree {
    RootedTree tree;
    std::array<int8_t, 32> old_label{};
};

ShortestPathTree shortest_path_tree(const Graph& g, int r);

}  // namespace geodetic
