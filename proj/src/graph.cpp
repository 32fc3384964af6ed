#include "geodetic/graph.hpp"

#include <algorithm>

namespace geodetic {

Graph Graph::permuted(std::span<const int> perm) const {
    Graph out(n_);
    for (int v = 0; v < n_; ++v) {
        uint32_t m = adj_[v];
        while (m) {
            int u = __builtin_ctz(m);
            m &= m - 1;
            if (u > v) out.add_edge(perm[v], perm[u]);
        }
    }
    return out;
}

PathCounts bfs_paths(const Graph& g, int src) {
    PathCounts pc;
    pc.dist.fill(kUnreachable);
    pc.sigma.fill(0);
    pc.dist[src] = 0;
    pc.sigma[src] = 1;
    int queue[32];
    int head = 0, tail = 0;
    queue[tail++] = src;
    while (head < tail) {
        int u = queue[head++];
        uint32_t m = g.row(u);
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            if (pc.dist[w] < 0) {
                pc.dist[w] = int8_t(pc.dist[u] + 1);
                pc.sigma[w] = pc.sigma[u];
                queue[tail++] = w;
            } else if (pc.dist[w] == pc.dist[u] + 1) {
                pc.sigma[w] = uint8_t(std::min(2, pc.sigma[w] + pc.sigma[u]));
            }
        }
    }
    return pc;
}

DistanceTable all_pairs(const Graph& g) {
    DistanceTable t;
    for (int v = 0; v < g.order(); ++v) {
        PathCounts pc = bfs_paths(g, v);
        t.dist[v] = pc.dist;
        t.sigma[v] = pc.sigma;
    }
    return t;
}

// Bit-parallel double-geodesic detection: grow reachability sets one level
// per round; a frontier vertex reached through two distinct predecessors in
// the same round has two shortest paths.
bool is_geodetic(const Graph& g) {
    int n = g.order();
    uint32_t reach[32];
    for (int v = 0; v < n; ++v) reach[v] = g.row(v) | (1u << v);
    for (int round = 1; round < n; ++round) {
        bool grew = false;
        for (int v = 0; v < n; ++v) {
            uint32_t frontier_src = reach[v] & ~(1u << v);
            uint32_t unseen = ~reach[v];
            uint32_t m = frontier_src;
            uint32_t added = 0;
            while (m) {
                int j = __builtin_ctz(m);
                m &= m - 1;
                uint32_t next = g.row(j) & unseen;
                if (added & next) return false;  // second predecessor
                added |= next;
            }
            if (added) {
                reach[v] |= added;
                grew = true;
            }
        }
        if (!grew) break;
    }
    return true;
}

namespace {

// Vertices of `mask` reachable from its lowest vertex inside `mask`.
uint32_t flood(const Graph& g, uint32_t mask) {
    if (!mask) return 0;
    uint32_t seen = mask & (~mask + 1);  // lowest set bit
    for (;;) {
        uint32_t grow = seen;
        uint32_t m = seen;
        while (m) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            grow |= g.row(v) & mask;
        }
        if (grow == seen) return seen;
        seen = grow;
    }
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    uint32_t all = g.vertex_mask();
    return flood(g, all) == all;
}

bool is_biconnected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return false;
    if (n == 2) return g.adjacent(0, 1);
    uint32_t all = g.vertex_mask();
    if (flood(g, all) != all) return false;
    for (int v = 0; v < n; ++v) {
        uint32_t rest = all & ~(1u << v);
        if (flood(g, rest) != rest) return false;
    }
    return true;
}

bool check_4cycles(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            uint32_t common = g.row(u) & g.row(v);
            if (__builtin_popcount(common) >= 2) return false;
        }
    return true;
}

namespace {

bool ham_extend(const Graph& g, int start, int cur, uint32_t visited, int left) {
    if (left == 0) return g.adjacent(cur, start);
    uint32_t todo = g.vertex_mask() & ~visited;
    // Every still-unvisited vertex needs two usable slots among the
    // unvisited part, the path head and the cycle start.
    uint32_t usable = todo | (1u << cur) | (1u << start);
    uint32_t m = todo;
    while (m) {
        int w = __builtin_ctz(m);
        m &= m - 1;
        if (__builtin_popcount(g.row(w) & usable) < 2) return false;
    }
    uint32_t cand = g.row(cur) & todo;
    while (cand) {
        int w = __builtin_ctz(cand);
        cand &= cand - 1;
        if (ham_extend(g, start, w, visited | (1u << w), left - 1)) return true;
    }
    return false;
}

bool is_hamiltonian(const Graph& g) {
    int n = g.order();
    if (n < 3) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) return false;
    return ham_extend(g, 0, 0, 1u, n - 1);
}

}  // namespace

GraphReport graph_report(const Graph& g) {
    int n = g.order();
    if (n == 0) throw DisconnectedError("empty graph has no report");
    if (!is_connected(g)) throw DisconnectedError("graph is not connected");
    GraphReport r;
    int ecc_min = n, ecc_max = 0;
    for (int v = 0; v < n; ++v) {
        PathCounts pc = bfs_paths(g, v);
        int ecc = 0;
        for (int u = 0; u < n; ++u) ecc = std::max<int>(ecc, pc.dist[u]);
        ecc_min = std::min(ecc_min, ecc);
        ecc_max = std::max(ecc_max, ecc);
    }
    r.radius = ecc_min;
    r.diameter = ecc_max;
    r.min_degree = n == 1 ? 0 : g.degree(0);
    bool reg = true;
    for (int v = 0; v < n; ++v) {
        r.min_degree = std::min(r.min_degree, g.degree(v));
        reg = reg && g.degree(v) == g.degree(0);
    }
    r.regular = reg;
    r.hamiltonian = is_hamiltonian(g);
    return r;
}

ShortestPathTree shortest_path_tree(const Graph& g, int r) {
    int n = g.order();
    PathCounts pc = bfs_paths(g, r);
    RootedTree raw;
    raw.n = n;
    // Sort vertices by BFS level first so the raw tree is already in level
    // order with parent < child; canonical_level_order then fixes sibling
    // order.
    std::array<int, 32> by_level{};
    for (int v = 0; v < n; ++v) by_level[v] = v;
    std::sort(by_level.begin(), by_level.begin() + n, [&](int a, int b) {
        if (pc.dist[a] != pc.dist[b]) return pc.dist[a] < pc.dist[b];
        return a < b;
    });
    std::array<int8_t, 32> pos{};  // input vertex -> raw tree index
    for (int i = 0; i < n; ++i) {
        int v = by_level[i];
        if (pc.dist[v] < 0) throw DisconnectedError("vertex unreachable from the root");
        pos[v] = int8_t(i);
    }
    raw.parent[0] = -1;
    for (int i = 1; i < n; ++i) {
        int v = by_level[i];
        uint32_t preds = 0;
        uint32_t m = g.row(v);
        while (m) {
            int u = __builtin_ctz(m);
            m &= m - 1;
            if (pc.dist[u] == pc.dist[v] - 1) preds |= 1u << u;
        }
        if (__builtin_popcount(preds) != 1)
            throw NotGeodeticError("vertex has several shortest paths from the root");
        raw.parent[i] = pos[__builtin_ctz(preds)];
        raw.level[i] = pc.dist[v];
    }
    // Canonicalize and compose the two relabelings.
    ShortestPathTree out;
    std::array<int8_t, 32> raw_to_canon{};
    out.tree = canonical_level_order(raw, raw_to_canon);
    for (int v = 0; v < n; ++v) out.old_label[raw_to_canon[pos[v]]] = int8_t(v);
    return out;
}

}  // namespace geodetic
