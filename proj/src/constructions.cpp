#include "geodetic/constructions.hpp"

#include <algorithm>

namespace geodetic {

Graph complete_graph(int n) {
    if (n < 1) throw BadParameterError("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw BadParameterError("cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spoke
    }
    return g;
}

// ---- cut subdivision -------------------------------------------------------

CutReport validate_cut(const Graph& g, const Cut& cut) {
    if (!is_geodetic(g)) throw NotGeodeticError("cut validation needs a geodetic graph");
    if (!is_connected(g)) throw DisconnectedError("cut validation needs a connected graph");
    int n = g.order();
    uint32_t all = g.vertex_mask();
    uint32_t side[2] = {cut.side_s & all, all & ~cut.side_s};
    CutReport rep;
    if (!side[0] || !side[1]) {
        rep.failure = CutReport::Failure::NotProperCut;
        return rep;
    }
    DistanceTable dt = all_pairs(g);
    // geodetic closure of both sides: interior vertices of the unique
    // shortest path may not leave the side
    for (uint32_t s : side) {
        for (int a = 0; a < n; ++a) {
            if (!(s >> a & 1)) continue;
            for (int b = a + 1; b < n; ++b) {
                if (!(s >> b & 1)) continue;
                int cur = b;
                while (cur != a) {
                    uint32_t m = g.row(cur);
                    int pred = -1;
                    while (m) {
                        int w = __builtin_ctz(m);
                        m &= m - 1;
                        if (dt.dist[a][w] == dt.dist[a][cur] - 1) pred = w;
                    }
                    cur = pred;
                    if (cur != a && !(s >> cur & 1)) {
                        rep.failure = CutReport::Failure::SideNotClosed;
                        rep.a = a;
                        rep.b = b;
                        rep.w = cur;
                        return rep;
                    }
                }
            }
        }
    }
    // parity of every cut edge pair
    std::vector<std::pair<int, int>> edges;  // (S endpoint, other endpoint)
    for (int u = 0; u < n; ++u) {
        if (!(side[0] >> u & 1)) continue;
        uint32_t m = g.row(u) & side[1];
        while (m) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            edges.emplace_back(u, v);
        }
    }
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [u, v] = edges[i];
            auto [w, x] = edges[j];
            if ((dt.dist[u][w] + dt.dist[v][x]) % 2 == 0) {
                rep.failure = CutReport::Failure::ParityViolation;
                rep.u = u;
                rep.v = v;
                rep.x = w;
                rep.y = x;
                return rep;
            }
        }
    return rep;
}

Graph subdivide_cut(const Graph& g, const Cut& cut, int k) {
    if (k < 0) throw BadParameterError("subdivision count must be >= 0");
    CutReport rep = validate_cut(g, cut);
    if (rep.failure == CutReport::Failure::NotProperCut)
        throw InvalidCutError("cut sides must both be non-empty");
    if (rep.failure == CutReport::Failure::SideNotClosed)
        throw InvalidCutError("cut side is not geodetically closed: path " +
                              std::to_string(rep.a) + ".." + std::to_string(rep.b) +
                              " leaves it through " + std::to_string(rep.w));
    if (rep.failure == CutReport::Failure::ParityViolation)
        throw InvalidCutError("cut edges {" + std::to_string(rep.u) + "," + std::to_string(rep.v) +
                              "} and {" + std::to_string(rep.x) + "," + std::to_string(rep.y) +
                              "} have even distance sum");
    int n = g.order();
    uint32_t s_mask = cut.side_s & g.vertex_mask();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        if (!(s_mask >> u & 1)) continue;
        uint32_t m = g.row(u) & ~s_mask & g.vertex_mask();
        while (m) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            edges.emplace_back(u, v);
        }
    }
    long total = n + long(k) * long(edges.size());
    if (total > kMaxVertices)
        throw CapacityError("subdivided graph needs " + std::to_string(total) + " vertices");
    Graph out{int(total)};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) out.add_edge(u, v);
    int next = n;
    for (auto [u, v] : edges) {
        if (k == 0) continue;
        out.remove_edge(u, v);
        int prev = u;
        for (int i = 0; i < k; ++i) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, v);
    }
    return out;
}

// ---- subdivided complete graphs -------------------------------------------

Graph subdivide_complete(const std::vector<int>& labels) {
    int n = int(labels.size());
    if (n < 3) throw BadParameterError("complete subdivision needs at least 3 vertices");
    long sum = 0;
    for (int a : labels) {
        if (a < 0) throw BadParameterError("vertex labels must be >= 0");
        sum += a;
    }
    long total = n + long(n - 1) * sum;
    if (total > kMaxVertices)
        throw CapacityError("subdivided K_n needs " + std::to_string(total) + " vertices");
    Graph g{int(total)};
    int next = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int len = labels[size_t(i)] + labels[size_t(j)];
            int prev = i;
            for (int a = 0; a < len; ++a) {
                g.add_edge(prev, next);
                prev = next++;
            }
            g.add_edge(prev, j);
        }
    return g;
}

Graph subdivide_uniform(const Graph& g, int t) {
    if (t < 0 || t % 2 != 0)
        throw BadParameterError("uniform subdivision count must be even and >= 0");
    int n = g.order();
    long total = n + long(t) * g.edge_count();
    if (total > kMaxVertices)
        throw CapacityError("subdivided graph needs " + std::to_string(total) + " vertices");
    Graph out{int(total)};
    int next = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            if (t == 0) {
                out.add_edge(u, v);
                continue;
            }
            int prev = u;
            for (int a = 0; a < t; ++a) {
                out.add_edge(prev, next);
                prev = next++;
            }
            out.add_edge(prev, v);
        }
    return out;
}

// ---- two-parameter families ------------------------------------------------

namespace {

// Appends a path with s interior vertices between existing vertices a and b.
void path_join(Graph& g, int a, int b, int s, int& next) {
    int prev = a;
    for (int i = 0; i < s; ++i) {
        g.add_edge(prev, next);
        prev = next++;
    }
    g.add_edge(prev, b);
}

// Star gadget joining clique X = [x0, x0+m) to clique Y = [y0, y0+n):
// one centre per X vertex with one leaf per Y vertex, centre i tied to
// X[i] and leaf (i, j) tied to Y[j], all through paths with s interiors.
void star_join(Graph& g, int x0, int m, int y0, int n, int s, int& next_star, int& next_path) {
    for (int i = 0; i < m; ++i) {
        int centre = next_star++;
        int leaves = next_star;
        next_star += n;
        path_join(g, x0 + i, centre, s, next_path);
        for (int j = 0; j < n; ++j) {
            g.add_edge(centre, leaves + j);
            path_join(g, leaves + j, y0 + j, s, next_path);
        }
    }
}

}  // namespace

Graph h_graph(int m, int n, int s) {
    if (m < 1 || n < 1 || s < 0) throw BadParameterError("h graph needs m, n >= 1 and s >= 0");
    long total = m + n + long(m) * (1 + n) * (1 + s);
    if (total > kMaxVertices)
        throw CapacityError("h graph needs " + std::to_string(total) + " vertices");
    Graph g{int(total)};
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    for (int u = m; u < m + n; ++u)
        for (int v = u + 1; v < m + n; ++v) g.add_edge(u, v);
    int next_star = m + n;
    int next_path = m + n + m * (1 + n);
    star_join(g, 0, m, m, n, s, next_star, next_path);
    return g;
}

Graph big_h_graph(int m, int n, int p, int s) {
    if (m < 1 || n < 1 || p < 1 || s < 0)
        throw BadParameterError("H graph needs m, n, p >= 1 and s >= 0");
    long stars = long(m) * (1 + n) + long(n) * (1 + p) + long(p) * (1 + m);
    long total = m + n + p + stars * (1 + s);
    if (total > kMaxVertices)
        throw CapacityError("H graph needs " + std::to_string(total) + " vertices");
    Graph g{int(total)};
    int base[3] = {0, m, m + n};
    int size[3] = {m, n, p};
    for (int c = 0; c < 3; ++c)
        for (int u = base[c]; u < base[c] + size[c]; ++u)
            for (int v = u + 1; v < base[c] + size[c]; ++v) g.add_edge(u, v);
    int next_star = m + n + p;
    int next_path = int(m + n + p + stars);
    for (int c = 0; c < 3; ++c) {
        int d = (c + 1) % 3;
        star_join(g, base[c], size[c], base[d], size[d], s, next_star, next_path);
    }
    return g;
}

Graph f_graph(int k) {
    if (k < 3 || k % 2 == 0) throw BadParameterError("F graph needs odd k >= 3");
    long total = 2 * k + 13;
    if (total > kMaxVertices)
        throw CapacityError("F graph needs " + std::to_string(total) + " vertices");
    Graph g{int(total)};
    auto u = [&](int i) { return i - 1; };      // u_1..u_k
    auto v = [&](int i) { return k + i - 1; };  // v_1..v_k
    int b = 2 * k, s1 = 2 * k + 1, s2 = 2 * k + 2, t1 = 2 * k + 3, t2 = 2 * k + 4;
    for (int i = 1; i < k; ++i) {
        g.add_edge(u(i), u(i + 1));
        g.add_edge(v(i), v(i + 1));
    }
    g.add_edge(u(k), u(1));
    g.add_edge(v(k), v(1));
    g.add_edge(b, u((k + 1) / 2));
    g.add_edge(b, v((k + 1) / 2));
    g.add_edge(s1, u(1));
    g.add_edge(s2, u(k));
    g.add_edge(t1, v(1));
    g.add_edge(t2, v(k));
    int next = 2 * k + 5;
    for (int s : {s1, s2})
        for (int t : {t1, t2}) path_join(g, s, t, 2, next);
    return g;
}

Graph widespread_petersen(int t) {
    if (t < 0) throw BadParameterError("spoke subdivision count must be >= 0");
    long total = 10 + 5L * t;
    if (total > kMaxVertices)
        throw CapacityError("widespread Petersen graph needs " + std::to_string(total) +
                            " vertices");
    Graph g{int(total)};
    int next = 10;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        path_join(g, i, 5 + i, t, next);
    }
    return g;
}

// ---- projective planes ------------------------------------------------------

namespace {

bool is_prime(int k) {
    if (k < 2) return false;
    for (int d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

}  // namespace

ProjectivePlane projective_plane(int k) {
    if (!is_prime(k)) throw BadParameterError("plane order must be prime");
    ProjectivePlane plane;
    plane.order = k;
    // homogeneous coordinates over Z_k, first nonzero entry scaled to 1
    std::vector<std::array<int, 3>> points;
    for (int y = 0; y < k; ++y)
        for (int z = 0; z < k; ++z) points.push_back({1, y, z});
    for (int z = 0; z < k; ++z) points.push_back({0, 1, z});
    points.push_back({0, 0, 1});
    std::sort(points.begin(), points.end());
    int np = int(points.size());
    plane.lines.resize(size_t(np));
    for (int li = 0; li < np; ++li) {
        const auto& l = points[size_t(li)];
        for (int pi = 0; pi < np; ++pi) {
            const auto& p = points[size_t(pi)];
            if ((l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % k == 0)
                plane.lines[size_t(li)].push_back(pi);
        }
    }
    return plane;
}

Graph projective_plane_graph(int k) {
    ProjectivePlane plane = projective_plane(k);
    int np = int(plane.lines.size());
    long total = long(np) * (k + 2);
    if (total > kMaxVertices)
        throw CapacityError("plane graph of order " + std::to_string(k) + " needs " +
                            std::to_string(total) + " vertices");
    Graph g{int(total)};
    int point_base = np * (k + 1);
    for (int li = 0; li < np; ++li) {
        int base = li * (k + 1);
        for (int a = 0; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) g.add_edge(base + a, base + b);
        for (int a = 0; a <= k; ++a) g.add_edge(base + a, point_base + plane.lines[size_t(li)][size_t(a)]);
    }
    return g;
}

}  // namespace geodetic
