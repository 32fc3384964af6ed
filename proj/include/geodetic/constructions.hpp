#pragma once

#include <cstdint>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3; geodetic only for odd n
Graph petersen_graph();

// ---- cut subdivision -------------------------------------------------------

// Bipartition of the vertex set into side S (mask) and its complement; the
// cut edges are the edges running between the sides.
struct Cut {
    uint32_t side_s = 0;
};

struct CutReport {
    enum class Failure { None, NotProperCut, SideNotClosed, ParityViolation };
    Failure failure = Failure::None;
    // witnesses: for SideNotClosed the offending pair (a, b) and the path
    // vertex w that escapes the side; for ParityViolation the two cut edges
    // {u, v}, {x, y} (u, x on side S) with d(u,x) + d(v,y) even.
    int a = -1, b = -1, w = -1;
    int u = -1, v = -1, x = -1, y = -1;

    bool ok() const { return failure == Failure::None; }
};

// Checks that a geodetic graph g and cut satisfy the subdivision conditions:
// both sides geodetically closed (the unique path between two vertices of a
// side stays inside it) and, for every two cut edges {u,v}, {w,x} with u, w
// on side S, d(u,w) + d(v,x) odd.  Throws NotGeodeticError when g is not
// geodetic; NotProperCut flags an empty side or a same-side "cut" request.
CutReport validate_cut(const Graph& g, const Cut& cut);

// Subdivides every cut edge with k new vertices.  The cut must validate
// (InvalidCutError otherwise); the result is geodetic again.  Original
// vertices keep their labels; path vertices are appended per cut edge in
// (u, v) lexicographic order, from the S endpoint towards the other side.
Graph subdivide_cut(const Graph& g, const Cut& cut, int k);

// ---- subdivided complete graphs -------------------------------------------

// K_n with vertex labels >= 0; edge {i, j} is replaced by a path with
// labels[i] + labels[j] interior vertices.  Geodetic for any labeling.
Graph subdivide_complete(const std::vector<int>& labels);

// Every edge subdivided with t interior vertices, t even (throws
// BadParameterError on odd t).  Preserves the geodetic property.
Graph subdivide_uniform(const Graph& g, int t);

// ---- two-parameter families ------------------------------------------------

// Join of K_m and K_n through m stars with n leaves: clique vertex i runs a
// path (s interior vertices) to star centre i, and leaf j of star i a path to
// clique vertex j of K_n.  Order m + n + m(1 + n) + s m(1 + n).
Graph h_graph(int m, int n, int s);

// Cyclic version on three cliques K_m, K_n, K_p with the same star gadget on
// each of the pairs (m,n), (n,p), (p,m).
Graph big_h_graph(int m, int n, int p, int s);

// Two k-cycles (k odd) bridged through b and four terminal paths; order
// 2k + 13.  The diameter-5 family member for k = 3, 5, ...
Graph f_graph(int k);

// Petersen graph with every spoke subdivided t times; order 10 + 5t.
Graph widespread_petersen(int t);

// ---- projective planes ------------------------------------------------------

// Projective plane of prime order k over Z_k: k^2+k+1 points and lines,
// k+1 points per line.  Throws BadParameterError unless k is prime.
struct ProjectivePlane {
    int order = 0;
    std::vector<std::vector<int>> lines;  // point ids per line, increasing
};

ProjectivePlane projective_plane(int k);

// Incidence-derived geodetic graph: a (k+1)-clique per line plus one vertex
// per point, point vertex adjacent to one clique vertex for each line
// through the point.  Order (k^2+k+1)(k+2); only k = 2 fits 32 vertices.
Graph projective_plane_graph(int k);

}  // namespace geodetic
