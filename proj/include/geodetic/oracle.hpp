#pragma once

#include <cstdint>
#include <map>

#include "geodetic/canon.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

// Reference counts obtained by exhausting all edge subsets on n labeled
// vertices.  Deliberately independent of the search engine: no seed trees,
// no pruning, only the geodetic test and canonical dedup.  n <= 8; n = 8
// takes minutes and is opt-in at the surface.
struct OracleCounts {
    uint64_t geodetic = 0;
    uint64_t connected = 0;    // geodetic and connected
    uint64_t biconnected = 0;  // geodetic and biconnected
};

OracleCounts brute_force_counts(int n, int threads = 1);

enum class OracleFilter { All, Geodetic, GeodeticConnected, GeodeticBiconnected };

// One representative per isomorphism class passing the filter, keyed (and
// therefore ordered) by canonical form.
std::map<CanonicalKey, Graph> brute_force_graphs(int n, OracleFilter filter, int threads = 1);

}  // namespace geodetic
