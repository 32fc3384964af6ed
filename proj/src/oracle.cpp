#include "geodetic/oracle.hpp"

#include <thread>
#include <vector>

namespace geodetic {

namespace {

struct PairTable {
    int a[496], b[496];
    int m = 0;

    explicit PairTable(int n) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                a[m] = i;
                b[m] = j;
                ++m;
            }
    }
};

bool passes(const Graph& g, OracleFilter f) {
    switch (f) {
        case OracleFilter::All: return true;
        case OracleFilter::Geodetic: return is_geodetic(g);
        case OracleFilter::GeodeticConnected: return is_geodetic(g) && is_connected(g);
        case OracleFilter::GeodeticBiconnected: return is_geodetic(g) && is_biconnected(g);
    }
    return false;
}

template <typename Visit>
void scan_masks(int n, int threads, Visit visit) {
    PairTable pt(n);
    uint64_t total = 1ull << pt.m;
    if (threads < 1) threads = 1;
    auto worker = [&](int w) {
        uint64_t lo = total / uint64_t(threads) * uint64_t(w);
        uint64_t hi = w + 1 == threads ? total : total / uint64_t(threads) * uint64_t(w + 1);
        for (uint64_t mask = lo; mask < hi; ++mask) {
            Graph g(n);
            uint64_t m = mask;
            while (m) {
                int e = __builtin_ctzll(m);
                m &= m - 1;
                g.add_edge(pt.a[e], pt.b[e]);
            }
            visit(w, g);
        }
    };
    if (threads == 1) {
        worker(0);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
}

}  // namespace

OracleCounts brute_force_counts(int n, int threads) {
    if (n < 1 || n > 8)
        throw CapacityError("oracle handles 1 <= n <= 8, got " + std::to_string(n));
    if (threads < 1) threads = 1;
    std::vector<std::map<CanonicalKey, uint8_t>> seen{size_t(threads)};
    scan_masks(n, threads, [&](int w, const Graph& g) {
        if (!is_geodetic(g)) return;
        CanonicalKey key = canonical_form(g);
        auto [it, fresh] = seen[size_t(w)].try_emplace(key, 0);
        if (fresh)
            it->second = uint8_t((is_connected(g) ? 1 : 0) | (is_biconnected(g) ? 2 : 0));
    });
    std::map<CanonicalKey, uint8_t> merged;
    for (auto& part : seen) merged.merge(part);
    OracleCounts c;
    for (auto& [key, flags] : merged) {
        ++c.geodetic;
        if (flags & 1) ++c.connected;
        if (flags & 2) ++c.biconnected;
    }
    return c;
}

std::map<CanonicalKey, Graph> brute_force_graphs(int n, OracleFilter filter, int threads) {
    if (n < 1 || n > 8)
        throw CapacityError("oracle handles 1 <= n <= 8, got " + std::to_string(n));
    if (threads < 1) threads = 1;
    std::vector<std::map<CanonicalKey, Graph>> seen{size_t(threads)};
    scan_masks(n, threads, [&](int w, const Graph& g) {
        if (!passes(g, filter)) return;
        // store the canonical member, independent of scan order
        CanonicalKey key = canonical_form(g);
        seen[size_t(w)].try_emplace(key, canonical_graph(key));
    });
    std::map<CanonicalKey, Graph> merged;
    for (auto& part : seen) merged.merge(part);
    return merged;
}

}  // namespace geodetic
