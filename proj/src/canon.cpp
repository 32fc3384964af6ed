#include "geodetic/canon.hpp"

#include <algorithm>
#include <cstring>
#include <vector>

namespace geodetic {

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(126);
    for (uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

size_t CanonicalKey::hash() const {
    // FNV-1a over the key bytes
    uint64_t h = 1469598103934665603ull;
    for (uint8_t b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return size_t(h);
}

std::string aut_count_to_string(AutCount c) {
    if (c == 0) return "0";
    std::string out;
    while (c > 0) {
        out.push_back(char('0' + int(c % 10)));
        c /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

using Perm = std::array<int8_t, 32>;

Perm identity_perm(int n) {
    Perm p{};
    for (int i = 0; i < n; ++i) p[i] = int8_t(i);
    return p;
}

Perm compose(const Perm& a, const Perm& b, int n) {  // (a*b)(x) = a[b[x]]
    Perm r{};
    for (int i = 0; i < n; ++i) r[i] = a[b[i]];
    return r;
}

Perm invert(const Perm& a, int n) {
    Perm r{};
    for (int i = 0; i < n; ++i) r[a[i]] = int8_t(i);
    return r;
}

bool is_identity(const Perm& a, int n) {
    for (int i = 0; i < n; ++i)
        if (a[i] != i) return false;
    return true;
}

// ---- Schreier-Sims order computation ---------------------------------------
//
// Exact group order from a generator list.  Levels use the natural base
// 0, 1, 2, ...; the outer loop re-closes orbits and sifts all Schreier
// generators until the chain is stable, which dodges the usual incremental
// bookkeeping at tolerable cost for n <= 32.
AutCount permutation_group_order(std::vector<Perm> gens, int n) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [&](const Perm& p) { return is_identity(p, n); }),
               gens.end());
    if (gens.empty()) return 1;

    std::vector<int> tag(gens.size());  // first base point a generator moves
    auto compute_tag = [&](const Perm& p) {
        for (int i = 0; i < n; ++i)
            if (p[i] != i) return i;
        return n;
    };
    for (size_t i = 0; i < gens.size(); ++i) tag[i] = compute_tag(gens[i]);

    std::vector<std::array<Perm, 32>> trans{size_t(n)};
    std::vector<uint32_t> orbit(size_t(n), 0);

    auto rebuild_orbit = [&](int lvl) {
        orbit[lvl] = 1u << lvl;
        trans[lvl][lvl] = identity_perm(n);
        std::vector<int> queue{lvl};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int p = queue[qi];
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                if (tag[gi] < lvl) continue;
                int q = gens[gi][p];
                if (!(orbit[lvl] >> q & 1)) {
                    orbit[lvl] |= 1u << q;
                    trans[lvl][q] = compose(gens[gi], trans[lvl][p], n);
                    queue.push_back(q);
                }
            }
        }
    };

    // Strip g through the chain; returns the level it failed at, or n.
    auto strip = [&](Perm g, Perm& residue) {
        for (int i = 0; i < n; ++i) {
            int p = g[i];
            if (p == i) continue;
            if (!(orbit[i] >> p & 1)) {
                residue = g;
                return i;
            }
            g = compose(invert(trans[i][p], n), g, n);
        }
        residue = g;
        return n;
    };

    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (int lvl = 0; lvl < n; ++lvl) rebuild_orbit(lvl);
        for (int lvl = 0; lvl < n && !dirty; ++lvl) {
            uint32_t m = orbit[lvl];
            while (m && !dirty) {
                int p = __builtin_ctz(m);
                m &= m - 1;
                for (size_t gi = 0; gi < gens.size() && !dirty; ++gi) {
                    if (tag[gi] < lvl) continue;
                    const Perm& s = gens[gi];
                    Perm u = compose(invert(trans[lvl][s[p]], n), compose(s, trans[lvl][p], n), n);
                    if (is_identity(u, n)) continue;
                    Perm res;
                    if (strip(u, res) < n) {
                        gens.push_back(res);
                        tag.push_back(compute_tag(res));
                        dirty = true;
                    }
                }
            }
        }
    }

    AutCount order = 1;
    for (int lvl = 0; lvl < n; ++lvl) order *= AutCount(__builtin_popcount(orbit[lvl]));
    return order;
}

// ---- equitable refinement ---------------------------------------------------

struct CellList {
    uint32_t cell[32];
    int count = 0;
};

// Splits cells by neighbour counts into every other cell until stable.
// Subcells replace their cell in ascending count order, so the procedure
// commutes with relabeling.
void refine(const Graph& g, CellList& cl) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int si = 0; si < cl.count; ++si) {
            uint32_t splitter = cl.cell[si];
            for (int ci = 0; ci < cl.count; ++ci) {
                uint32_t c = cl.cell[ci];
                if (__builtin_popcount(c) <= 1) continue;
                uint32_t bucket[33];
                int counts_seen[33];
                int nb = 0;
                uint32_t m = c;
                while (m) {
                    int v = __builtin_ctz(m);
                    m &= m - 1;
                    int k = __builtin_popcount(g.row(v) & splitter);
                    int bi = 0;
                    while (bi < nb && counts_seen[bi] != k) ++bi;
                    if (bi == nb) {
                        counts_seen[nb] = k;
                        bucket[nb] = 0;
                        ++nb;
                    }
                    bucket[bi] |= 1u << v;
                }
                if (nb <= 1) continue;
                // ascending neighbour count
                for (int a = 0; a < nb; ++a)
                    for (int b = a + 1; b < nb; ++b)
                        if (counts_seen[b] < counts_seen[a]) {
                            std::swap(counts_seen[a], counts_seen[b]);
                            std::swap(bucket[a], bucket[b]);
                        }
                std::memmove(cl.cell + ci + nb, cl.cell + ci + 1,
                             size_t(cl.count - ci - 1) * sizeof(uint32_t));
                for (int a = 0; a < nb; ++a) cl.cell[ci + a] = bucket[a];
                cl.count += nb - 1;
                changed = true;
                if (ci < si) si += nb - 1;  // keep pointing at the same splitter
            }
        }
    }
}

// ---- canonical search -------------------------------------------------------

struct Encoding {
    std::array<uint8_t, 62> bits{};

    auto operator<=>(const Encoding&) const = default;
};

Encoding encode_leaf(const Graph& g, const Perm& pos) {
    // pos maps vertex -> canonical index; emit the upper triangle in row
    // order of the relabeled graph, MSB first.
    int n = g.order();
    Perm inv{};
    for (int v = 0; v < n; ++v) inv[pos[v]] = int8_t(v);
    Encoding e;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.adjacent(inv[i], inv[j])) e.bits[bit >> 3] |= uint8_t(0x80u >> (bit & 7));
    return e;
}

struct Searcher {
    const Graph& g;
    int n;
    bool have_leaf = false;
    Encoding first_enc, best_enc;
    Perm first_lab{}, best_lab{};
    std::vector<Perm> gens;
    int8_t path[32];
    int depth = 0;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) {}

    void leaf(const CellList& cl) {
        Perm pos{};
        for (int i = 0; i < cl.count; ++i) pos[__builtin_ctz(cl.cell[i])] = int8_t(i);
        Encoding e = encode_leaf(g, pos);
        if (!have_leaf) {
            have_leaf = true;
            first_enc = best_enc = e;
            first_lab = best_lab = pos;
            return;
        }
        if (e == first_enc)
            gens.push_back(compose(invert(first_lab, n), pos, n));
        else if (e == best_enc && best_lab != first_lab)
            gens.push_back(compose(invert(best_lab, n), pos, n));
        if (e < best_enc) {
            best_enc = e;
            best_lab = pos;
        }
    }

    void descend(const CellList& cl) {
        if (cl.count == n) {
            leaf(cl);
            return;
        }
        int target = -1, target_size = 33;
        for (int i = 0; i < cl.count; ++i) {
            int sz = __builtin_popcount(cl.cell[i]);
            if (sz > 1 && sz < target_size) {
                target = i;
                target_size = sz;
            }
        }
        uint32_t tried = 0;
        uint32_t cand = cl.cell[target];
        while (cand) {
            int v = __builtin_ctz(cand);
            cand &= cand - 1;
            if (in_closure(tried, v)) continue;  // mirrored by an explored sibling branch
            tried |= 1u << v;
            CellList next;
            next.count = cl.count + 1;
            for (int i = 0, o = 0; i < cl.count; ++i) {
                if (i == target) {
                    next.cell[o++] = 1u << v;
                    next.cell[o++] = cl.cell[i] & ~(1u << v);
                } else {
                    next.cell[o++] = cl.cell[i];
                }
            }
            refine(g, next);
            path[depth++] = int8_t(v);
            descend(next);
            --depth;
        }
    }

    // Closure of `mask` under generators fixing the current path pointwise.
    uint32_t closure(uint32_t mask) const {
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Perm& p : gens) {
                bool fixes = true;
                for (int i = 0; i < depth && fixes; ++i) fixes = p[path[i]] == path[i];
                if (!fixes) continue;
                uint32_t mapped = 0;
                uint32_t m = mask;
                while (m) {
                    int x = __builtin_ctz(m);
                    m &= m - 1;
                    mapped |= 1u << p[x];
                }
                if (mapped & ~mask) {
                    mask |= mapped;
                    grew = true;
                }
            }
        }
        return mask;
    }

    bool in_closure(uint32_t tried, int v) const {
        if (!tried) return false;
        return closure(tried) >> v & 1;
    }
};

}  // namespace

CanonicalResult canonicalize(const Graph& g, std::span<const uint8_t> colors) {
    int n = g.order();
    CanonicalResult res;
    res.key.bytes[0] = uint8_t(n);
    if (n == 0) return res;

    CellList cl;
    if (colors.empty()) {
        cl.count = 1;
        cl.cell[0] = g.vertex_mask();
    } else {
        // cells in increasing colour order
        uint8_t sorted[32];
        std::memcpy(sorted, colors.data(), size_t(n));
        std::sort(sorted, sorted + n);
        cl.count = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i] == sorted[i - 1]) continue;
            uint32_t mask = 0;
            for (int v = 0; v < n; ++v)
                if (colors[size_t(v)] == sorted[i]) mask |= 1u << v;
            cl.cell[cl.count++] = mask;
        }
    }
    refine(g, cl);

    Searcher s(g);
    s.descend(cl);
    for (int i = 0; i < 62; ++i) res.key.bytes[i + 1] = s.best_enc.bits[i];
    res.labeling = s.best_lab;
    res.aut_order = permutation_group_order(std::move(s.gens), n);
    return res;
}

CanonicalKey canonical_form(const Graph& g) { return canonicalize(g).key; }

Graph canonical_graph(const CanonicalKey& key) {
    int n = key.order();
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (key.bytes[1 + (bit >> 3)] >> (7 - (bit & 7)) & 1) g.add_edge(i, j);
    return g;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    return canonical_form(a) == canonical_form(b);
}

AutCount automorphism_group_order(const Graph& g) { return canonicalize(g).aut_order; }

}  // namespace geodetic
