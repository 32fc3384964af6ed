#include "geodetic/search.hpp"

#include <algorithm>
#include <bit>
#include <condition_variable>
#include <deque>
#include <list>
#include <mutex>
#include <span>
#include <thread>
#include <unordered_map>
#include <vector>

#include "geodetic/errors.hpp"
#include "geodetic/treegen.hpp"

namespace geodetic::search {

namespace {

inline uint32_t bit(int v) { return 1u << v; }
inline uint32_t above(int v) { return v >= 31 ? 0u : ~((2u << v) - 1); }

}  // namespace

void Stats::merge(const Stats& o) {
    trees += o.trees;
    trees_skipped += o.trees_skipped;
    states += o.states;
    emitted += o.emitted;
    pruned_cycles += o.pruned_cycles;
    pruned_biconn += o.pruned_biconn;
    pruned_clique += o.pruned_clique;
    pruned_degree += o.pruned_degree;
    cache_hits += o.cache_hits;
}

TreeContext::TreeContext(const RootedTree& t) : tree(t), n(t.n) {
    for (int v = 0; v < n; ++v) {
        level_of[v] = t.level[v];
        parent[v] = t.parent[v];
        if (v > 0) child_mask[t.parent[v]] |= bit(v);
    }
    for (int v = 0; v < n; ++v) {
        level_mask[level_of[v]] |= bit(v);
        tree_deg[v] = (int8_t)(std::popcount(child_mask[v]) + (v > 0 ? 1 : 0));
        sibling_mask[v] = v > 0 ? child_mask[parent[v]] & ~bit(v) : 0;
    }
    levels = (int)level_of[n - 1] + 1;
    max_degree = tree_deg[0];
    for (int v = 0; v < n; ++v)
        if (tree_deg[v] > max_degree) feasible = false;
    // children carry larger indices, so one descending sweep settles desc
    for (int v = n - 1; v >= 0; --v) {
        desc[v][level_of[v]] |= bit(v);
        if (v > 0)
            for (int l = level_of[v]; l < levels; ++l) desc[parent[v]][l] |= desc[v][l];
    }
    for (int p = 0; p < n; ++p) {
        if (!child_mask[p]) continue;
        auto classes = subtree_classes(tree, p);
        for (size_t ci = 0; ci < classes.size(); ++ci)
            for (int c : classes[ci]) sib_class[c] = (int8_t)ci;
    }
}

State initial_state(const TreeContext& ctx) {
    State st;
    for (int v = 0; v < ctx.n; ++v) {
        if (v > 0) {
            st.adj[v] |= bit(ctx.parent[v]);
            st.adj[ctx.parent[v]] |= bit(v);
        }
        st.degree[v] = ctx.tree_deg[v];
        st.block[v] = bit(v);
        st.status[v] = v == 0 ? kComplete : kUnprocessed;
    }
    return st;
}

void add_forbidden_pairs(const TreeContext& ctx, State& st, int u, int v) {
    for (int l = ctx.level_of[u] + 1; l < ctx.levels; ++l) {
        uint32_t mu = ctx.desc[u][l], mv = ctx.desc[v][l];
        if (!mu || !mv) break;
        for (uint32_t m = mu; m; m &= m - 1) st.forbidden[std::countr_zero(m)] |= mv;
        for (uint32_t m = mv; m; m &= m - 1) st.forbidden[std::countr_zero(m)] |= mu;
    }
}

namespace {

// Enumerates the block type vectors in non-increasing lexicographic order and
// fills each block with the lowest unassigned children of its classes.
struct PartitionGen {
    const TreeContext& ctx;
    std::vector<std::vector<int>> members;
    std::vector<int> class_deg, remaining, next_at, prev;
    bool has_prev = false;
    Partition cur;
    std::vector<Partition> out;

    explicit PartitionGen(const TreeContext& c) : ctx(c) {}

    void blocks() {
        bool left = false;
        for (int r : remaining) left = left || r > 0;
        if (!left) {
            out.push_back(cur);
            return;
        }
        std::vector<int> vec(members.size(), 0);
        fill(vec, 0, has_prev);
    }

    void fill(std::vector<int>& vec, size_t ci, bool tight) {
        if (ci == vec.size()) {
            place(vec);
            return;
        }
        int hi = remaining[ci];
        if (tight) hi = std::min(hi, prev[ci]);
        for (int val = hi; val >= 0; --val) {
            vec[ci] = val;
            fill(vec, ci + 1, tight && val == prev[ci]);
        }
        vec[ci] = 0;
    }

    void place(const std::vector<int>& vec) {
        int b = 0;
        for (int x : vec) b += x;
        if (b == 0) return;
        for (size_t i = 0; i < vec.size(); ++i)
            if (vec[i] > 0 && class_deg[i] + b - 1 > ctx.max_degree) return;
        uint32_t mask = 0;
        for (size_t i = 0; i < vec.size(); ++i)
            for (int j = 0; j < vec[i]; ++j) mask |= bit(members[i][next_at[i] + j]);
        std::vector<int> saved_prev = std::move(prev);
        bool saved_has = has_prev;
        for (size_t i = 0; i < vec.size(); ++i) {
            next_at[i] += vec[i];
            remaining[i] -= vec[i];
        }
        cur.push_back(mask);
        prev = vec;
        has_prev = true;
        blocks();
        cur.pop_back();
        for (size_t i = 0; i < vec.size(); ++i) {
            next_at[i] -= vec[i];
            remaining[i] += vec[i];
        }
        prev = std::move(saved_prev);
        has_prev = saved_has;
    }
};

}  // namespace

std::vector<Partition> sibling_partitions(const TreeContext& ctx, int v) {
    uint32_t kids = ctx.child_mask[v];
    if (!kids) return {Partition{}};
    PartitionGen gen(ctx);
    for (uint32_t m = kids; m; m &= m - 1) {
        int c = std::countr_zero(m);
        size_t cl = (size_t)ctx.sib_class[c];
        if (cl >= gen.members.size()) gen.members.resize(cl + 1);
        gen.members[cl].push_back(c);
    }
    size_t k = gen.members.size();
    gen.class_deg.resize(k);
    gen.remaining.resize(k);
    gen.next_at.assign(k, 0);
    gen.prev.assign(k, 0);
    for (size_t i = 0; i < k; ++i) {
        gen.class_deg[i] = ctx.tree_deg[gen.members[i][0]];
        gen.remaining[i] = (int)gen.members[i].size();
    }
    gen.blocks();
    return std::move(gen.out);
}

void apply_partition(const TreeContext& ctx, State& st, int v, const Partition& p) {
    for (uint32_t blk : p) {
        for (uint32_t m = blk; m; m &= m - 1) {
            int a = std::countr_zero(m);
            st.block[a] = blk;
            for (uint32_t m2 = m & (m - 1); m2; m2 &= m2 - 1) {
                int b = std::countr_zero(m2);
                st.adj[a] |= bit(b);
                st.adj[b] |= bit(a);
                ++st.degree[a];
                ++st.degree[b];
                add_forbidden_pairs(ctx, st, a, b);
            }
        }
    }
    for (uint32_t m = ctx.child_mask[v]; m; m &= m - 1)
        st.status[std::countr_zero(m)] = kSemiComplete;
}

uint32_t neighbour_candidates(const TreeContext& ctx, const State& st, int v) {
    uint32_t cand = ctx.level_mask[ctx.level_of[v]] & above(v);
    cand &= ~ctx.sibling_mask[v];
    cand &= ~st.forbidden[v];
    for (uint32_t m = cand; m; m &= m - 1) {
        int u = std::countr_zero(m);
        if (st.degree[u] >= ctx.max_degree || (st.adj[v] & ctx.sibling_mask[u]) ||
            (st.adj[u] & ctx.sibling_mask[v]))
            cand &= ~bit(u);
    }
    return cand;
}

bool clique_neighbour_forces_edge(const TreeContext& ctx, const State& st, int v) {
    uint32_t blk = st.block[v];
    if (std::popcount(blk) < 2) return false;
    if (st.adj[v] & ~(blk | bit(ctx.parent[v]))) return false;
    return std::popcount(blk) + 1 < ctx.n;
}

namespace {

// An opposing pair whose rows are final must be adjacent or share a
// neighbour; anything else certifies distance >= 3 across a 6-cycle.
inline bool pair_needs_middle(const State& st, int s, int t) {
    if (st.status[s] != kComplete || st.status[t] != kComplete) return false;
    if (st.adj[s] >> t & 1) return false;
    return (st.adj[s] & st.adj[t]) == 0;
}

bool six_cycle_violation_at(const TreeContext& ctx, const State& st, int a, int b) {
    int lvl = ctx.level_of[a];
    uint32_t level = ctx.level_mask[lvl];
    int pa = ctx.parent[a], pb = ctx.parent[b];

    // bottom path x - c - z, c an endpoint of the scanned edge
    for (int pick = 0; pick < 2; ++pick) {
        int c = pick ? b : a;
        int x = pick ? a : b;
        for (uint32_t mz = st.adj[c] & level & ~bit(x); mz; mz &= mz - 1) {
            int z = std::countr_zero(mz);
            int px = ctx.parent[x], pz = ctx.parent[z];
            if (px == pz) continue;
            if (lvl >= 2 && ctx.parent[px] == ctx.parent[pz]) {
                // cycle x c z pz g px through the shared grandparent
                int g = ctx.parent[px];
                if (pair_needs_middle(st, x, pz) || pair_needs_middle(st, c, g) ||
                    pair_needs_middle(st, z, px))
                    return true;
            }
            // cycle x c z pz m px with a level edge joining the parents
            uint32_t mm =
                st.adj[px] & st.adj[pz] & ctx.level_mask[lvl - 1] & ~bit(px) & ~bit(pz);
            for (; mm; mm &= mm - 1) {
                int m = std::countr_zero(mm);
                if (pair_needs_middle(st, x, pz) || pair_needs_middle(st, c, m) ||
                    pair_needs_middle(st, z, px))
                    return true;
            }
        }
    }

    if (pa == pb) return false;

    // cycle s t pt gp c ps: the scanned edge stacked over a parent level edge
    if (lvl >= 2) {
        for (int pick = 0; pick < 2; ++pick) {
            int s = pick ? b : a, t = pick ? a : b;
            int ps = ctx.parent[s], pt = ctx.parent[t];
            int gp = ctx.parent[pt];
            for (uint32_t mc = st.adj[ps] & ctx.child_mask[gp] & ~bit(pt); mc; mc &= mc - 1) {
                int c = std::countr_zero(mc);
                if (pair_needs_middle(st, s, gp) || pair_needs_middle(st, t, c) ||
                    pair_needs_middle(st, ps, pt))
                    return true;
            }
        }
    }

    // cycle a b pb y x pa: twin bottom edges under the same pair of parents
    for (uint32_t mx = ctx.sibling_mask[a]; mx; mx &= mx - 1) {
        int x = std::countr_zero(mx);
        for (uint32_t my = st.adj[x] & ctx.sibling_mask[b]; my; my &= my - 1) {
            int y = std::countr_zero(my);
            if (pair_needs_middle(st, a, y) || pair_needs_middle(st, b, x) ||
                pair_needs_middle(st, pa, pb))
                return true;
        }
    }
    return false;
}

}  // namespace

bool small_cycle_violation(const TreeContext& ctx, const State& st, int v) {
    int lvl = ctx.level_of[v];
    uint32_t level = ctx.level_mask[lvl];
    // finished pairs sharing two neighbours must already be adjacent
    uint32_t comp = 0;
    for (uint32_t m = level; m; m &= m - 1) {
        int w = std::countr_zero(m);
        if (st.status[w] == kComplete) comp |= bit(w);
    }
    for (uint32_t ma = comp; ma; ma &= ma - 1) {
        int a = std::countr_zero(ma);
        for (uint32_t mb = ma & (ma - 1) & comp & ~st.adj[a]; mb; mb &= mb - 1) {
            int b = std::countr_zero(mb);
            if (std::popcount(st.adj[a] & st.adj[b]) >= 2) return true;
        }
    }
    if (lvl < 1) return false;
    // v just finished: revisit every six-cycle pattern through its level edges
    for (uint32_t me = st.adj[v] & level; me; me &= me - 1)
        if (six_cycle_violation_at(ctx, st, v, std::countr_zero(me))) return true;
    return false;
}

bool optimistic_biconnected(const TreeContext& ctx, const State& st) {
    int n = ctx.n;
    if (n < 2) return false;
    if (n == 2) return true;
    std::array<uint32_t, 32> rows = st.adj;
    for (int l = 1; l < ctx.levels; ++l) {
        for (uint32_t ma = ctx.level_mask[l]; ma; ma &= ma - 1) {
            int a = std::countr_zero(ma);
            if (st.degree[a] >= ctx.max_degree) continue;
            for (uint32_t mb = ma & (ma - 1); mb; mb &= mb - 1) {
                int b = std::countr_zero(mb);
                if (st.degree[b] >= ctx.max_degree) continue;
                if (rows[a] >> b & 1) continue;
                bool addable = ctx.parent[a] == ctx.parent[b]
                                   ? st.status[a] == kUnprocessed && st.status[b] == kUnprocessed
                                   : !(st.forbidden[a] >> b & 1) && st.status[a] != kComplete;
                if (addable) {
                    rows[a] |= bit(b);
                    rows[b] |= bit(a);
                }
            }
        }
    }
    uint32_t full = n == 32 ? ~0u : bit(n) - 1;
    for (int v = 0; v < n; ++v) {
        uint32_t rest = full & ~bit(v);
        uint32_t seen = bit(std::countr_zero(rest));
        uint32_t frontier = seen;
        while (frontier) {
            uint32_t nxt = 0;
            for (uint32_t m = frontier; m; m &= m - 1) nxt |= rows[std::countr_zero(m)];
            nxt &= rest & ~seen;
            seen |= nxt;
            frontier = nxt;
        }
        if (seen != rest) return false;
    }
    return true;
}

namespace {

struct ColoredKey {
    CanonicalKey key;
    std::array<uint8_t, 32> colors{};
    bool operator==(const ColoredKey&) const = default;
};

struct ColoredKeyHash {
    size_t operator()(const ColoredKey& k) const {
        uint64_t h = k.key.hash();
        for (uint8_t c : k.colors) h = (h ^ c) * 0x100000001b3ull;
        return (size_t)h;
    }
};

class IsoCache {
   public:
    explicit IsoCache(size_t cap) : cap_(cap) {}

    // True when an equivalent state was cached before; inserts on miss.
    // Keys live in the map only; the recency list points at them.
    bool seen(const ColoredKey& k) {
        auto it = map_.find(k);
        if (it != map_.end()) {
            lru_.splice(lru_.begin(), lru_, it->second);
            return true;
        }
        auto ins = map_.emplace(k, lru_.end()).first;
        lru_.push_front(&ins->first);
        ins->second = lru_.begin();
        if (map_.size() > cap_) {
            map_.erase(map_.find(*lru_.back()));
            lru_.pop_back();
        }
        return false;
    }

   private:
    size_t cap_;
    std::list<const ColoredKey*> lru_;
    std::unordered_map<ColoredKey, std::list<const ColoredKey*>::iterator, ColoredKeyHash> map_;
};

Graph state_graph(const State& st, int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (uint32_t m = st.adj[v] & above(v); m; m &= m - 1) g.add_edge(v, std::countr_zero(m));
    return g;
}

struct TreeSearch {
    const TreeContext& ctx;
    const Options& opts;
    Stats& stats;
    std::vector<IsoCache>* caches;
    std::map<CanonicalKey, Graph>& out;

    int first_on_level(int l) const { return std::countr_zero(ctx.level_mask[l]); }

    int next_on_level(int v) const {
        uint32_t later = ctx.level_mask[ctx.level_of[v]] & above(v);
        return later ? std::countr_zero(later) : -1;
    }

    // States equivalent as vertex-coloured graphs (colour = level and status)
    // extend to the same result sets, so one representative per step suffices.
    bool cache_check(int step, const State& st) {
        if (!caches) return false;
        Graph g = state_graph(st, ctx.n);
        std::array<uint8_t, 32> colors{};
        for (int v = 0; v < ctx.n; ++v)
            colors[v] = (uint8_t)(ctx.level_of[v] * 3 + st.status[v]);
        CanonicalResult res = canonicalize(g, std::span<const uint8_t>(colors.data(), (size_t)ctx.n));
        ColoredKey ck;
        ck.key = res.key;
        for (int v = 0; v < ctx.n; ++v) ck.colors[(size_t)res.labeling[v]] = colors[v];
        return (*caches)[(size_t)step].seen(ck);
    }

    // Degrees only grow and eligibility only shrinks, so an incomplete vertex
    // whose headroom right now (an open sibling block plus at most one edge
    // per foreign parent with an eligible unsaturated child) cannot lift it
    // to the cap never reaches it.  Everything read is a colour-class
    // invariant, so this composes with the isomorph cache.
    bool regular_deficit(const State& st) const {
        uint32_t open = 0;  // vertices that can still take an edge
        for (int v = 0; v < ctx.n; ++v)
            if (st.degree[v] < ctx.max_degree) open |= bit(v);
        for (int v = 1; v < ctx.n; ++v) {
            if (st.status[v] == kComplete) continue;
            uint32_t eligible = ~st.adj[v] & ~st.forbidden[v] & open & ~bit(v);
            int gain = st.status[v] == kUnprocessed
                           ? std::popcount(ctx.sibling_mask[v] & eligible)
                           : 0;
            uint32_t cand = ctx.level_mask[ctx.level_of[v]] & ~ctx.sibling_mask[v] & eligible;
            for (uint32_t pm = ctx.level_mask[ctx.level_of[v] - 1] & ~bit(ctx.parent[v]); pm;
                 pm &= pm - 1)
                gain += (ctx.child_mask[std::countr_zero(pm)] & cand) != 0;
            if (st.degree[v] + gain < ctx.max_degree) return true;
        }
        return false;
    }

    void gen_cliques(int v, const State& st) {
        ++stats.states;
        bool leaf = ctx.child_mask[v] == 0;
        for (const Partition& p : sibling_partitions(ctx, v)) {
            State s2 = st;
            apply_partition(ctx, s2, v, p);
            if (opts.regular_only && !leaf && regular_deficit(s2)) {
                ++stats.pruned_degree;
                continue;
            }
            if (!leaf) {
                if (opts.prune_biconnectivity && !optimistic_biconnected(ctx, s2)) {
                    ++stats.pruned_biconn;
                    continue;
                }
                if (cache_check(2 * v, s2)) {
                    ++stats.cache_hits;
                    continue;
                }
            }
            after_cliques(v, s2);
        }
    }

    void after_cliques(int v, const State& st) {
        int nxt = next_on_level(v);
        if (nxt >= 0) {
            gen_cliques(nxt, st);
            return;
        }
        int l = ctx.level_of[v];
        if (l + 1 < ctx.levels)
            gen_neighbour(first_on_level(l + 1), st);
        else
            final_check(st);
    }

    void gen_neighbour(int v, const State& st) {
        ++stats.states;
        int budget = ctx.max_degree - st.degree[v];
        int need = opts.regular_only ? budget : -1;
        bool force = opts.prune_clique_neighbour && clique_neighbour_forces_edge(ctx, st, v);
        int cl[32];
        int cn = 0;
        for (uint32_t m = neighbour_candidates(ctx, st, v); m; m &= m - 1)
            cl[cn++] = std::countr_zero(m);
        subsets(v, st, cl, cn, 0, 0u, 0u, budget, need, force);
    }

    void subsets(int v, const State& st, const int* cl, int cn, int i, uint32_t chosen,
                 uint32_t used_parents, int budget, int need, bool force) {
        int cnt = std::popcount(chosen);
        if (need >= 0 && cnt + (cn - i) < need) return;
        if (i == cn) {
            if (need >= 0 && cnt != need) return;
            if (chosen == 0 && force) {
                ++stats.pruned_clique;
                return;
            }
            finish_vertex(v, st, chosen);
            return;
        }
        subsets(v, st, cl, cn, i + 1, chosen, used_parents, budget, need, force);
        int u = cl[i];
        if (cnt >= budget) return;
        if (used_parents >> ctx.parent[u] & 1) return;  // one edge per foreign parent
        subsets(v, st, cl, cn, i + 1, chosen | bit(u), used_parents | bit(ctx.parent[u]), budget,
                need, force);
    }

    void finish_vertex(int v, const State& st, uint32_t chosen) {
        State s2 = st;
        for (uint32_t m = chosen; m; m &= m - 1) {
            int u = std::countr_zero(m);
            s2.adj[v] |= bit(u);
            s2.adj[u] |= bit(v);
            ++s2.degree[v];
            ++s2.degree[u];
            add_forbidden_pairs(ctx, s2, v, u);
        }
        s2.status[v] = kComplete;
        if (opts.regular_only && regular_deficit(s2)) {
            ++stats.pruned_degree;
            return;
        }
        if (opts.prune_small_cycles && small_cycle_violation(ctx, s2, v)) {
            ++stats.pruned_cycles;
            return;
        }
        if (opts.prune_biconnectivity && !optimistic_biconnected(ctx, s2)) {
            ++stats.pruned_biconn;
            return;
        }
        if (cache_check(2 * v + 1, s2)) {
            ++stats.cache_hits;
            return;
        }
        int nxt = next_on_level(v);
        if (nxt >= 0)
            gen_neighbour(nxt, s2);
        else
            gen_cliques(first_on_level(ctx.level_of[v]), s2);
    }

    void final_check(const State& st) {
        Graph g = state_graph(st, ctx.n);
        if (opts.regular_only)
            for (int v = 0; v < ctx.n; ++v)
                if (st.degree[v] != ctx.max_degree) return;
        if (!is_geodetic(g) || !is_biconnected(g)) return;
        ++stats.emitted;
        // store the canonical member, independent of emission order
        CanonicalKey key = canonical_form(g);
        out.try_emplace(key, canonical_graph(key));
    }
};

namespace {

// Skip decision on the raw tree, ahead of the full context build: the root
// degree is the cap for every vertex.  Extra rejections in regular mode:
//  - n * degree must be even;
//  - a vertex can gain at most one same-level edge per foreign parent
//    beyond its tree edges and siblings, which bounds its final degree;
//  - whenever one vertex's children make up an entire level their degrees
//    are final after that clique phase, so children with c children of
//    their own need sibling blocks of exactly degree - c members, a
//    divisibility condition per child count.
bool skip_tree(const RootedTree& t, const Options& opts) {
    std::array<int8_t, 32> kids{};
    for (int v = 1; v < t.n; ++v) ++kids[t.parent[v]];
    int d = kids[0];
    if (opts.degree_filter > 0 && d != opts.degree_filter) return true;
    for (int v = 1; v < t.n; ++v)
        if (kids[v] + 1 > d) return true;
    if (!opts.regular_only) return false;
    if ((t.n * d) % 2 != 0) return true;
    // level order keeps levels and sibling runs consecutive
    std::array<int8_t, 33> nparents{};
    for (int v = 1; v < t.n; ++v)
        if (v == 1 || t.parent[v] != t.parent[v - 1]) ++nparents[t.level[v]];
    for (int v = 1; v < t.n; ++v)
        if (kids[v] + kids[t.parent[v]] + nparents[t.level[v]] - 1 < d) return true;
    for (int v = 1; v < t.n;) {
        int l = t.level[v], e = v;
        while (e < t.n && t.level[e] == l) ++e;
        if (nparents[l] == 1) {
            std::array<int8_t, 33> cnt{};
            for (int u = v; u < e; ++u) ++cnt[kids[u]];
            for (int c = 0; c < 33; ++c) {
                int b = d - c;
                if (cnt[c] && (b < 1 || cnt[c] % b != 0)) return true;
            }
        }
        v = e;
    }
    return false;
}

}  // namespace

void search_tree(const RootedTree& t, const Options& opts, std::vector<IsoCache>* caches,
                 std::map<CanonicalKey, Graph>& out, Stats& stats) {
    if (skip_tree(t, opts)) {
        ++stats.trees_skipped;
        return;
    }
    TreeContext ctx(t);
    ++stats.trees;
    TreeSearch ts{ctx, opts, stats, caches, out};
    State st = initial_state(ctx);
    ts.gen_cliques(0, st);
}

void add_delta(Stats& dst, const Stats& cur, const Stats& prevsnap) {
    Stats d = cur;
    d.trees -= prevsnap.trees;
    d.trees_skipped -= prevsnap.trees_skipped;
    d.states -= prevsnap.states;
    d.emitted -= prevsnap.emitted;
    d.pruned_cycles -= prevsnap.pruned_cycles;
    d.pruned_biconn -= prevsnap.pruned_biconn;
    d.pruned_clique -= prevsnap.pruned_clique;
    d.pruned_degree -= prevsnap.pruned_degree;
    d.cache_hits -= prevsnap.cache_hits;
    dst.merge(d);
}

// Root degrees worth streaming: a fixed degree filter pins the layer, regular
// mode visits every parity-compatible degree through the constrained stream,
// anything else takes the full stream (layer 0).
std::vector<int> stream_layers(int n, const Options& opts) {
    std::vector<int> layers;
    if (opts.degree_filter > 0) {
        if (!opts.regular_only || (n * opts.degree_filter) % 2 == 0)
            layers.push_back(opts.degree_filter);
    } else if (opts.regular_only) {
        for (int d = 1; d < n; ++d)
            if ((n * d) % 2 == 0) layers.push_back(d);
    } else {
        layers.push_back(0);
    }
    return layers;
}

Result run_search(int n, const Options& opts) {
    if (n < 1) throw BadParameterError("graph order must be at least 1");
    if (n > kMaxVertices) throw CapacityError("graph order exceeds 32");
    Result res;
    res.stats.n = n;
    int workers = std::max(1, opts.threads);
    size_t steps = (size_t)2 * (size_t)n;
    std::vector<int> layers = stream_layers(n, opts);

    if (workers == 1) {
        std::vector<IsoCache> caches;
        if (opts.cache_capacity)
            for (size_t i = 0; i < steps; ++i) caches.emplace_back(opts.cache_capacity);
        uint64_t since = 0;
        for (int d : layers) {
            RootedTreeStream stream(n, d);
            while (auto t = stream.next()) {
                search_tree(*t, opts, opts.cache_capacity ? &caches : nullptr, res.graphs,
                            res.stats);
                if (opts.progress && ++since >= opts.progress_interval) {
                    since = 0;
                    opts.progress(res.stats);
                }
            }
        }
        return res;
    }

    // Trees are dealt round robin to per-worker queues and every worker keeps
    // its own cache, map and stats, so the merged result set is independent of
    // scheduling; the std::map orders it by canonical key either way.
    struct Queue {
        std::mutex mu;
        std::condition_variable can_push, can_pop;
        std::deque<RootedTree> q;
        bool done = false;

        void push(const RootedTree& t) {
            std::unique_lock lk(mu);
            can_push.wait(lk, [&] { return q.size() < 512; });
            q.push_back(t);
            can_pop.notify_one();
        }
        void finish() {
            std::lock_guard lk(mu);
            done = true;
            can_pop.notify_all();
        }
        bool pop(RootedTree& t) {
            std::unique_lock lk(mu);
            can_pop.wait(lk, [&] { return !q.empty() || done; });
            if (q.empty()) return false;
            t = q.front();
            q.pop_front();
            can_push.notify_one();
            return true;
        }
    };

    std::vector<Queue> queues((size_t)workers);
    std::vector<std::map<CanonicalKey, Graph>> maps((size_t)workers);
    std::vector<Stats> stats((size_t)workers);
    std::mutex progress_mu;
    Stats shared;
    shared.n = n;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::vector<IsoCache> caches;
            if (opts.cache_capacity)
                for (size_t i = 0; i < steps; ++i) caches.emplace_back(opts.cache_capacity);
            RootedTree t;
            Stats snap;
            uint64_t since = 0;
            while (queues[(size_t)w].pop(t)) {
                search_tree(t, opts, opts.cache_capacity ? &caches : nullptr, maps[(size_t)w],
                            stats[(size_t)w]);
                if (opts.progress && ++since >= opts.progress_interval) {
                    since = 0;
                    std::lock_guard lk(progress_mu);
                    add_delta(shared, stats[(size_t)w], snap);
                    snap = stats[(size_t)w];
                    opts.progress(shared);
                }
            }
        });
    }
    uint64_t k = 0;
    for (int d : layers) {
        RootedTreeStream stream(n, d);
        while (auto t = stream.next()) queues[(size_t)(k++ % (uint64_t)workers)].push(*t);
    }
    for (auto& q : queues) q.finish();
    for (auto& th : pool) th.join();
    for (int w = 0; w < workers; ++w) {
        res.stats.merge(stats[(size_t)w]);
        res.graphs.merge(maps[(size_t)w]);
    }
    return res;
}

}  // namespace

Result enumerate_geodetic(int n, const Options& opts) { return run_search(n, opts); }

Result enumerate_regular(int n_max, const Options& opts) {
    if (n_max < 1) throw BadParameterError("graph order must be at least 1");
    if (n_max > kMaxVertices) throw CapacityError("graph order exceeds 32");
    Result res;
    Options o = opts;
    o.regular_only = true;
    for (int n = 2; n <= n_max; ++n) {
        Result r = run_search(n, o);
        res.stats.merge(r.stats);
        res.graphs.merge(r.graphs);
    }
    res.stats.n = n_max;
    return res;
}

}  // namespace geodetic::search
