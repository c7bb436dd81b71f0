#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace latticelab {

// Finite poset on elements 0..n-1. The full order relation is kept as one
// bit row per element, indexed in a fixed linear extension (rank space):
// up[x] has bit r set iff x <= by_rank[r]. Keeping rows in rank order makes
// "greatest element of a down-closed set" a highest-set-bit scan, which is
// what meet/join computations reduce to.
struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> covers; // transitive reduction, sorted
    std::vector<int> rank_of;                // element -> rank in linear extension
    std::vector<int> by_rank;                // rank -> element
    std::vector<Bitset> up;                  // up[x]: ranks of {z : x <= z}
    std::vector<Bitset> down;                // down[x]: ranks of {z : z <= x}
    std::vector<std::vector<int>> upper;     // elements covering x
    std::vector<std::vector<int>> lower;     // elements covered by x

    bool leq(int x, int y) const { return up[x].test(rank_of[y]); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }

    // Elements of a rank-space set, ascending by element index.
    std::vector<int> elements_of(const Bitset& ranks) const {
        std::vector<int> v;
        v.reserve(ranks.count());
        ranks.for_each([&](int r) { v.push_back(by_rank[r]); });
        std::sort(v.begin(), v.end());
        return v;
    }

    // Maximal elements of a rank-space set.
    std::vector<int> maximal_of(const Bitset& ranks) const {
        std::vector<int> out;
        ranks.for_each([&](int r) {
            int e = by_rank[r];
            Bitset above = up[e];
            above &= ranks;
            above.reset(r);
            if (above.none()) out.push_back(e);
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> minimal_of(const Bitset& ranks) const {
        std::vector<int> out;
        ranks.for_each([&](int r) {
            int e = by_rank[r];
            Bitset below = down[e];
            below &= ranks;
            below.reset(r);
            if (below.none()) out.push_back(e);
        });
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

inline void finish_rows(Poset& p, const std::vector<std::vector<int>>& up_adj,
                        const std::vector<std::vector<int>>& dn_adj) {
    int n = p.n;
    p.up.assign(n, Bitset(n));
    p.down.assign(n, Bitset(n));
    // Reverse topological accumulation over the cover DAG: each row is the
    // union of the rows of its covers plus itself.
    for (int r = n - 1; r >= 0; --r) {
        int x = p.by_rank[r];
        p.up[x].set(r);
        for (int y : up_adj[x]) p.up[x] |= p.up[y];
    }
    for (int r = 0; r < n; ++r) {
        int x = p.by_rank[r];
        p.down[x].set(r);
        for (int y : dn_adj[x]) p.down[x] |= p.down[y];
    }
}

inline void rebuild_adjacency(Poset& p) {
    p.upper.assign(p.n, {});
    p.lower.assign(p.n, {});
    for (auto [a, b] : p.covers) {
        p.upper[a].push_back(b);
        p.lower[b].push_back(a);
    }
    for (auto& v : p.upper) std::sort(v.begin(), v.end());
    for (auto& v : p.lower) std::sort(v.begin(), v.end());
}

} // namespace detail

// Build a poset from an arbitrary generating set of relations. Redundant
// input pairs are dropped; covers are recomputed as the transitive reduction.
inline Poset poset_from_covers(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw IndexOutOfRange(n);
    Poset p;
    p.n = n;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n) throw IndexOutOfRange(a);
        if (b < 0 || b >= n) throw IndexOutOfRange(b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::vector<int>> up_adj(n), dn_adj(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : edges) {
        if (a == b) throw CycleDetected();
        up_adj[a].push_back(b);
        dn_adj[b].push_back(a);
        ++indeg[b];
    }

    // Kahn topological sort; smallest-index-first keeps ranks deterministic.
    p.by_rank.reserve(n);
    std::vector<int> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    std::vector<int> work = indeg;
    while (!ready.empty()) {
        std::sort(ready.begin(), ready.end(), std::greater<>());
        int x = ready.back();
        ready.pop_back();
        p.by_rank.push_back(x);
        for (int y : up_adj[x])
            if (--work[y] == 0) ready.push_back(y);
    }
    if (int(p.by_rank.size()) != n) throw CycleDetected();
    p.rank_of.assign(n, 0);
    for (int r = 0; r < n; ++r) p.rank_of[p.by_rank[r]] = r;

    detail::finish_rows(p, up_adj, dn_adj);

    // An input edge is a cover iff nothing sits strictly between its ends.
    // Since the order is generated by the input edges, every true cover is
    // among them, so this yields the full transitive reduction.
    for (auto [a, b] : edges) {
        Bitset between = p.up[a];
        between &= p.down[b];
        if (between.count() == 2) p.covers.emplace_back(a, b);
    }
    std::sort(p.covers.begin(), p.covers.end());
    detail::rebuild_adjacency(p);
    return p;
}

// Build a poset from a comparability predicate (used for induced suborders).
// Verifies antisymmetry and transitivity.
template <typename Leq>
Poset poset_from_relation(int n, Leq leq) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (leq(a, b)) {
                if (leq(b, a)) throw CycleDetected();
                edges.emplace_back(a, b);
            }
        }
    Poset p = poset_from_covers(n, std::move(edges));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && p.leq(a, b) != bool(leq(a, b)))
                throw LatticeError("relation is not transitive");
    return p;
}

inline Poset dual(const Poset& p) {
    Poset d;
    d.n = p.n;
    d.covers.reserve(p.covers.size());
    for (auto [a, b] : p.covers) d.covers.emplace_back(b, a);
    std::sort(d.covers.begin(), d.covers.end());
    d.by_rank.assign(p.by_rank.rbegin(), p.by_rank.rend());
    d.rank_of.assign(p.n, 0);
    for (int r = 0; r < p.n; ++r) d.rank_of[d.by_rank[r]] = r;
    auto flip = [&](const Bitset& b) {
        Bitset out(p.n);
        b.for_each([&](int r) { out.set(p.n - 1 - r); });
        return out;
    };
    d.up.reserve(p.n);
    d.down.reserve(p.n);
    for (int x = 0; x < p.n; ++x) {
        d.up.push_back(flip(p.down[x]));
        d.down.push_back(flip(p.up[x]));
    }
    detail::rebuild_adjacency(d);
    return d;
}

// Length of the longest chain x_0 < ... < x_k, i.e. the longest path in the
// cover DAG counted in edges.
inline int longest_chain_length(const Poset& p) {
    std::vector<int> best(p.n, 0);
    int ans = 0;
    for (int r = 0; r < p.n; ++r) {
        int x = p.by_rank[r];
        for (int y : p.upper[x]) {
            best[y] = std::max(best[y], best[x] + 1);
            ans = std::max(ans, best[y]);
        }
    }
    return ans;
}

} // namespace latticelab
