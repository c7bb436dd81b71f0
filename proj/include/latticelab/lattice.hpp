#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poset.hpp"

namespace latticelab {

// Finite lattice. Meets/joins are answered from the order rows: the meet of
// x and y is the highest-ranked element of down(x) & down(y), which is the
// greatest lower bound whenever one exists. For small lattices the full
// tables are materialized; above table_cap everything stays on-demand.
struct Lattice {
    Poset p;
    int bottom = 0;
    int top = 0;
    std::vector<int32_t> meet_tab, join_tab; // n*n when materialized, else empty

    int n() const { return p.n; }
    bool leq(int x, int y) const { return p.leq(x, y); }
    bool has_tables() const { return !meet_tab.empty(); }

    int meet(int x, int y) const {
        if (has_tables()) return meet_tab[size_t(x) * p.n + y];
        Bitset lb = p.down[x];
        lb &= p.down[y];
        return p.by_rank[lb.last()];
    }
    int join(int x, int y) const {
        if (has_tables()) return join_tab[size_t(x) * p.n + y];
        Bitset ub = p.up[x];
        ub &= p.up[y];
        return p.by_rank[ub.first()];
    }

    // Meet of an arbitrary element set; empty set gives top.
    template <typename Range>
    int meet_all(const Range& xs) const {
        Bitset lb = p.up[bottom]; // all ranks
        for (int x : xs) lb &= p.down[x];
        return p.by_rank[lb.last()];
    }
    template <typename Range>
    int join_all(const Range& xs) const {
        Bitset ub = p.up[bottom];
        for (int x : xs) ub &= p.up[x];
        return p.by_rank[ub.first()];
    }

    std::vector<int> atoms() const { return p.upper[bottom]; }
    std::vector<int> coatoms() const { return p.lower[top]; }
};

// Join-irreducibles (one lower cover) and meet-irreducibles (one upper
// cover), with the unique neighbours j_* and m^*.
struct Irreducibles {
    std::vector<int> joins, meets; // ascending element ids
    std::vector<int> j_star;       // element-indexed; -1 unless join-irreducible
    std::vector<int> m_star;       // element-indexed; -1 unless meet-irreducible
};

inline Irreducibles irreducibles(const Lattice& L) {
    Irreducibles ir;
    ir.j_star.assign(L.n(), -1);
    ir.m_star.assign(L.n(), -1);
    for (int x = 0; x < L.n(); ++x) {
        if (L.p.lower[x].size() == 1) {
            ir.joins.push_back(x);
            ir.j_star[x] = L.p.lower[x][0];
        }
        if (L.p.upper[x].size() == 1) {
            ir.meets.push_back(x);
            ir.m_star[x] = L.p.upper[x][0];
        }
    }
    return ir;
}

inline Lattice as_lattice(const Poset& p, int table_cap = 4096) {
    Lattice L;
    L.p = p;
    if (p.n == 0) throw NotALattice(0, 0);
    L.bottom = p.by_rank[0];
    L.top = p.by_rank[p.n - 1];
    Bitset all(p.n);
    for (int r = 0; r < p.n; ++r) all.set(r);
    if (p.up[L.bottom].count() != p.n) {
        auto mins = p.minimal_of(all); // >= 2 minimal elements, no meet
        throw NotALattice(mins[0], mins[1]);
    }
    if (p.down[L.top].count() != p.n) {
        auto maxs = p.maximal_of(all);
        throw NotALattice(maxs[0], maxs[1]);
    }

    // With a top element present, pairwise meets existing everywhere already
    // forces joins to exist, but we verify both directions to produce the
    // earliest witness pair.
    bool tables = p.n <= table_cap;
    if (tables) {
        L.meet_tab.assign(size_t(p.n) * p.n, 0);
        L.join_tab.assign(size_t(p.n) * p.n, 0);
    }
    for (int x = 0; x < p.n; ++x) {
        for (int y = x; y < p.n; ++y) {
            Bitset lb = p.down[x];
            lb &= p.down[y];
            int m = p.by_rank[lb.last()];
            if (!lb.subset_of(p.down[m])) throw NotALattice(x, y);
            Bitset ub = p.up[x];
            ub &= p.up[y];
            int j = p.by_rank[ub.first()];
            if (!ub.subset_of(p.up[j])) throw NotALattice(x, y);
            if (tables) {
                L.meet_tab[size_t(x) * p.n + y] = m;
                L.meet_tab[size_t(y) * p.n + x] = m;
                L.join_tab[size_t(x) * p.n + y] = j;
                L.join_tab[size_t(y) * p.n + x] = j;
            }
        }
    }
    return L;
}

inline Lattice dual(const Lattice& L) {
    Lattice d;
    d.p = dual(L.p);
    d.bottom = L.top;
    d.top = L.bottom;
    d.meet_tab = L.join_tab;
    d.join_tab = L.meet_tab;
    return d;
}

struct IntervalEmbedding {
    int lo = 0, hi = 0;            // ambient endpoints u <= v
    std::vector<int> element_map;  // interval index -> ambient index, ascending
    std::vector<int> index_of;     // ambient index -> interval index, -1 outside
};

// Induced lattice on [u,v] = {z : u <= z <= v}.
inline std::pair<Lattice, IntervalEmbedding> interval(const Lattice& L, int u, int v) {
    if (!L.leq(u, v)) throw NotComparable(u, v);
    IntervalEmbedding emb;
    emb.lo = u;
    emb.hi = v;
    Bitset ranks = L.p.up[u];
    ranks &= L.p.down[v];
    emb.element_map = L.p.elements_of(ranks);
    emb.index_of.assign(L.n(), -1);
    for (size_t i = 0; i < emb.element_map.size(); ++i) emb.index_of[emb.element_map[i]] = int(i);

    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : L.p.covers) {
        int ia = emb.index_of[a], ib = emb.index_of[b];
        if (ia >= 0 && ib >= 0) edges.emplace_back(ia, ib);
    }
    // Covers inside an interval of a lattice are exactly the ambient covers
    // between interval members, so no re-reduction is needed; as_lattice is
    // still run to validate and build tables.
    Lattice sub = as_lattice(poset_from_covers(int(emb.element_map.size()), std::move(edges)));
    return {std::move(sub), std::move(emb)};
}

// Direct product with row-major indexing: (x, y) -> x*|L2| + y.
inline Lattice product(const Lattice& A, const Lattice& B) {
    int nb = B.n();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(A.p.covers.size()) * nb + size_t(B.p.covers.size()) * A.n());
    for (auto [a, b] : A.p.covers)
        for (int y = 0; y < nb; ++y) edges.emplace_back(a * nb + y, b * nb + y);
    for (int x = 0; x < A.n(); ++x)
        for (auto [a, b] : B.p.covers) edges.emplace_back(x * nb + a, x * nb + b);
    return as_lattice(poset_from_covers(A.n() * nb, std::move(edges)));
}

// Lattice of order ideals (down-sets) of a poset, ordered by containment.
// Ideals are found by closing {} under "add one addable element", with the
// ideal bitmask as memo key; covers are exactly the one-element additions.
struct IdealLattice {
    Lattice lattice;
    std::vector<Bitset> ideals; // lattice index -> subset of poset elements
};

inline IdealLattice order_ideal_lattice(const Poset& p, long long cap = 2'000'000) {
    std::vector<Bitset> pool;
    std::map<std::vector<uint64_t>, int> seen;
    std::vector<std::pair<int, int>> edges;

    Bitset empty(p.n);
    pool.push_back(empty);
    seen[empty.words()] = 0;
    for (size_t cur = 0; cur < pool.size(); ++cur) {
        Bitset ideal = pool[cur];
        for (int e = 0; e < p.n; ++e) {
            if (ideal.test(e)) continue;
            bool addable = true;
            for (int lo : p.lower[e])
                if (!ideal.test(lo)) {
                    addable = false;
                    break;
                }
            if (!addable) continue;
            Bitset next = ideal;
            next.set(e);
            auto [it, fresh] = seen.emplace(next.words(), int(pool.size()));
            if (fresh) {
                pool.push_back(next);
                if ((long long)pool.size() > cap)
                    throw SizeLimitExceeded("order ideal count exceeds cap");
            }
            edges.emplace_back(int(cur), it->second);
        }
    }

    // Re-index by (size, bitmask) so indices form a linear extension.
    std::vector<int> order(pool.size());
    for (size_t i = 0; i < pool.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = pool[a].count(), cb = pool[b].count();
        if (ca != cb) return ca < cb;
        return pool[a] < pool[b];
    });
    std::vector<int> newidx(pool.size());
    for (size_t i = 0; i < order.size(); ++i) newidx[order[i]] = int(i);

    IdealLattice out;
    out.ideals.resize(pool.size(), Bitset(p.n));
    for (size_t i = 0; i < pool.size(); ++i) out.ideals[newidx[i]] = pool[i];
    for (auto& e : edges) e = {newidx[e.first], newidx[e.second]};
    out.lattice = as_lattice(poset_from_covers(int(pool.size()), std::move(edges)));
    return out;
}

inline int longest_chain_length(const Lattice& L) { return longest_chain_length(L.p); }

} // namespace latticelab
