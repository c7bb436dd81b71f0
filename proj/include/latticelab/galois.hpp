#pragma once

#include <algorithm>
#include <vector>

#include "pairing.hpp"

namespace latticelab {

// Directed Galois graph on the join-irreducibles of a uniquely paired
// lattice: j -> j' iff j != j' and j !<= kappa(j'). Vertex i of the graph is
// verts[i]; all vertex sets are bitsets over these positions.
struct GaloisGraph {
    std::vector<int> verts;       // join-irreducible element ids, ascending
    std::vector<Bitset> out, in;  // directed adjacency
    std::vector<Bitset> adj;      // undirected shadow: out | in
    std::vector<int> vertex_of;   // element id -> vertex index, -1 otherwise

    int size() const { return int(verts.size()); }
};

inline GaloisGraph galois_graph(const Lattice& L, const Pairing& kappa) {
    GaloisGraph g;
    g.verts = kappa.joins;
    int v = g.size();
    g.out.assign(v, Bitset(v));
    g.in.assign(v, Bitset(v));
    g.adj.assign(v, Bitset(v));
    g.vertex_of.assign(L.n(), -1);
    for (int i = 0; i < v; ++i) g.vertex_of[g.verts[i]] = i;
    for (int i = 0; i < v; ++i)
        for (int k = 0; k < v; ++k) {
            if (i == k) continue;
            if (!L.leq(g.verts[i], kappa.kappa[g.verts[k]])) {
                g.out[i].set(k);
                g.in[k].set(i);
            }
        }
    for (int i = 0; i < v; ++i) {
        g.adj[i] = g.out[i];
        g.adj[i] |= g.in[i];
    }
    return g;
}

// Independence ignores edge direction.
inline bool is_independent(const GaloisGraph& g, const Bitset& s) {
    bool ok = true;
    s.for_each([&](int i) {
        if (ok && g.adj[i].intersects(s)) ok = false;
    });
    return ok;
}

// Number of independent sets of the undirected shadow, by the usual
// branch-on-a-vertex recursion; every leaf is one independent set, so the
// work is proportional to the answer. Throws once the count passes cap.
inline long long count_independent_sets(const GaloisGraph& g, long long cap = 100'000'000) {
    long long count = 0;
    auto rec = [&](auto&& self, Bitset rest) -> void {
        int v = rest.first();
        if (v < 0) {
            if (++count > cap) throw CapExceeded(cap);
            return;
        }
        Bitset without = rest;
        without.reset(v);
        self(self, without);
        Bitset with = without;
        with.and_not(g.adj[v]);
        self(self, with);
    };
    Bitset all(g.size());
    for (int i = 0; i < g.size(); ++i) all.set(i);
    rec(rec, all);
    return count;
}

namespace detail {

// Bron-Kerbosch with pivoting on the complement graph: maximal cliques of
// the complement are exactly the maximal independent sets of the shadow.
inline void bron_kerbosch(const std::vector<Bitset>& nbr, Bitset r, Bitset p, Bitset x,
                          std::vector<Bitset>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    Bitset px = p;
    px |= x;
    int pivot = -1, best = -1;
    px.for_each([&](int u) {
        Bitset t = p;
        t &= nbr[u];
        int c = t.count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Bitset cand = p;
    if (pivot >= 0) cand.and_not(nbr[pivot]);
    cand.for_each([&](int v) {
        Bitset r2 = r;
        r2.set(v);
        Bitset p2 = p;
        p2 &= nbr[v];
        Bitset x2 = x;
        x2 &= nbr[v];
        bron_kerbosch(nbr, r2, p2, x2, out);
        p.reset(v);
        x.set(v);
    });
}

} // namespace detail

// Maximal independent sets of the undirected shadow; these coincide with
// the independent dominating sets. Lexicographic output order.
inline std::vector<Bitset> maximal_independent_sets(const GaloisGraph& g) {
    int v = g.size();
    std::vector<Bitset> co(v, Bitset(v));
    for (int i = 0; i < v; ++i)
        for (int k = 0; k < v; ++k)
            if (i != k && !g.adj[i].test(k)) co[i].set(k);
    Bitset all(v);
    for (int i = 0; i < v; ++i) all.set(i);
    std::vector<Bitset> out;
    detail::bron_kerbosch(co, Bitset(v), all, Bitset(v), out);
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
        return a.to_vector() < b.to_vector();
    });
    return out;
}

struct OrthogonalPair {
    Bitset X, Y;
};

// (X,Y) orthogonal: disjoint independent sets with no directed edge from X
// into Y (edges from Y into X are allowed).
inline bool is_orthogonal_pair(const GaloisGraph& g, const Bitset& X, const Bitset& Y) {
    if (X.intersects(Y)) return false;
    if (!is_independent(g, X) || !is_independent(g, Y)) return false;
    bool ok = true;
    X.for_each([&](int i) {
        if (ok && g.out[i].intersects(Y)) ok = false;
    });
    return ok;
}

// Tightness: no vertex can be added to either side, and no edge j -> j'
// with j' in X (resp. j' -> j with j' in Y) permits swapping j' out for j.
inline bool is_tight_orthogonal_pair(const GaloisGraph& g, const Bitset& X, const Bitset& Y) {
    if (!is_orthogonal_pair(g, X, Y)) return false;
    Bitset members = X;
    members |= Y;
    for (int j = 0; j < g.size(); ++j) {
        if (members.test(j)) continue;
        Bitset X2 = X;
        X2.set(j);
        if (is_orthogonal_pair(g, X2, Y)) return false;
        Bitset Y2 = Y;
        Y2.set(j);
        if (is_orthogonal_pair(g, X, Y2)) return false;
        // swaps along edges out of / into j
        Bitset hits = g.out[j];
        hits &= X;
        bool bad = false;
        hits.for_each([&](int jp) {
            if (bad) return;
            Bitset X3 = X;
            X3.reset(jp);
            X3.set(j);
            if (is_orthogonal_pair(g, X3, Y)) bad = true;
        });
        if (bad) return false;
        hits = g.in[j];
        hits &= Y;
        hits.for_each([&](int jp) {
            if (bad) return;
            Bitset Y3 = Y;
            Y3.reset(jp);
            Y3.set(j);
            if (is_orthogonal_pair(g, X, Y3)) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

// Exhaustive enumeration of tight orthogonal pairs: assign each vertex to
// X, Y or neither, pruning as soon as the partial pair stops being
// orthogonal. cap bounds the number of visited search nodes.
inline std::vector<OrthogonalPair> enumerate_tops(const GaloisGraph& g,
                                                  long long cap = 10'000'000) {
    std::vector<OrthogonalPair> out;
    long long visited = 0;
    Bitset X(g.size()), Y(g.size());
    auto ok_add_x = [&](int v) {
        if (g.adj[v].intersects(X)) return false; // X stays independent
        if (g.out[v].intersects(Y)) return false; // no X -> Y edge
        return true;
    };
    auto ok_add_y = [&](int v) {
        if (g.adj[v].intersects(Y)) return false;
        bool hit = false;
        X.for_each([&](int i) {
            if (!hit && g.out[i].test(v)) hit = true;
        });
        return !hit;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (++visited > cap) throw CapExceeded(cap);
        if (v == g.size()) {
            if (is_tight_orthogonal_pair(g, X, Y)) out.push_back({X, Y});
            return;
        }
        if (ok_add_x(v)) {
            X.set(v);
            self(self, v + 1);
            X.reset(v);
        }
        if (ok_add_y(v)) {
            Y.set(v);
            self(self, v + 1);
            Y.reset(v);
        }
        self(self, v + 1);
    };
    rec(rec, 0);
    return out;
}

} // namespace latticelab
