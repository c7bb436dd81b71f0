#pragma once

#include <vector>

#include "galois.hpp"

namespace latticelab {

// Cover labeling of an overlapping lattice: each cover x < y carries the
// unique join-irreducible j with j <= y and kappa(j) >= x. Label sets are
// bitsets over Galois-graph vertex positions (ascending join-irreducibles).
struct EdgeLabeling {
    std::vector<int> joins;       // vertex position -> element id
    std::vector<int> cover_label; // parallel to L.p.covers; vertex position
    std::vector<Bitset> down;     // D(x): labels of covers below x
    std::vector<Bitset> up;       // U(x): labels of covers above x

    std::vector<int> down_elements(int x) const {
        std::vector<int> v;
        down[x].for_each([&](int i) { v.push_back(joins[i]); });
        return v;
    }
    std::vector<int> up_elements(int x) const {
        std::vector<int> v;
        up[x].for_each([&](int i) { v.push_back(joins[i]); });
        return v;
    }
};

namespace detail {

// per-element bitsets over vertex positions: J(x) = {j : j <= x} and
// M(x) = {j : kappa(j) >= x}
struct JMSets {
    std::vector<Bitset> J, M;
};

inline JMSets jm_sets(const Lattice& L, const Pairing& kappa) {
    int nv = int(kappa.joins.size());
    JMSets s;
    s.J.assign(L.n(), Bitset(nv));
    s.M.assign(L.n(), Bitset(nv));
    for (int i = 0; i < nv; ++i) {
        int j = kappa.joins[i];
        int m = kappa.kappa[j];
        for (int x = 0; x < L.n(); ++x) {
            if (L.leq(j, x)) s.J[x].set(i);
            if (L.leq(x, m)) s.M[x].set(i);
        }
    }
    return s;
}

} // namespace detail

// Throws NotOverlapping with the offending cover when some candidate set
// M(x) n J(y) is not a singleton.
inline EdgeLabeling edge_labeling(const Lattice& L, const Pairing& kappa) {
    detail::JMSets jm = detail::jm_sets(L, kappa);
    int nv = int(kappa.joins.size());
    EdgeLabeling lab;
    lab.joins = kappa.joins;
    lab.cover_label.resize(L.p.covers.size());
    lab.down.assign(L.n(), Bitset(nv));
    lab.up.assign(L.n(), Bitset(nv));
    for (size_t c = 0; c < L.p.covers.size(); ++c) {
        auto [x, y] = L.p.covers[c];
        Bitset cand = jm.M[x];
        cand &= jm.J[y];
        if (cand.count() != 1) throw NotOverlapping(x, y, cand.count());
        int i = cand.first();
        lab.cover_label[c] = i;
        lab.up[x].set(i);
        lab.down[y].set(i);
    }
    return lab;
}

} // namespace latticelab
