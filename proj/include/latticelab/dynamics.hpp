#pragma once

#include <cassert>
#include <map>
#include <string>
#include <vector>

#include "classify.hpp"

namespace latticelab {

// Everything the semidistrim dynamics need, computed once per lattice:
// the unique pairing, the Galois graph and the cover labeling. Construction
// throws NotSemidistrim when the lattice fails the definition.
struct SemidistrimModel {
    Lattice lattice;
    Pairing kappa;
    GaloisGraph graph;
    EdgeLabeling labels;
    std::vector<Bitset> J, M; // J(x) = {j <= x}, M(x) = {j : kappa(j) >= x}
};

inline SemidistrimModel analyze_semidistrim(const Lattice& L) {
    SemidistrimModel m;
    m.lattice = L;
    try {
        m.kappa = unique_pairing(L);
    } catch (const LatticeError& e) {
        throw NotSemidistrim(e.what());
    }
    try {
        m.labels = edge_labeling(L, m.kappa);
    } catch (const NotOverlapping& e) {
        throw NotSemidistrim(e.what());
    }
    m.graph = galois_graph(L, m.kappa);
    for (int x = 0; x < L.n(); ++x)
        if (!is_independent(m.graph, m.labels.down[x]) ||
            !is_independent(m.graph, m.labels.up[x]))
            throw NotSemidistrim("label set of element " + std::to_string(x) +
                                 " is not independent");
    if (!is_semidistributive_fast(L) && !is_extremal(L) && !is_compatibly_dismantlable(L).ok)
        throw NotSemidistrim("not compatibly dismantlable");
    detail::JMSets jm = detail::jm_sets(L, m.kappa);
    m.J = std::move(jm.J);
    m.M = std::move(jm.M);
    return m;
}

// Pop-stack sorting and its dual are defined on any lattice.
inline int pop_down(const Lattice& L, int x) {
    int r = x;
    for (int y : L.p.lower[x]) r = L.meet(r, y);
    return r;
}

inline int pop_up(const Lattice& L, int x) {
    int r = x;
    for (int y : L.p.upper[x]) r = L.join(r, y);
    return r;
}

// Row(x) = meet of kappa over the down labels; the unique element with
// U(Row(x)) = D(x). The label-set identity is kept as a debug check.
inline int rowmotion(const SemidistrimModel& m, int x) {
    Bitset lb = m.lattice.p.up[m.lattice.bottom]; // all ranks
    m.labels.down[x].for_each(
        [&](int i) { lb &= m.lattice.p.down[m.kappa.kappa[m.labels.joins[i]]]; });
    int r = m.lattice.p.by_rank[lb.last()];
    assert(m.labels.up[r] == m.labels.down[x]);
    return r;
}

inline int rowmotion_inverse(const SemidistrimModel& m, int x) {
    Bitset ub = m.lattice.p.up[m.lattice.bottom];
    m.labels.up[x].for_each([&](int i) { ub &= m.lattice.p.up[m.labels.joins[i]]; });
    int r = m.lattice.p.by_rank[ub.first()];
    assert(m.labels.down[r] == m.labels.up[x]);
    return r;
}

// Noninvertible rowmotion on a meet-semidistributive lattice: the unique
// maximal z with Pop_down(x) = x ^ z. MultipleMaximal signals a violated
// precondition rather than silently picking a representative.
inline int rowmotion_meet_sd(const Lattice& L, int x) {
    int pd = pop_down(L, x);
    Bitset zs(L.n());
    for (int z = 0; z < L.n(); ++z)
        if (L.meet(x, z) == pd) zs.set(L.p.rank_of[z]);
    auto maxs = L.p.maximal_of(zs);
    if (maxs.size() != 1) throw MultipleMaximal(x);
    return maxs[0];
}

inline void require_meet_semidistributive(const Lattice& L) {
    if (!is_meet_semidistributive_fast(L)) throw NotMeetSemidistributive();
}

// Popping pairs (x, y): Pop_up(x) = y and Pop_down(y) = x. All three
// characterizations (the definition, U(x) = D(y) with x <= y, and
// Row(y) = x with x <= y) are computed and cross-checked.
inline std::vector<std::pair<int, int>> popping_pairs(const SemidistrimModel& m) {
    const Lattice& L = m.lattice;
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y < L.n(); ++y) {
        int x = rowmotion(m, y);
        if (!L.leq(x, y)) continue;
        bool by_labels = m.labels.up[x] == m.labels.down[y];
        bool by_pop = pop_up(L, x) == y && pop_down(L, y) == x;
        if (!by_labels || !by_pop)
            throw InternalMismatch("popping-pair characterizations disagree at y=" +
                                   std::to_string(y));
        out.emplace_back(x, y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Pop(L;q) as a sparse coefficient map, computed from both defining sums
// (over the image of Pop_down weighting by |U|, and over the image of
// Pop_up weighting by |D|) and checked for agreement.
struct PopPolynomial {
    std::map<int, long long> coeffs; // degree -> coefficient, ascending

    long long at_one() const {
        long long s = 0;
        for (auto [d, c] : coeffs) s += c;
        return s;
    }
    bool operator==(const PopPolynomial& o) const { return coeffs == o.coeffs; }

    // Human-readable rendering, highest degree first: "q^3 + 3q^2 + q".
    std::string str() const {
        if (coeffs.empty()) return "0";
        std::string s;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            auto [d, c] = *it;
            if (!s.empty()) s += " + ";
            if (c != 1 || d == 0) s += std::to_string(c);
            if (d == 1)
                s += "q";
            else if (d > 1)
                s += "q^" + std::to_string(d);
        }
        return s;
    }
};

inline PopPolynomial pop_polynomial(const SemidistrimModel& m) {
    const Lattice& L = m.lattice;
    std::vector<char> in_down(L.n(), 0), in_up(L.n(), 0);
    for (int x = 0; x < L.n(); ++x) {
        in_down[pop_down(L, x)] = 1;
        in_up[pop_up(L, x)] = 1;
    }
    PopPolynomial via_down, via_up;
    for (int b = 0; b < L.n(); ++b) {
        if (in_down[b]) via_down.coeffs[m.labels.up[b].count()]++;
        if (in_up[b]) via_up.coeffs[m.labels.down[b].count()]++;
    }
    if (!(via_down == via_up))
        throw InternalMismatch("Pop(L;q) sums over Pop_down and Pop_up images disagree");
    return via_down;
}

enum class DynOperator { row, row_meet_sd, pop_down, pop_up };

// Orbit structure of one operator: cycle partition when bijective, image
// size / preimage histogram / eventual cycles otherwise.
struct OrbitDecomposition {
    bool bijective = false;
    std::vector<std::vector<int>> cycles;       // bijective case
    int image_size = 0;                         // noninvertible case
    std::vector<int> preimage_histogram;        // [k] = #elements with k preimages
    std::vector<std::vector<int>> eventual_cycles;
};

inline OrbitDecomposition orbits_of_map(const Lattice& L, const std::vector<int>& f,
                                        bool bijective) {
    OrbitDecomposition od;
    od.bijective = bijective;
    int n = L.n();
    if (bijective) {
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            std::vector<int> cyc;
            int x = s;
            while (!seen[x]) {
                seen[x] = 1;
                cyc.push_back(x);
                x = f[x];
            }
            od.cycles.push_back(cyc); // starts at its minimal element s
        }
        return od;
    }
    std::vector<int> preimages(n, 0);
    std::vector<char> image(n, 0);
    for (int x = 0; x < n; ++x) {
        image[f[x]] = 1;
        preimages[f[x]]++;
    }
    for (int x = 0; x < n; ++x) od.image_size += image[x];
    int most = 0;
    for (int x = 0; x < n; ++x) most = std::max(most, preimages[x]);
    od.preimage_histogram.assign(most + 1, 0);
    for (int x = 0; x < n; ++x) od.preimage_histogram[preimages[x]]++;
    // eventual cycles: elements on a cycle of the functional graph
    std::vector<int> state(n, 0); // 0 unknown, 1 in progress, 2 done
    std::vector<char> on_cycle(n, 0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> path;
        int x = s;
        while (state[x] == 0) {
            state[x] = 1;
            path.push_back(x);
            x = f[x];
        }
        if (state[x] == 1) {
            // found a new cycle; mark it from x
            int y = x;
            do {
                on_cycle[y] = 1;
                y = f[y];
            } while (y != x);
        }
        for (int e : path) state[e] = 2;
    }
    std::vector<char> emitted(n, 0);
    for (int s = 0; s < n; ++s) {
        if (!on_cycle[s] || emitted[s]) continue;
        std::vector<int> cyc;
        int x = s;
        do {
            emitted[x] = 1;
            cyc.push_back(x);
            x = f[x];
        } while (x != s);
        od.eventual_cycles.push_back(cyc);
    }
    return od;
}

inline OrbitDecomposition orbits(const Lattice& L, DynOperator op,
                                 const SemidistrimModel* model = nullptr) {
    std::vector<int> f(L.n());
    switch (op) {
    case DynOperator::row: {
        if (!model) throw NotSemidistrim("rowmotion orbits need a semidistrim model");
        for (int x = 0; x < L.n(); ++x) f[x] = rowmotion(*model, x);
        return orbits_of_map(L, f, true);
    }
    case DynOperator::row_meet_sd: {
        require_meet_semidistributive(L);
        for (int x = 0; x < L.n(); ++x) f[x] = rowmotion_meet_sd(L, x);
        return orbits_of_map(L, f, false);
    }
    case DynOperator::pop_down:
        for (int x = 0; x < L.n(); ++x) f[x] = pop_down(L, x);
        return orbits_of_map(L, f, false);
    case DynOperator::pop_up:
        for (int x = 0; x < L.n(); ++x) f[x] = pop_up(L, x);
        return orbits_of_map(L, f, false);
    }
    throw LatticeError("unreachable");
}

// Face(b) = [Pop_down(b), b].
inline IntervalEmbedding face(const Lattice& L, int b) {
    return interval(L, pop_down(L, b), b).second;
}

// Shard sets: join-irreducibles labeling the covers inside Face(b)
// (pop variant) or squeezed between Row(b) and b (row variant).
inline std::vector<int> shard_pop(const SemidistrimModel& m, int b) {
    Bitset s = m.J[b];
    s &= m.M[pop_down(m.lattice, b)];
    std::vector<int> out;
    s.for_each([&](int i) { out.push_back(m.labels.joins[i]); });
    return out;
}

inline std::vector<int> shard_row(const SemidistrimModel& m, int b) {
    Bitset s = m.J[b];
    s &= m.M[rowmotion(m, b)];
    std::vector<int> out;
    s.for_each([&](int i) { out.push_back(m.labels.joins[i]); });
    return out;
}

enum class CoreLabelVariant { pop, row };

// Containment preorder of shard sets. Injectivity of b -> Shard(b) is not
// guaranteed, so the report states whether the preorder was antisymmetric
// and returns the order on classes of equal shard sets.
struct CoreLabelReport {
    bool antisymmetric = false;
    bool meet_semilattice = false;
    std::vector<int> class_of;              // element -> class index
    std::vector<std::vector<int>> classes;  // class -> members
    Poset order;                            // order on classes
};

inline CoreLabelReport core_label_preorder(const SemidistrimModel& m, CoreLabelVariant variant) {
    const Lattice& L = m.lattice;
    int nv = m.graph.size();
    std::vector<Bitset> shard(L.n(), Bitset(nv));
    for (int b = 0; b < L.n(); ++b) {
        Bitset s = m.J[b];
        s &= m.M[variant == CoreLabelVariant::pop ? pop_down(L, b) : rowmotion(m, b)];
        shard[b] = s;
    }
    CoreLabelReport rep;
    std::map<std::vector<uint64_t>, int> cls;
    rep.class_of.assign(L.n(), -1);
    std::vector<Bitset> rep_shard;
    for (int b = 0; b < L.n(); ++b) {
        auto [it, fresh] = cls.emplace(shard[b].words(), int(rep_shard.size()));
        if (fresh) {
            rep_shard.push_back(shard[b]);
            rep.classes.emplace_back();
        }
        rep.class_of[b] = it->second;
        rep.classes[it->second].push_back(b);
    }
    rep.antisymmetric = int(rep.classes.size()) == L.n();
    int k = int(rep_shard.size());
    rep.order = poset_from_relation(
        k, [&](int a, int b) { return a != b && rep_shard[a].subset_of(rep_shard[b]); });
    // meet-semilattice: every pair of classes has a unique greatest common
    // lower bound
    rep.meet_semilattice = true;
    for (int a = 0; a < k && rep.meet_semilattice; ++a)
        for (int b = a + 1; b < k; ++b) {
            Bitset lb = rep.order.down[a];
            lb &= rep.order.down[b];
            if (lb.none()) {
                rep.meet_semilattice = false;
                break;
            }
            int top_lb = rep.order.by_rank[lb.last()];
            if (!lb.subset_of(rep.order.down[top_lb])) {
                rep.meet_semilattice = false;
                break;
            }
        }
    return rep;
}

// Classical rowmotion on order ideals: send an ideal to the down-closure of
// the minimal elements of its complement. Kept definition-direct as the
// oracle against label-set rowmotion on J(P).
inline Bitset classical_ideal_rowmotion(const Poset& p, const Bitset& ideal) {
    for (int e = 0; e < p.n; ++e)
        if (ideal.test(e))
            for (int lo : p.lower[e])
                if (!ideal.test(lo)) throw NotADownSet(e);
    Bitset out(p.n);
    for (int e = 0; e < p.n; ++e) {
        if (ideal.test(e)) continue;
        bool minimal = true;
        for (int lo : p.lower[e])
            if (!ideal.test(lo)) {
                minimal = false;
                break;
            }
        if (minimal) {
            // add e and everything below it
            p.down[e].for_each([&](int r) { out.set(p.by_rank[r]); });
        }
    }
    return out;
}

} // namespace latticelab
