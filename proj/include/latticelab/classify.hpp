#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "labels.hpp"

namespace latticelab {

struct TripleWitness {
    int x = -1, y = -1, z = -1;
};

struct SemidistributivityResult {
    bool ok = true;
    TripleWitness witness; // violating triple when !ok
};

// Brute-force scan of the defining identity x v (y ^ z) = x v y whenever
// x v y = x v z. This is the slow independent test; the pairing module's
// singleton criterion is the fast equivalent.
inline SemidistributivityResult is_join_semidistributive(const Lattice& L) {
    for (int x = 0; x < L.n(); ++x)
        for (int y = 0; y < L.n(); ++y) {
            int xy = L.join(x, y);
            for (int z = y + 1; z < L.n(); ++z) {
                if (L.join(x, z) != xy) continue;
                if (L.join(x, L.meet(y, z)) != xy) return {false, {x, y, z}};
            }
        }
    return {};
}

inline SemidistributivityResult is_meet_semidistributive(const Lattice& L) {
    for (int x = 0; x < L.n(); ++x)
        for (int y = 0; y < L.n(); ++y) {
            int xy = L.meet(x, y);
            for (int z = y + 1; z < L.n(); ++z) {
                if (L.meet(x, z) != xy) continue;
                if (L.meet(x, L.join(y, z)) != xy) return {false, {x, y, z}};
            }
        }
    return {};
}

inline bool is_semidistributive(const Lattice& L) {
    return is_join_semidistributive(L).ok && is_meet_semidistributive(L).ok;
}

// Singleton-witness characterization (Freese-Jezek-Nation): fast route used
// on large lattices; equivalent to the triple scans.
inline bool is_meet_semidistributive_fast(const Lattice& L) {
    Irreducibles ir = irreducibles(L);
    for (int j : ir.joins)
        if (max_meet_witnesses(L, j).size() != 1) return false;
    return true;
}

inline bool is_join_semidistributive_fast(const Lattice& L) {
    Irreducibles ir = irreducibles(L);
    for (int m : ir.meets)
        if (min_join_witnesses(L, m).size() != 1) return false;
    return true;
}

inline bool is_semidistributive_fast(const Lattice& L) {
    return is_meet_semidistributive_fast(L) && is_join_semidistributive_fast(L);
}

inline bool is_extremal(const Lattice& L) {
    Irreducibles ir = irreducibles(L);
    int len = longest_chain_length(L);
    return len == int(ir.joins.size()) && len == int(ir.meets.size());
}

inline std::vector<int> left_modular_elements(const Lattice& L) {
    std::vector<int> out;
    for (int x = 0; x < L.n(); ++x) {
        bool lm = true;
        for (int y = 0; lm && y < L.n(); ++y)
            for (int z = 0; z < L.n(); ++z) {
                if (!L.leq(y, z)) continue;
                if (L.meet(L.join(y, x), z) != L.join(y, L.meet(x, z))) {
                    lm = false;
                    break;
                }
            }
        if (lm) out.push_back(x);
    }
    return out;
}

// Trim = extremal + some maximal chain of left modular elements. Maximal
// chains are the saturated bottom-to-top paths of the cover digraph, so a
// DFS restricted to left modular vertices decides the second half.
inline bool is_trim(const Lattice& L) {
    if (!is_extremal(L)) return false;
    std::vector<char> lm(L.n(), 0);
    for (int x : left_modular_elements(L)) lm[x] = 1;
    if (!lm[L.bottom] || !lm[L.top]) return false;
    std::vector<char> seen(L.n(), 0);
    std::vector<int> stack{L.bottom};
    seen[L.bottom] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == L.top) return true;
        for (int y : L.p.upper[x])
            if (lm[y] && !seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return false;
}

struct OverlappingResult {
    bool ok = true;
    int cover_lo = -1, cover_hi = -1;   // violating cover when !ok
    std::vector<int> candidates;        // its label candidate set
};

inline OverlappingResult is_overlapping(const Lattice& L, const Pairing& kappa) {
    detail::JMSets jm = detail::jm_sets(L, kappa);
    for (auto [x, y] : L.p.covers) {
        Bitset cand = jm.M[x];
        cand &= jm.J[y];
        if (cand.count() != 1) {
            OverlappingResult r;
            r.ok = false;
            r.cover_lo = x;
            r.cover_hi = y;
            cand.for_each([&](int i) { r.candidates.push_back(kappa.joins[i]); });
            return r;
        }
    }
    return {};
}

// Throws NotPaired / NotUniquelyPaired when no unique pairing exists.
inline OverlappingResult is_overlapping(const Lattice& L) {
    return is_overlapping(L, unique_pairing(L));
}

// Certificate for compatible dismantlability: the dismantling pair used at
// each node, in ambient element ids; leaves are singleton intervals.
struct DismantlingCertificate {
    int j0 = -1, m0 = -1;
    std::shared_ptr<DismantlingCertificate> lower, upper; // [0,m0], [j0,1]
};

struct CdResult {
    bool ok = false;
    std::string reason;
    std::shared_ptr<DismantlingCertificate> certificate;
};

namespace detail {

struct CdContext {
    const Lattice* ambient;
    std::map<std::vector<uint64_t>, CdResult> memo; // keyed on ambient rank mask
};

inline CdResult cd_rec(CdContext& ctx, const Lattice& K, const std::vector<int>& amb) {
    Bitset key(ctx.ambient->n());
    for (int a : amb) key.set(ctx.ambient->p.rank_of[a]);
    auto it = ctx.memo.find(key.words());
    if (it != ctx.memo.end()) return it->second;

    CdResult res;
    if (K.n() == 1) {
        res.ok = true;
        res.certificate = std::make_shared<DismantlingCertificate>();
        ctx.memo[key.words()] = res;
        return res;
    }

    Pairing kappa;
    try {
        kappa = unique_pairing(K);
    } catch (const LatticeError& e) {
        res.reason = e.what();
        ctx.memo[key.words()] = res;
        return res;
    }

    res.reason = "no dismantling pair";
    for (const PrimePair& pp : prime_pairs(K)) {
        auto [upL, upEmb] = interval(K, pp.j0, K.top);
        auto [loL, loEmb] = interval(K, K.bottom, pp.m0);
        Pairing kup, klo;
        try {
            kup = unique_pairing(upL);
            klo = unique_pairing(loL);
        } catch (const LatticeError&) {
            continue;
        }

        // alpha(j) = j0 v j must biject {j : j0 <= kappa(j)} onto the
        // join-irreducibles of [j0,1] with kappa_up(alpha(j)) = kappa(j).
        bool good = true;
        int dom = 0;
        std::vector<char> hit(upL.n(), 0);
        for (int j : kappa.joins) {
            if (!K.leq(pp.j0, kappa.kappa[j])) continue;
            ++dom;
            int a = upEmb.index_of[K.join(pp.j0, j)];
            if (a < 0 || kup.kappa[a] < 0 || hit[a]) {
                good = false;
                break;
            }
            hit[a] = 1;
            if (upEmb.element_map[kup.kappa[a]] != kappa.kappa[j]) {
                good = false;
                break;
            }
        }
        if (!good || dom != int(kup.joins.size())) continue;

        // beta(m) = m0 ^ m, dually, onto the meet-irreducibles of [0,m0].
        dom = 0;
        std::vector<char> hitm(loL.n(), 0);
        for (int m : kappa.meets) {
            if (!K.leq(kappa.kappa_inv[m], pp.m0)) continue;
            ++dom;
            int b = loEmb.index_of[K.meet(pp.m0, m)];
            if (b < 0 || klo.kappa_inv[b] < 0 || hitm[b]) {
                good = false;
                break;
            }
            hitm[b] = 1;
            if (loEmb.element_map[klo.kappa_inv[b]] != kappa.kappa_inv[m]) {
                good = false;
                break;
            }
        }
        if (!good || dom != int(klo.meets.size())) continue;

        std::vector<int> amb_up(upL.n()), amb_lo(loL.n());
        for (int i = 0; i < upL.n(); ++i) amb_up[i] = amb[upEmb.element_map[i]];
        for (int i = 0; i < loL.n(); ++i) amb_lo[i] = amb[loEmb.element_map[i]];
        CdResult up_res = cd_rec(ctx, upL, amb_up);
        if (!up_res.ok) continue;
        CdResult lo_res = cd_rec(ctx, loL, amb_lo);
        if (!lo_res.ok) continue;

        res.ok = true;
        res.reason.clear();
        res.certificate = std::make_shared<DismantlingCertificate>();
        res.certificate->j0 = amb[pp.j0];
        res.certificate->m0 = amb[pp.m0];
        res.certificate->upper = up_res.certificate;
        res.certificate->lower = lo_res.certificate;
        break;
    }
    ctx.memo[key.words()] = res;
    return res;
}

} // namespace detail

inline CdResult is_compatibly_dismantlable(const Lattice& L) {
    detail::CdContext ctx;
    ctx.ambient = &L;
    std::vector<int> amb(L.n());
    for (int i = 0; i < L.n(); ++i) amb[i] = i;
    return detail::cd_rec(ctx, L, amb);
}

// Semidistrim = compatibly dismantlable with all label sets independent in
// the Galois graph. Fast accepts: semidistributive lattices and trim
// lattices are semidistrim; for extremal lattices trimness is equivalent to
// overlapping, which has already been established once labels exist.
inline bool is_semidistrim(const Lattice& L) {
    Pairing kappa;
    try {
        kappa = unique_pairing(L);
    } catch (const LatticeError&) {
        return false;
    }
    EdgeLabeling lab;
    try {
        lab = edge_labeling(L, kappa);
    } catch (const NotOverlapping&) {
        return false;
    }
    GaloisGraph g = galois_graph(L, kappa);
    for (int x = 0; x < L.n(); ++x)
        if (!is_independent(g, lab.down[x]) || !is_independent(g, lab.up[x])) return false;
    if (is_semidistributive_fast(L)) return true;
    if (is_extremal(L)) return true;
    return is_compatibly_dismantlable(L).ok;
}

struct CrosscutResult {
    bool ok = true;
    int u = -1, v = -1; // witness interval
};

// Every proper subset of the atoms of every interval must join strictly
// below the interval top. Joins are monotone in the subset, so checking the
// co-singleton subsets suffices.
inline CrosscutResult is_crosscut_simplicial(const Lattice& L) {
    for (int u = 0; u < L.n(); ++u) {
        Bitset above = L.p.up[u];
        std::vector<int> vs = L.p.elements_of(above);
        for (int v : vs) {
            if (v == u) continue;
            std::vector<int> atoms;
            for (int a : L.p.upper[u])
                if (L.leq(a, v)) atoms.push_back(a);
            if (atoms.size() < 2) continue;
            for (size_t skip = 0; skip < atoms.size(); ++skip) {
                Bitset ub = L.p.up[u];
                for (size_t i = 0; i < atoms.size(); ++i)
                    if (i != skip) ub &= L.p.up[atoms[i]];
                if (L.p.by_rank[ub.first()] == v) return {false, u, v};
            }
        }
    }
    return {};
}

// Completely uniquely paired: the bipartite graph x ~ z with
// z in max{w : Pop_down(x) = x ^ w} and x in min{w : Pop_up(z) = z v w}
// admits exactly one perfect matching.
inline bool is_completely_uniquely_paired(const Lattice& L, int size_cap = 2000) {
    if (L.n() > size_cap) throw SizeLimitExceeded("completely-uniquely-paired check too large");
    int n = L.n();
    std::vector<Bitset> down_max(n, Bitset(n)), up_min(n, Bitset(n));
    for (int x = 0; x < n; ++x) {
        int pd = x;
        for (int y : L.p.lower[x]) pd = L.meet(pd, y);
        Bitset zs(n);
        for (int z = 0; z < n; ++z)
            if (L.meet(x, z) == pd) zs.set(L.p.rank_of[z]);
        for (int z : L.p.maximal_of(zs)) down_max[x].set(z);

        int pu = x;
        for (int y : L.p.upper[x]) pu = L.join(pu, y);
        zs = Bitset(n);
        for (int z = 0; z < n; ++z)
            if (L.join(x, z) == pu) zs.set(L.p.rank_of[z]);
        for (int z : L.p.minimal_of(zs)) up_min[x].set(z);
    }
    std::vector<Bitset> cand(n, Bitset(n));
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
            if (down_max[x].test(z) && up_min[z].test(x)) cand[x].set(z);
    int found = 0;
    detail::enumerate_matchings(cand, n, [&](const std::vector<int>&) {
        return ++found < 2;
    });
    return found == 1;
}

struct ClassificationReport {
    int n = 0;
    bool join_semidistributive = false, meet_semidistributive = false, semidistributive = false;
    bool extremal = false, trim = false;
    bool uniquely_paired = false;
    int pairing_count = 0; // 0, 1, or 2 meaning ">= 2"
    bool overlapping = false;
    bool compatibly_dismantlable = false;
    bool semidistrim = false;
    bool crosscut_simplicial = false;
    std::optional<bool> completely_uniquely_paired; // empty if skipped by size
    std::optional<TripleWitness> jsd_witness, msd_witness;
    std::optional<std::pair<int, int>> overlap_witness;
    std::optional<std::pair<int, int>> crosscut_witness;
};

struct ClassifyOptions {
    int triple_scan_cap = 600;  // above this the singleton route decides SD
    int trim_cap = 1200;        // above this trim falls back to extremal+overlapping
    int cup_cap = 64;           // completely-uniquely-paired matching size cap
};

inline ClassificationReport classify(const Lattice& L, const ClassifyOptions& opt = {}) {
    ClassificationReport r;
    r.n = L.n();
    if (L.n() <= opt.triple_scan_cap) {
        auto jsd = is_join_semidistributive(L);
        auto msd = is_meet_semidistributive(L);
        r.join_semidistributive = jsd.ok;
        r.meet_semidistributive = msd.ok;
        if (!jsd.ok) r.jsd_witness = jsd.witness;
        if (!msd.ok) r.msd_witness = msd.witness;
    } else {
        r.join_semidistributive = is_join_semidistributive_fast(L);
        r.meet_semidistributive = is_meet_semidistributive_fast(L);
    }
    r.semidistributive = r.join_semidistributive && r.meet_semidistributive;
    r.extremal = is_extremal(L);

    Pairing kappa;
    try {
        kappa = unique_pairing(L);
        r.uniquely_paired = true;
        r.pairing_count = 1;
    } catch (const NotPaired&) {
        r.pairing_count = 0;
    } catch (const NotUniquelyPaired&) {
        r.pairing_count = 2;
    }

    if (r.uniquely_paired) {
        auto ov = is_overlapping(L, kappa);
        r.overlapping = ov.ok;
        if (!ov.ok) r.overlap_witness = {ov.cover_lo, ov.cover_hi};
    }

    if (r.extremal)
        r.trim = L.n() <= opt.trim_cap ? is_trim(L) : r.overlapping;

    if (r.semidistributive || r.trim) {
        r.compatibly_dismantlable = true;
        r.semidistrim = true;
    } else if (r.uniquely_paired) {
        r.compatibly_dismantlable = is_compatibly_dismantlable(L).ok;
        r.semidistrim = r.compatibly_dismantlable && is_semidistrim(L);
    }

    auto cc = is_crosscut_simplicial(L);
    r.crosscut_simplicial = cc.ok;
    if (!cc.ok) r.crosscut_witness = {cc.u, cc.v};

    if (L.n() <= opt.cup_cap)
        r.completely_uniquely_paired = is_completely_uniquely_paired(L);
    return r;
}

} // namespace latticelab
