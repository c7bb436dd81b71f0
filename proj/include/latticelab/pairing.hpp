#pragma once

#include <algorithm>
#include <vector>

#include "lattice.hpp"

namespace latticelab {

// A pairing is a bijection kappa : joins -> meets with kappa(j) a maximal
// meet-witness of j and kappa^-1(m) a minimal join-witness of m. Stored
// element-indexed for O(1) lookup in both directions.
struct Pairing {
    std::vector<int> joins, meets; // ascending element ids
    std::vector<int> kappa;        // element-indexed; -1 off the join set
    std::vector<int> kappa_inv;    // element-indexed; -1 off the meet set

    int operator()(int j) const { return kappa[j]; }
    int inv(int m) const { return kappa_inv[m]; }
};

// M_L(j) = max{z : j_* = j ^ z}. Nonempty; always a subset of the
// meet-irreducibles.
inline std::vector<int> max_meet_witnesses(const Lattice& L, int j) {
    const Irreducibles ir = irreducibles(L);
    if (ir.j_star[j] < 0) throw NotJoinIrreducible(j);
    int js = ir.j_star[j];
    Bitset zs(L.n());
    for (int z = 0; z < L.n(); ++z)
        if (L.meet(j, z) == js) zs.set(L.p.rank_of[z]);
    return L.p.maximal_of(zs);
}

// J_L(m) = min{z : m^* = m v z}, the order dual of max_meet_witnesses.
inline std::vector<int> min_join_witnesses(const Lattice& L, int m) {
    const Irreducibles ir = irreducibles(L);
    if (ir.m_star[m] < 0) throw NotMeetIrreducible(m);
    int ms = ir.m_star[m];
    Bitset zs(L.n());
    for (int z = 0; z < L.n(); ++z)
        if (L.join(m, z) == ms) zs.set(L.p.rank_of[z]);
    return L.p.minimal_of(zs);
}

namespace detail {

struct WitnessTables {
    Irreducibles ir;
    // candidate[a] = meet-indices m (position in ir.meets) compatible with
    // join ir.joins[a]: m in M(j) and j in J(m)
    std::vector<Bitset> candidate;
};

inline WitnessTables witness_tables(const Lattice& L) {
    WitnessTables t;
    t.ir = irreducibles(L);
    const auto& joins = t.ir.joins;
    const auto& meets = t.ir.meets;
    int nj = int(joins.size()), nm = int(meets.size());

    std::vector<Bitset> mw(nj, Bitset(nm)), jw(nm, Bitset(nj));
    std::vector<int> meet_pos(L.n(), -1), join_pos(L.n(), -1);
    for (int b = 0; b < nm; ++b) meet_pos[meets[b]] = b;
    for (int a = 0; a < nj; ++a) join_pos[joins[a]] = a;
    for (int a = 0; a < nj; ++a)
        for (int m : max_meet_witnesses(L, joins[a])) mw[a].set(meet_pos[m]);
    for (int b = 0; b < nm; ++b)
        for (int j : min_join_witnesses(L, meets[b])) jw[b].set(join_pos[j]);

    t.candidate.assign(nj, Bitset(nm));
    for (int a = 0; a < nj; ++a)
        for (int b = 0; b < nm; ++b)
            if (mw[a].test(b) && jw[b].test(a)) t.candidate[a].set(b);
    return t;
}

inline Pairing make_pairing(const Lattice& L, const Irreducibles& ir,
                            const std::vector<int>& match) {
    Pairing k;
    k.joins = ir.joins;
    k.meets = ir.meets;
    k.kappa.assign(L.n(), -1);
    k.kappa_inv.assign(L.n(), -1);
    for (size_t a = 0; a < ir.joins.size(); ++a) {
        int j = ir.joins[a], m = ir.meets[match[a]];
        k.kappa[j] = m;
        k.kappa_inv[m] = j;
    }
    return k;
}

template <typename Sink>
void enumerate_matchings(const std::vector<Bitset>& cand, int nm, Sink sink) {
    int nj = int(cand.size());
    std::vector<int> match(nj, -1);
    Bitset used(nm);
    // Always branch on the unmatched join with the fewest live candidates.
    auto rec = [&](auto&& self) -> bool {
        int best = -1, best_cnt = 0;
        for (int a = 0; a < nj; ++a) {
            if (match[a] >= 0) continue;
            Bitset live = cand[a];
            live.and_not(used);
            int c = live.count();
            if (c == 0) return true; // dead branch
            if (best < 0 || c < best_cnt) {
                best = a;
                best_cnt = c;
            }
        }
        if (best < 0) return sink(match);
        Bitset live = cand[best];
        live.and_not(used);
        bool keep = true;
        live.for_each([&](int b) {
            if (!keep) return;
            match[best] = b;
            used.set(b);
            keep = self(self);
            used.reset(b);
            match[best] = -1;
        });
        return keep;
    };
    rec(rec);
}

} // namespace detail

// All pairings, by perfect-matching enumeration over the witness
// compatibility graph. An empty result means the lattice is not paired.
inline std::vector<Pairing> enumerate_pairings(const Lattice& L, long long cap = 10000) {
    detail::WitnessTables t = detail::witness_tables(L);
    std::vector<Pairing> out;
    if (t.ir.joins.size() != t.ir.meets.size()) return out;
    bool capped = false;
    detail::enumerate_matchings(t.candidate, int(t.ir.meets.size()),
                                [&](const std::vector<int>& match) {
                                    out.push_back(detail::make_pairing(L, t.ir, match));
                                    if ((long long)out.size() > cap) {
                                        capped = true;
                                        return false;
                                    }
                                    return true;
                                });
    if (capped) throw SizeLimitExceeded("pairing enumeration exceeded cap");
    return out;
}

namespace detail {

// Verify the Lemma "m >= j_*, m^* >= j, m !>= j" characterization for one
// assignment; used to double-check fast-path pairings.
inline bool passes_pairing_checks(const Lattice& L, const Irreducibles& ir, const Pairing& k) {
    for (int j : ir.joins) {
        int m = k.kappa[j];
        if (m < 0) return false;
        if (!L.leq(ir.j_star[j], m)) return false;
        if (!L.leq(j, ir.m_star[m])) return false;
        if (L.leq(j, m)) return false;
    }
    return true;
}

// Meet-semidistributive fast path: if every M(j) is a singleton the pairing
// candidate is forced, so the lattice is uniquely paired or not paired at
// all. Returns true if the rule applied (result/err filled in).
inline bool singleton_rule(const Lattice& L, const Irreducibles& ir, bool dual_side, Pairing& out,
                           bool& not_paired) {
    int nj = int(ir.joins.size());
    std::vector<int> match(nj, -1);
    std::vector<int> meet_pos(L.n(), -1);
    for (size_t b = 0; b < ir.meets.size(); ++b) meet_pos[ir.meets[b]] = int(b);
    std::vector<int> join_pos(L.n(), -1);
    for (size_t a = 0; a < ir.joins.size(); ++a) join_pos[ir.joins[a]] = int(a);

    if (!dual_side) {
        for (int a = 0; a < nj; ++a) {
            auto w = max_meet_witnesses(L, ir.joins[a]);
            if (w.size() != 1) return false;
            match[a] = meet_pos[w[0]];
        }
    } else {
        for (int b = 0; b < int(ir.meets.size()); ++b) {
            auto w = min_join_witnesses(L, ir.meets[b]);
            if (w.size() != 1) return false;
            int a = join_pos[w[0]];
            if (match[a] >= 0) {
                not_paired = true;
                return true;
            }
            match[a] = b;
        }
    }
    std::vector<char> used(ir.meets.size(), 0);
    for (int a = 0; a < nj; ++a) {
        if (match[a] < 0 || used[match[a]]) {
            not_paired = true;
            return true;
        }
        used[match[a]] = 1;
    }
    Pairing k = make_pairing(L, ir, match);
    // The forced map is a pairing iff the witness memberships hold both ways.
    for (int a = 0; a < nj; ++a) {
        int j = ir.joins[a], m = k.kappa[j];
        auto mw = max_meet_witnesses(L, j);
        if (std::find(mw.begin(), mw.end(), m) == mw.end()) {
            not_paired = true;
            return true;
        }
        auto jw = min_join_witnesses(L, m);
        if (std::find(jw.begin(), jw.end(), j) == jw.end()) {
            not_paired = true;
            return true;
        }
    }
    out = k;
    return true;
}

// Extremal fast path: peel a maximum-length chain x_0 < ... < x_n; j_i is
// the unique join-irreducible with j v x_{i-1} = x_i and m_i the unique
// meet-irreducible with m ^ x_i = x_{i-1}; kappa(j_i) = m_i. Extremal
// lattices are uniquely paired, so this is the pairing when it applies.
inline bool extremal_rule(const Lattice& L, const Irreducibles& ir, Pairing& out) {
    int len = longest_chain_length(L);
    if (len != int(ir.joins.size()) || len != int(ir.meets.size())) return false;

    // Recover one longest chain from the longest-path DP.
    std::vector<int> best(L.n(), 0), pred(L.n(), -1);
    for (int r = 0; r < L.n(); ++r) {
        int x = L.p.by_rank[r];
        for (int y : L.p.upper[x])
            if (best[x] + 1 > best[y]) {
                best[y] = best[x] + 1;
                pred[y] = x;
            }
    }
    int at = L.top;
    if (best[at] != len) return false;
    std::vector<int> chain;
    while (at >= 0) {
        chain.push_back(at);
        at = pred[at];
    }
    std::reverse(chain.begin(), chain.end());

    std::vector<int> meet_pos(L.n(), -1);
    for (size_t b = 0; b < ir.meets.size(); ++b) meet_pos[ir.meets[b]] = int(b);
    std::vector<int> join_pos(L.n(), -1);
    for (size_t a = 0; a < ir.joins.size(); ++a) join_pos[ir.joins[a]] = int(a);

    std::vector<int> match(ir.joins.size(), -1);
    for (int i = 1; i <= len; ++i) {
        int ji = -1, mi = -1;
        for (int j : ir.joins)
            if (L.join(j, chain[i - 1]) == chain[i]) {
                if (ji >= 0) return false;
                ji = j;
            }
        for (int m : ir.meets)
            if (L.meet(m, chain[i]) == chain[i - 1]) {
                if (mi >= 0) return false;
                mi = m;
            }
        if (ji < 0 || mi < 0) return false;
        if (match[join_pos[ji]] >= 0) return false;
        match[join_pos[ji]] = meet_pos[mi];
    }
    Pairing k = make_pairing(L, ir, match);
    if (!passes_pairing_checks(L, ir, k)) return false;
    out = k;
    return true;
}

} // namespace detail

// The unique pairing kappa_L. Fast paths: the semidistributive singleton
// rule and the extremal chain peel; otherwise matching enumeration stopped
// at the second hit.
inline Pairing unique_pairing(const Lattice& L) {
    Irreducibles ir = irreducibles(L);
    if (ir.joins.size() != ir.meets.size()) throw NotPaired();

    Pairing k;
    bool not_paired = false;
    if (detail::singleton_rule(L, ir, false, k, not_paired) ||
        detail::singleton_rule(L, ir, true, k, not_paired)) {
        if (not_paired) throw NotPaired();
        return k;
    }
    if (detail::extremal_rule(L, ir, k)) return k;

    // Two hits are enough to refute uniqueness; full counts are the
    // diagnostic-only job of enumerate_pairings.
    detail::WitnessTables t = detail::witness_tables(L);
    std::vector<Pairing> found;
    detail::enumerate_matchings(t.candidate, int(t.ir.meets.size()),
                                [&](const std::vector<int>& match) {
                                    found.push_back(detail::make_pairing(L, t.ir, match));
                                    return found.size() < 2;
                                });
    if (found.empty()) throw NotPaired();
    if (found.size() > 1) throw NotUniquelyPaired(int(found.size()));
    return found[0];
}

// j is join-prime iff L \ [j, top] is a principal down-set [bottom, m0]
// (equivalently, iff it has a unique maximal element). 0-hat never
// qualifies: its complement is empty.
inline std::vector<int> join_primes(const Lattice& L) {
    std::vector<int> out;
    Bitset all(L.n());
    for (int r = 0; r < L.n(); ++r) all.set(r);
    for (int j = 0; j < L.n(); ++j) {
        Bitset compl_ = all;
        compl_.and_not(L.p.up[j]);
        if (compl_.none()) continue;
        int m0 = L.p.by_rank[compl_.last()];
        if (compl_ == L.p.down[m0]) out.push_back(j);
    }
    return out;
}

inline std::vector<int> meet_primes(const Lattice& L) {
    std::vector<int> out;
    Bitset all(L.n());
    for (int r = 0; r < L.n(); ++r) all.set(r);
    for (int m = 0; m < L.n(); ++m) {
        Bitset compl_ = all;
        compl_.and_not(L.p.down[m]);
        if (compl_.none()) continue;
        int j0 = L.p.by_rank[compl_.first()];
        if (compl_ == L.p.up[j0]) out.push_back(m);
    }
    return out;
}

struct PrimePair {
    int j0, m0;
};

// All (j0, m0) with L = [bottom,m0] u [j0,top], ascending by j0.
inline std::vector<PrimePair> prime_pairs(const Lattice& L) {
    std::vector<PrimePair> out;
    Bitset all(L.n());
    for (int r = 0; r < L.n(); ++r) all.set(r);
    for (int j = 0; j < L.n(); ++j) {
        Bitset compl_ = all;
        compl_.and_not(L.p.up[j]);
        if (compl_.none()) continue;
        int m0 = L.p.by_rank[compl_.last()];
        if (compl_ == L.p.down[m0]) out.push_back({j, m0});
    }
    return out;
}

} // namespace latticelab
