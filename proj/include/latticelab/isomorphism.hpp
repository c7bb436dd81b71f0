#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "lattice.hpp"

namespace latticelab {

namespace detail {

// Iteratively refined vertex invariants on the cover digraph.
inline std::vector<uint64_t> refine_classes(const Poset& p) {
    std::vector<uint64_t> cls(p.n);
    for (int x = 0; x < p.n; ++x)
        cls[x] = (uint64_t(p.upper[x].size()) << 32) ^ (uint64_t(p.lower[x].size()) << 16) ^
                 uint64_t(p.up[x].count());
    for (int round = 0; round < p.n; ++round) {
        std::vector<uint64_t> next(p.n);
        for (int x = 0; x < p.n; ++x) {
            std::vector<uint64_t> sig_up, sig_dn;
            for (int y : p.upper[x]) sig_up.push_back(cls[y]);
            for (int y : p.lower[x]) sig_dn.push_back(cls[y]);
            std::sort(sig_up.begin(), sig_up.end());
            std::sort(sig_dn.begin(), sig_dn.end());
            uint64_t h = cls[x];
            for (uint64_t s : sig_up) h = h * 0x9e3779b97f4a7c15ull + s + 1;
            for (uint64_t s : sig_dn) h = h * 0xc2b2ae3d27d4eb4full + s + 2;
            next[x] = h;
        }
        if (next == cls) break;
        cls = next;
    }
    return cls;
}

} // namespace detail

// Order isomorphism test by invariant refinement plus backtracking. Meant
// for the corpus scale (hundreds of elements), not adversarial graphs.
inline bool is_isomorphic(const Lattice& A, const Lattice& B) {
    if (A.n() != B.n()) return false;
    if (A.p.covers.size() != B.p.covers.size()) return false;
    auto ca = detail::refine_classes(A.p), cb = detail::refine_classes(B.p);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    int n = A.n();
    std::map<uint64_t, std::vector<int>> byclass;
    for (int y = 0; y < n; ++y) byclass[cb[y]].push_back(y);

    // match elements in rank order so partial order checks only look backwards
    std::vector<int> order = A.p.by_rank;
    std::vector<int> img(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        int x = order[k];
        for (int y : byclass[ca[x]]) {
            if (used[y]) continue;
            bool ok = true;
            for (int k2 = 0; k2 < k && ok; ++k2) {
                int x2 = order[k2];
                if (A.leq(x2, x) != B.leq(img[x2], y)) ok = false;
                if (ok && A.leq(x, x2) != B.leq(y, img[x2])) ok = false;
                if (ok) {
                    bool cov_a = std::find(A.p.upper[x2].begin(), A.p.upper[x2].end(), x) !=
                                 A.p.upper[x2].end();
                    bool cov_b = std::find(B.p.upper[img[x2]].begin(), B.p.upper[img[x2]].end(),
                                           y) != B.p.upper[img[x2]].end();
                    if (cov_a != cov_b) ok = false;
                }
            }
            if (!ok) continue;
            img[x] = y;
            used[y] = 1;
            if (self(self, k + 1)) return true;
            img[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

// Deterministic 64-bit generator (splitmix64); the standard library engines
// are avoided so seeds reproduce across platforms.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return int(next() % uint64_t(n)); }
};

// Random lattice source for the verification corpus: sprinkle covers
// between consecutive levels, close off with a bottom and a top, and keep
// the posets that happen to be lattices.
inline std::optional<Lattice> random_lattice(SplitMix64& rng, int min_n = 4, int max_n = 12) {
    int inner = min_n - 2 + rng.below(max_n - min_n + 1);
    int height = 1 + rng.below(3);
    std::vector<int> level(inner);
    for (int i = 0; i < inner; ++i) level[i] = rng.below(height);
    int n = inner + 2; // 0 = bottom, n-1 = top
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < inner; ++i)
        for (int j = 0; j < inner; ++j) {
            if (level[i] < level[j] && rng.below(100) < 45) covers.emplace_back(i + 1, j + 1);
        }
    std::vector<char> has_lower(inner, 0), has_upper(inner, 0);
    for (auto [a, b] : covers) {
        has_upper[a - 1] = 1;
        has_lower[b - 1] = 1;
    }
    for (int i = 0; i < inner; ++i) {
        if (!has_lower[i]) covers.emplace_back(0, i + 1);
        if (!has_upper[i]) covers.emplace_back(i + 1, n - 1);
    }
    covers.emplace_back(0, n - 1);
    try {
        return as_lattice(poset_from_covers(n, std::move(covers)));
    } catch (const NotALattice&) {
        return std::nullopt;
    }
}

} // namespace latticelab
