#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace latticelab {

struct GenResult {
    Lattice lattice;
    std::string name;
    std::vector<std::string> element_names;
};

inline Lattice chain(int k) {
    if (k < 1) throw SizeLimitExceeded("chain needs k >= 1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    return as_lattice(poset_from_covers(k, std::move(covers)));
}

// Boolean lattice on k atoms; element index = subset bitmask.
inline Lattice boolean_lattice(int k, long long cap = 2'000'000) {
    if (k < 0 || (1LL << k) > cap) throw SizeLimitExceeded("boolean lattice too large");
    int n = 1 << k;
    std::vector<std::pair<int, int>> covers;
    for (int s = 0; s < n; ++s)
        for (int b = 0; b < k; ++b)
            if (!(s >> b & 1)) covers.emplace_back(s, s | 1 << b);
    return as_lattice(poset_from_covers(n, std::move(covers)));
}

// ---------------------------------------------------------------------------
// Coxeter groups of types A and B as signed/unsigned one-line windows.
// Generators are numbered 1..rank. Type A: s_k swaps positions (equivalently
// values) k, k+1 of a permutation of 1..rank+1. Type B: s_1 is the sign
// change (the special diagram node) and s_k, k >= 2, swaps k-1, k.
// ---------------------------------------------------------------------------

enum class CoxType { A, B, I2 };

namespace cox {

using Window = std::vector<int>;

inline int length(CoxType t, const Window& w) {
    int n = int(w.size());
    int inv = 0, neg = 0, nsp = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (w[i] > w[j]) ++inv;
            if (t == CoxType::B && w[i] + w[j] < 0) ++nsp;
        }
    if (t == CoxType::B)
        for (int v : w)
            if (v < 0) ++neg;
    return inv + neg + nsp;
}

// w * s_k (right multiplication acts on positions)
inline Window right_mult(CoxType t, const Window& w, int k) {
    Window r = w;
    if (t == CoxType::A) {
        std::swap(r[k - 1], r[k]);
    } else {
        if (k == 1)
            r[0] = -r[0];
        else
            std::swap(r[k - 2], r[k - 1]);
    }
    return r;
}

// s_k * w (left multiplication acts on values)
inline Window left_mult(CoxType t, const Window& w, int k) {
    Window r = w;
    if (t == CoxType::A) {
        for (int& v : r) {
            if (v == k)
                v = k + 1;
            else if (v == k + 1)
                v = k;
        }
    } else {
        if (k == 1) {
            for (int& v : r)
                if (v == 1 || v == -1) v = -v;
        } else {
            for (int& v : r) {
                if (v == k - 1)
                    v = k;
                else if (v == k)
                    v = k - 1;
                else if (v == -(k - 1))
                    v = -k;
                else if (v == -k)
                    v = -(k - 1);
            }
        }
    }
    return r;
}

inline std::vector<Window> enumerate(CoxType t, int rank, long long cap) {
    std::vector<Window> out;
    if (t == CoxType::A) {
        long long size = 1;
        for (int i = 2; i <= rank + 1; ++i) size *= i;
        if (size > cap) throw SizeLimitExceeded("weak order too large");
        Window w(rank + 1);
        std::iota(w.begin(), w.end(), 1);
        do
            out.push_back(w);
        while (std::next_permutation(w.begin(), w.end()));
    } else {
        long long size = 1;
        for (int i = 2; i <= rank; ++i) size *= i;
        size <<= rank;
        if (size > cap) throw SizeLimitExceeded("weak order too large");
        Window base(rank);
        std::iota(base.begin(), base.end(), 1);
        do {
            for (int mask = 0; mask < (1 << rank); ++mask) {
                Window w = base;
                for (int i = 0; i < rank; ++i)
                    if (mask >> i & 1) w[i] = -w[i];
                out.push_back(w);
            }
        } while (std::next_permutation(base.begin(), base.end()));
        std::sort(out.begin(), out.end());
    }
    return out;
}

inline std::string window_str(const Window& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

inline int num_generators(CoxType t, int rank) { return t == CoxType::A ? rank : rank; }

} // namespace cox

// Right weak order: u is covered by u*s_k whenever the length goes up.
inline GenResult weak_order(CoxType type, int rank, long long cap = 50000) {
    if (type == CoxType::I2) throw UnknownId("use weak_order_i2 for dihedral types");
    auto elems = cox::enumerate(type, rank, cap);
    std::map<cox::Window, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
    std::vector<std::pair<int, int>> covers;
    int gens = cox::num_generators(type, rank);
    for (size_t i = 0; i < elems.size(); ++i) {
        int len = cox::length(type, elems[i]);
        for (int k = 1; k <= gens; ++k) {
            cox::Window w = cox::right_mult(type, elems[i], k);
            if (cox::length(type, w) == len + 1) covers.emplace_back(int(i), index.at(w));
        }
    }
    GenResult g;
    g.lattice = as_lattice(poset_from_covers(int(elems.size()), std::move(covers)));
    g.name = std::string("weak-") + (type == CoxType::A ? "A" : "B") + std::to_string(rank);
    for (auto& w : elems) g.element_names.push_back(cox::window_str(w));
    return g;
}

// Weak order of the dihedral group I2(m): two saturated chains of length m
// from the identity to the longest element.
inline GenResult weak_order_i2(int m, long long cap = 50000) {
    if (m < 2 || 2 * m > cap) throw SizeLimitExceeded("dihedral weak order out of range");
    int n = 2 * m;
    // 0 = e; 1..m-1 = words starting with s; m..2m-2 = words starting with t;
    // 2m-1 = longest element
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> names(n);
    names[0] = "e";
    names[n - 1] = "w0";
    auto word = [](char a, char b, int len) {
        std::string s;
        for (int i = 0; i < len; ++i) s += (i % 2 ? b : a);
        return s;
    };
    for (int len = 1; len <= m - 1; ++len) {
        int sidx = len, tidx = m - 1 + len;
        names[sidx] = word('s', 't', len);
        names[tidx] = word('t', 's', len);
        covers.emplace_back(len == 1 ? 0 : sidx - 1, sidx);
        covers.emplace_back(len == 1 ? 0 : tidx - 1, tidx);
    }
    covers.emplace_back(m - 1, n - 1);
    covers.emplace_back(2 * m - 2, n - 1);
    GenResult g;
    g.lattice = as_lattice(poset_from_covers(n, std::move(covers)));
    g.name = "weak-I2(" + std::to_string(m) + ")";
    g.element_names = std::move(names);
    return g;
}

// ---------------------------------------------------------------------------
// Tamari lattices on binary trees, built independently of the Cambrian
// machinery so the two constructions can cross-validate. Trees are preorder
// codes (1 internal, 0 leaf); the cover move rewrites ((A,B),C) -> (A,(B,C)).
// ---------------------------------------------------------------------------

namespace tamari_detail {

using Code = std::vector<char>;

inline void gen_codes(int k, std::vector<Code>& out) {
    if (k == 0) {
        out.push_back({0});
        return;
    }
    for (int i = 0; i < k; ++i) {
        std::vector<Code> ls, rs;
        gen_codes(i, ls);
        gen_codes(k - 1 - i, rs);
        for (auto& l : ls)
            for (auto& r : rs) {
                Code c{1};
                c.insert(c.end(), l.begin(), l.end());
                c.insert(c.end(), r.begin(), r.end());
                out.push_back(c);
            }
    }
}

// parse subtree at pos, returning one-past-the-end
inline size_t subtree_end(const Code& c, size_t pos) {
    if (!c[pos]) return pos + 1;
    size_t mid = subtree_end(c, pos + 1);
    return subtree_end(c, mid);
}

// all single right-rotations ((A,B),C) -> (A,(B,C))
inline void rotations(const Code& c, std::vector<Code>& out) {
    for (size_t v = 0; v < c.size(); ++v) {
        if (!c[v]) continue;
        size_t u = v + 1; // left child
        if (!c[u]) continue;
        size_t a = u + 1;
        size_t b = subtree_end(c, a);
        size_t cc = subtree_end(c, b);   // = end of left subtree of v
        size_t cend = subtree_end(c, cc); // end of v's right subtree
        // rebuild: prefix, 1 (new root v), A, 1 (new right node), B, C, suffix
        Code r(c.begin(), c.begin() + v);
        r.push_back(1);
        r.insert(r.end(), c.begin() + a, c.begin() + b);   // A
        r.push_back(1);
        r.insert(r.end(), c.begin() + b, c.begin() + cc);  // B
        r.insert(r.end(), c.begin() + cc, c.begin() + cend); // C
        r.insert(r.end(), c.begin() + cend, c.end());
        out.push_back(r);
    }
}

} // namespace tamari_detail

inline GenResult tamari(int n, long long cap = 50000) {
    using namespace tamari_detail;
    if (n < 1) throw SizeLimitExceeded("tamari needs n >= 1");
    std::vector<Code> codes;
    gen_codes(n + 1, codes); // |Tamari(A_n)| = Catalan(n+1)
    if ((long long)codes.size() > cap) throw SizeLimitExceeded("tamari lattice too large");
    std::sort(codes.begin(), codes.end());
    std::map<Code, int> index;
    for (size_t i = 0; i < codes.size(); ++i) index[codes[i]] = int(i);
    std::vector<std::pair<int, int>> covers;
    for (size_t i = 0; i < codes.size(); ++i) {
        std::vector<Code> rots;
        rotations(codes[i], rots);
        for (auto& r : rots) covers.emplace_back(int(i), index.at(r));
    }
    GenResult g;
    g.lattice = as_lattice(poset_from_covers(int(codes.size()), std::move(covers)));
    g.name = "tamari-A" + std::to_string(n);
    for (auto& c : codes) {
        std::string s;
        for (char b : c) s += b ? '1' : '0';
        g.element_names.push_back(s);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Cambrian lattices as the induced weak order on c-sortable elements.
// ---------------------------------------------------------------------------

struct CoxeterElementSpec {
    CoxType type = CoxType::A;
    int rank = 2;               // m for I2
    std::vector<int> word;      // ordering of generators 1..rank
};

// "linear" follows the diagram path s_1 s_2 ... s_n; "bipartite" takes the
// odd-numbered nodes first, then the even ones.
inline std::vector<int> coxeter_word(int rank, const std::string& preset) {
    std::vector<int> w;
    if (preset == "linear") {
        for (int i = 1; i <= rank; ++i) w.push_back(i);
    } else if (preset == "bipartite") {
        for (int i = 1; i <= rank; i += 2) w.push_back(i);
        for (int i = 2; i <= rank; i += 2) w.push_back(i);
    } else {
        throw UnknownId("coxeter word preset: " + preset);
    }
    return w;
}

namespace cox {

// Greedy c-sorting pass: scan copies of c, left-multiplying away whichever
// letters currently shorten the element. Sortable iff the support sets of
// successive copies weakly decrease.
inline bool is_sortable(CoxType t, const Window& w, const std::vector<int>& word) {
    Window u = w;
    int len = length(t, u);
    std::vector<unsigned> supports;
    while (len > 0) {
        unsigned sup = 0;
        for (int k : word) {
            Window v = left_mult(t, u, k);
            int lv = length(t, v);
            if (lv < len) {
                u = std::move(v);
                len = lv;
                sup |= 1u << k;
            }
        }
        if (!sup) throw InternalMismatch("c-sorting made no progress");
        supports.push_back(sup);
    }
    for (size_t i = 1; i < supports.size(); ++i)
        if (supports[i] & ~supports[i - 1]) return false;
    return true;
}

} // namespace cox

inline GenResult cambrian(const CoxeterElementSpec& spec, long long cap = 50000) {
    if (spec.type == CoxType::I2) {
        // Sortables for c = st: e, t, all prefixes of sss..., w0. The result
        // is the (m+2)-element "fan": a long chain plus one extra atom.
        int m = spec.rank;
        if (m < 2 || m + 2 > cap) throw SizeLimitExceeded("dihedral cambrian out of range");
        int n = m + 2;
        // 0 = e, 1..m-1 = s-chain, m = t, m+1 = w0
        std::vector<std::pair<int, int>> covers;
        std::vector<std::string> names(n);
        names[0] = "e";
        names[m] = "t";
        names[n - 1] = "w0";
        for (int len = 1; len <= m - 1; ++len) {
            std::string word;
            for (int i = 0; i < len; ++i) word += (i % 2 ? 't' : 's');
            names[len] = word;
            covers.emplace_back(len == 1 ? 0 : len - 1, len);
        }
        covers.emplace_back(0, m);
        covers.emplace_back(m - 1, n - 1);
        covers.emplace_back(m, n - 1);
        GenResult g;
        g.lattice = as_lattice(poset_from_covers(n, std::move(covers)));
        g.name = "cambrian-I2(" + std::to_string(m) + ")";
        g.element_names = std::move(names);
        return g;
    }

    std::vector<int> word = spec.word;
    if (word.empty()) word = coxeter_word(spec.rank, "linear");
    {
        std::vector<int> sorted = word;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < spec.rank; ++i)
            if (sorted[i] != i + 1) throw UnknownId("coxeter word must permute 1..rank");
    }

    auto elems = cox::enumerate(spec.type, spec.rank, cap);
    std::vector<int> keep;
    for (size_t i = 0; i < elems.size(); ++i)
        if (cox::is_sortable(spec.type, elems[i], word)) keep.push_back(int(i));

    // induced weak order on the sortable elements
    std::map<cox::Window, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
    std::vector<std::pair<int, int>> weak_covers;
    int gens = cox::num_generators(spec.type, spec.rank);
    for (size_t i = 0; i < elems.size(); ++i) {
        int len = cox::length(spec.type, elems[i]);
        for (int k = 1; k <= gens; ++k) {
            cox::Window w = cox::right_mult(spec.type, elems[i], k);
            if (cox::length(spec.type, w) == len + 1) weak_covers.emplace_back(int(i), index.at(w));
        }
    }
    Poset weak = poset_from_covers(int(elems.size()), std::move(weak_covers));

    Poset sub = poset_from_relation(
        int(keep.size()), [&](int a, int b) { return weak.leq(keep[a], keep[b]); });
    GenResult g;
    g.lattice = as_lattice(sub); // NotALattice here would be a construction bug
    g.name = std::string("cambrian-") + (spec.type == CoxType::A ? "A" : "B") +
             std::to_string(spec.rank);
    for (int i : keep) g.element_names.push_back(cox::window_str(elems[i]));
    return g;
}

// ---------------------------------------------------------------------------
// Positive root posets (types A and B), ordered by "difference is a
// nonnegative combination of simple roots" = componentwise order on
// simple-root coordinates.
// ---------------------------------------------------------------------------

inline Poset root_poset(CoxType type, int rank) {
    std::vector<std::vector<int>> roots;
    if (type == CoxType::A) {
        for (int i = 1; i <= rank; ++i)
            for (int j = i; j <= rank; ++j) {
                std::vector<int> c(rank, 0);
                for (int k = i; k <= j; ++k) c[k - 1] = 1; // e_i - e_{j+1}
                roots.push_back(c);
            }
    } else if (type == CoxType::B) {
        for (int i = 1; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j) {
                std::vector<int> c(rank, 0);
                for (int k = i; k < j; ++k) c[k - 1] = 1; // e_i - e_j
                roots.push_back(c);
            }
        for (int i = 1; i <= rank; ++i) {
            std::vector<int> c(rank, 0);
            for (int k = i; k <= rank; ++k) c[k - 1] = 1; // e_i
            roots.push_back(c);
        }
        for (int i = 1; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j) {
                std::vector<int> c(rank, 0);
                for (int k = i; k < j; ++k) c[k - 1] = 1;
                for (int k = j; k <= rank; ++k) c[k - 1] = 2; // e_i + e_j
                roots.push_back(c);
            }
    } else {
        throw UnknownId("root posets are built for types A and B only");
    }
    std::sort(roots.begin(), roots.end());
    return poset_from_relation(int(roots.size()), [&](int a, int b) {
        if (a == b) return false;
        for (int k = 0; k < rank; ++k)
            if (roots[a][k] > roots[b][k]) return false;
        return roots[a] != roots[b];
    });
}

// ---------------------------------------------------------------------------
// Named example lattices as hard-coded cover lists. Elements carry the
// labels used in the reference drawings.
// ---------------------------------------------------------------------------

inline GenResult figure_lattice(const std::string& id) {
    GenResult g;
    g.name = id;
    std::vector<std::pair<int, int>> cov;
    std::vector<std::string> nm;
    if (id == "fig1_left") {
        // hexagon: the weak order on S3
        nm = {"x0", "x1", "x2", "x3", "x4", "x5"};
        cov = {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}};
    } else if (id == "fig1_mid") {
        nm = {"x0", "x1", "x2", "x3", "x4", "x5", "x6"};
        cov = {{0, 1}, {0, 2}, {1, 5}, {1, 3}, {3, 4}, {2, 4}, {5, 6}, {4, 6}};
    } else if (id == "fig1_right") {
        nm = {"x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"};
        cov = {{0, 1}, {0, 7}, {7, 2}, {1, 3}, {1, 5}, {3, 4}, {2, 4}, {5, 6}, {4, 6}};
    } else if (id == "fig2") {
        nm = {"bot", "a", "b", "c", "top"};
        cov = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    } else if (id == "fig3") {
        nm = {"bot", "j1", "j2", "j3", "m4", "j4m3", "m2", "m1", "top"};
        cov = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {5, 7},
               {7, 8}, {1, 6}, {3, 6}, {3, 7}, {4, 8}, {6, 8}};
    } else if (id == "fig4") {
        nm = {"bot", "j0", "j1", "j2m1", "j3m4", "j4m3", "m0", "m2", "top"};
        cov = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 7},
               {2, 6}, {3, 6}, {4, 7}, {5, 7}, {7, 8}, {6, 8}};
    } else if (id == "fig5") {
        nm = {"bot", "j2", "j4m1", "j3m5", "j5m3", "j1m2", "m4", "top"};
        cov = {{0, 1}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 7}, {3, 6}, {4, 6}, {6, 7}, {5, 7}};
    } else if (id == "fig6") {
        nm = {"bot", "j1", "j2m1", "j3m2", "j4m3", "m4", "mid", "j5m6", "j6m5", "top"};
        cov = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5},
               {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 9}, {8, 9}};
    } else if (id == "fig7") {
        nm = {"bot", "d", "a", "b", "c", "top"};
        cov = {{0, 2}, {0, 1}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}};
    } else if (id == "fig8") {
        nm = {"bot", "d", "e", "a", "b", "c", "top"};
        cov = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}};
    } else if (id == "fig12") {
        nm.resize(20);
        for (int i = 0; i < 20; ++i) nm[i] = "x" + std::to_string(i);
        cov = {{0, 1},   {0, 2},   {1, 3},   {1, 4},   {2, 5},  {2, 6},  {4, 7},
               {5, 7},   {3, 8},   {7, 8},   {8, 9},   {6, 9},  {9, 19}, {19, 18},
               {19, 16}, {18, 13}, {18, 17}, {17, 14}, {17, 15}, {13, 11}, {14, 11},
               {15, 12}, {16, 12}, {11, 10}, {12, 10}};
    } else if (id == "fig13") {
        nm.resize(17);
        for (int i = 0; i < 17; ++i) nm[i] = "x" + std::to_string(i);
        cov = {{0, 1}, {0, 2}, {1, 3},  {1, 4},   {2, 5},   {2, 6},   {3, 8},   {4, 7},
               {5, 7}, {7, 8}, {8, 13}, {6, 13},  {3, 9},   {9, 14},  {14, 16}, {15, 16},
               {13, 15}, {10, 14}, {11, 10}, {11, 12}, {12, 15}, {8, 11}};
    } else {
        throw UnknownId(id);
    }
    g.lattice = as_lattice(poset_from_covers(int(nm.size()), std::move(cov)));
    g.element_names = std::move(nm);
    return g;
}

inline const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {
        "fig1_left", "fig1_mid", "fig1_right", "fig2", "fig3", "fig4",
        "fig5",      "fig6",     "fig7",       "fig8", "fig12", "fig13"};
    return ids;
}

} // namespace latticelab
