#pragma once

#include <cstdint>
#include <vector>
#include <functional>

namespace latticelab {

// Dense bitset sized at construction. Order rows, element subsets and
// Galois-graph vertex sets are all stored this way, so the word ops here
// are the hot path of the whole library.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_(words_for(nbits), 0) {}

    static Bitset singleton(int nbits, int i) {
        Bitset b(nbits);
        b.set(i);
        return b;
    }

    int size() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    // this := this & ~o
    Bitset& and_not(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const { return w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return w_ != o.w_; }
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool subset_of(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    // First set bit, or -1.
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k << 6) + __builtin_ctzll(w_[k]);
        return -1;
    }
    // Last set bit, or -1.
    int last() const {
        for (size_t k = w_.size(); k-- > 0;)
            if (w_[k]) return int(k << 6) + 63 - __builtin_clzll(w_[k]);
        return -1;
    }
    // First set bit strictly after i, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t w = w_[k] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (w) return int(k << 6) + __builtin_ctzll(w);
            if (++k >= w_.size()) return -1;
            w = w_[k];
        }
    }

    template <typename F>
    void for_each(F f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                f(int(k << 6) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    const std::vector<uint64_t>& words() const { return w_; }

    struct Hash {
        size_t operator()(const Bitset& b) const {
            uint64_t h = 0x9e3779b97f4a7c15ull ^ uint64_t(b.nbits_);
            for (uint64_t w : b.w_) {
                h ^= w;
                h *= 0xff51afd7ed558ccdull;
                h ^= h >> 33;
            }
            return size_t(h);
        }
    };

private:
    static size_t words_for(int n) { return size_t(n + 63) >> 6; }
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace latticelab
