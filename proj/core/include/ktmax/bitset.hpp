#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>

namespace ktmax {

// Vertex capacity of the whole artifact. 640 bits covers the largest
// construction the verification grids build (a K_{r+1} blocks plus a colex
// block needs up to 2m vertices, m <= 300).
#ifndef KTMAX_MAX_VERTICES
#define KTMAX_MAX_VERTICES 640
#endif

inline constexpr int kMaxVertices = KTMAX_MAX_VERTICES;

/// Fixed-capacity bitset over vertex ids [0, nbits). Value type, no heap.
class Bitset {
public:
    static constexpr int kWords = (kMaxVertices + 63) / 64;

    Bitset() : nbits_(0) { words_.fill(0); }
    explicit Bitset(int nbits) : nbits_(nbits) {
        assert(nbits >= 0 && nbits <= kMaxVertices);
        words_.fill(0);
    }

    int size() const { return nbits_; }
    int word_count() const { return (nbits_ + 63) / 64; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { words_.fill(0); }

    int count() const {
        int c = 0;
        for (int w = 0; w < word_count(); ++w) c += std::popcount(words_[w]);
        return c;
    }

    bool any() const {
        for (int w = 0; w < word_count(); ++w)
            if (words_[w] != 0) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// First set bit, or -1 when empty.
    int find_first() const {
        for (int w = 0; w < word_count(); ++w)
            if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// First set bit strictly after `prev`, or -1.
    int find_next(int prev) const {
        int i = prev + 1;
        if (i >= nbits_) return -1;
        int w = i >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur != 0) return w * 64 + std::countr_zero(cur);
            if (++w >= word_count()) return -1;
            cur = words_[w];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < word_count(); ++w) {
            std::uint64_t cur = words_[w];
            while (cur != 0) {
                f(w * 64 + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (int w = 0; w < word_count(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (int w = 0; w < word_count(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    /// Set difference: this \ o.
    Bitset& operator-=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (int w = 0; w < word_count(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        if (a.nbits_ != b.nbits_) return false;
        for (int w = 0; w < a.word_count(); ++w)
            if (a.words_[w] != b.words_[w]) return false;
        return true;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (int w = 0; w < word_count(); ++w)
            if ((words_[w] & ~o.words_[w]) != 0) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (int w = 0; w < word_count(); ++w)
            if ((words_[w] & o.words_[w]) != 0) return true;
        return false;
    }

    static int intersection_count(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        int c = 0;
        for (int w = 0; w < a.word_count(); ++w)
            c += std::popcount(a.words_[w] & b.words_[w]);
        return c;
    }

    /// Total-order hash usable as a map key ingredient.
    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(nbits_);
        for (int w = 0; w < word_count(); ++w)
            h ^= std::hash<std::uint64_t>{}(words_[w]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::array<std::uint64_t, kWords> words_;
    int nbits_;
};

}  // namespace ktmax
