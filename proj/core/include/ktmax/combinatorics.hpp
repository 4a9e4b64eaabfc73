#pragma once

#include <boost/rational.hpp>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace ktmax {

using Rational = boost::rational<std::int64_t>;

/// C(n,k) with the extended convention: 0 whenever k < 0 or k > n or n < 0.
/// Asserts the result fits in a signed 64-bit integer.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        assert(acc <= INT64_MAX);
    }
    return static_cast<std::int64_t>(acc);
}

/// Colex rank of a set of distinct non-negative integers:
/// rank(S) = sum over the i-th smallest element s_i of C(s_i, i+1).
/// A precedes B in colex order iff max(A xor B) lies in B.
inline std::int64_t colex_rank(std::span<const int> sorted_set) {
    std::int64_t rank = 0;
    for (std::size_t i = 0; i < sorted_set.size(); ++i) {
        assert(i == 0 || sorted_set[i] > sorted_set[i - 1]);
        rank += binomial(sorted_set[i], static_cast<std::int64_t>(i) + 1);
    }
    return rank;
}

inline std::int64_t colex_rank_pair(int a, int b) {
    assert(a != b);
    if (a > b) std::swap(a, b);
    return binomial(b, 2) + a;
}

/// Inverse of colex_rank for t-sets; returns the set in increasing order.
inline std::vector<int> colex_unrank(std::int64_t rank, int t) {
    if (rank < 0) throw std::domain_error("colex_unrank: negative rank");
    if (t < 0) throw std::domain_error("colex_unrank: negative set size");
    std::vector<int> out(t);
    for (int i = t; i >= 1; --i) {
        // Largest x with C(x, i) <= rank.
        int x = i - 1;
        while (binomial(x + 1, i) <= rank) ++x;
        out[i - 1] = x;
        rank -= binomial(x, i);
    }
    assert(rank == 0);
    return out;
}

/// Visits all k-subsets of {0,...,n-1} in lexicographic index order.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(std::span<const int>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace ktmax
