#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ktmax/combinatorics.hpp"

namespace ktmax {

/// Multiset of degrees from {0,...,r} as degree -> multiplicity.
struct DegreeMultiset {
    std::map<int, std::int64_t> counts;

    std::int64_t degree_sum() const;
    std::int64_t size() const;
    void add(int d, std::int64_t times = 1);
};

/// w(d) = C(d,2) for d < r and C(r,2) - k for d = r; zero on 0 and 1.
struct WeightProfile {
    int r;
    std::int64_t k;
    std::int64_t weight(int d) const {
        return d == r ? binomial(r, 2) - k : binomial(d, 2);
    }
};

std::int64_t weighted_sum(const DegreeMultiset& d, const WeightProfile& w);

struct MkResult {
    std::int64_t three_m;     // the maximum of Σ w(d), i.e. 3·M
    DegreeMultiset witness;   // one optimal multiset, no zero entries
};

/// Exact maximum of Σ_{d∈D} w(d) over multisets D from {0,...,r} with degree
/// sum exactly 2m (and r ∈ D when require_r is set), by unbounded-knapsack
/// dynamic programming. Ties in the witness are broken toward the
/// lexicographically largest degree profile. Throws when require_r and 2m < r.
MkResult mk_oracle(std::int64_t m, int r, std::int64_t k, bool require_r);

struct R8ClosedForm {
    int count_r;            // number of degree-8 entries, in [1,7], ≡ 2m (mod 7)
    std::int64_t three_m_star;  // 6m - count_r
    DegreeMultiset witness;     // count_r eights and (2m - 8·count_r)/7 sevens
};

/// Closed form 6m - x for m >= C(9,2)+1, the maximum of Σ w(d) over
/// multisets of sevens and eights containing at least one eight: x is the
/// least value in [1,7] congruent to 2m mod 7. When 7 divides m the
/// unrestricted mk_oracle exceeds this by 3 (one eight, one six, rest
/// sevens); everywhere else the two agree.
R8ClosedForm mk_closed_form_r8(std::int64_t m);

/// One rewrite step applied when its hypothesis holds:
///  - two entries x <= y in [r-2]  ->  (x-1, y+1), dropping a zero;
///  - d in [r-2] with >= r-1-d copies of r (when r <= 2k+1)
///        ->  r-d copies of r-1;
///  - >= r-1 copies of r (when 2k >= r)  ->  r copies of r-1 for r-1 of them.
/// Applied to a fixed point; preserves the degree sum and never decreases the
/// weighted sum.
DegreeMultiset structural_reductions(const DegreeMultiset& d, int r, std::int64_t k);

/// (r-2)m, an upper bound for 3·M_k(m,r) when k = ceil(r/2) and
/// m >= C(r+1,2)+1.
std::int64_t seqopt_bound(std::int64_t m, int r);

/// The decomposition 3g_3(m,r) - (r-2)m = a·C(r+1,2) + h_r(c) + q_r(d) with
/// h_r(c) = (c-r)·C(c,2) and q_r(d) = d(3(d-1)/2 - (r-2)), carried doubled so
/// everything stays integral. m is determined by (a, c, d).
struct GapDecomposition {
    std::int64_t m;
    std::int64_t twice_block;  // 2a·C(r+1,2)
    std::int64_t twice_h;      // 2(c-r)·C(c,2)
    std::int64_t twice_q;      // d(3(d-1) - 2(r-2))
    std::int64_t twice_total;  // the sum of the three
};
GapDecomposition gap_functions(int r, std::int64_t a, int c, int d);

}  // namespace ktmax
