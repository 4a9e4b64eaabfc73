#include "ktmax/multiset_bound.hpp"

#include <cassert>
#include <stdexcept>

#include "ktmax/colex.hpp"

namespace ktmax {

std::int64_t DegreeMultiset::degree_sum() const {
    std::int64_t s = 0;
    for (auto [d, c] : counts) s += static_cast<std::int64_t>(d) * c;
    return s;
}

std::int64_t DegreeMultiset::size() const {
    std::int64_t s = 0;
    for (auto [d, c] : counts) s += c;
    return s;
}

void DegreeMultiset::add(int d, std::int64_t times) {
    if (times == 0) return;
    auto it = counts.find(d);
    std::int64_t next = (it == counts.end() ? 0 : it->second) + times;
    assert(next >= 0);
    if (next == 0) {
        if (it != counts.end()) counts.erase(it);
    } else {
        counts[d] = next;
    }
}

std::int64_t weighted_sum(const DegreeMultiset& d, const WeightProfile& w) {
    std::int64_t s = 0;
    for (auto [deg, c] : d.counts) s += w.weight(deg) * c;
    return s;
}

MkResult mk_oracle(std::int64_t m, int r, std::int64_t k, bool require_r) {
    if (m < 0) throw std::domain_error("mk_oracle: m must be >= 0");
    if (r < 1) throw std::domain_error("mk_oracle: r must be >= 1");
    if (k < 1) throw std::domain_error("mk_oracle: k must be >= 1");
    std::int64_t target = 2 * m;
    if (require_r && target < r)
        throw std::domain_error("mk_oracle: 2m < r, no multiset can contain r");

    WeightProfile w{r, k};
    std::int64_t base = require_r ? target - r : target;

    // dp[s] = max weighted sum over multisets from [1..r] with degree sum s.
    // Every s is reachable (entries of value 1 have weight 0).
    std::vector<std::int64_t> dp(base + 1, 0);
    for (std::int64_t s = 1; s <= base; ++s) {
        std::int64_t best = INT64_MIN;
        for (int d = 1; d <= r && d <= s; ++d)
            best = std::max(best, dp[s - d] + w.weight(d));
        dp[s] = best;
    }

    MkResult out;
    out.three_m = dp[base] + (require_r ? w.weight(r) : 0);
    if (require_r) out.witness.add(r);

    // Reconstruct greedily from the largest degree; this yields the
    // lexicographically largest optimal profile.
    std::int64_t s = base;
    while (s > 0) {
        for (int d = std::min<std::int64_t>(r, s); d >= 1; --d) {
            if (dp[s] == dp[s - d] + w.weight(d)) {
                out.witness.add(d);
                s -= d;
                break;
            }
        }
    }
    assert(weighted_sum(out.witness, w) == out.three_m);
    assert(out.witness.degree_sum() == target);
    return out;
}

R8ClosedForm mk_closed_form_r8(std::int64_t m) {
    if (m < binomial(9, 2) + 1)
        throw std::domain_error("mk_closed_form_r8: requires m >= C(9,2)+1");
    R8ClosedForm out;
    int residue = static_cast<int>((2 * m) % 7);
    out.count_r = residue == 0 ? 7 : residue;
    out.three_m_star = 6 * m - out.count_r;
    out.witness.add(8, out.count_r);
    out.witness.add(7, (2 * m - 8 * out.count_r) / 7);
    assert(out.witness.degree_sum() == 2 * m);
    return out;
}

namespace {

// Greedy reconstruction is wasteful to re-derive, so the rewrites mutate a
// copy until none applies.
bool apply_r2_rewrite(DegreeMultiset& d, int r) {
    // Two entries x <= y in [r-2] -> (x-1, y+1).
    int x = -1, y = -1;
    for (auto [deg, c] : d.counts) {
        if (deg < 1 || deg > r - 2) continue;
        if (c >= 2) {
            x = y = deg;
            break;
        }
        if (x == -1) {
            x = deg;
        } else {
            y = deg;
            break;
        }
    }
    if (x == -1 || y == -1) return false;
    d.add(x, -1);
    d.add(y, -1);
    if (x - 1 >= 1) d.add(x - 1);
    d.add(y + 1);
    return true;
}

bool apply_r1d_rewrite(DegreeMultiset& d, int r, std::int64_t k) {
    if (r > 2 * k + 1) return false;
    for (auto [deg, c] : d.counts) {
        if (deg < 1 || deg > r - 2) continue;
        auto it = d.counts.find(r);
        std::int64_t copies_of_r = it == d.counts.end() ? 0 : it->second;
        if (copies_of_r >= r - 1 - deg) {
            d.add(deg, -1);
            d.add(r, -(r - 1 - deg));
            d.add(r - 1, r - deg);
            return true;
        }
    }
    return false;
}

bool apply_rr1_rewrite(DegreeMultiset& d, int r, std::int64_t k) {
    if (2 * k < r) return false;
    auto it = d.counts.find(r);
    if (it == d.counts.end() || it->second < r - 1) return false;
    d.add(r, -(r - 1));
    d.add(r - 1, r);
    return true;
}

}  // namespace

DegreeMultiset structural_reductions(const DegreeMultiset& input, int r, std::int64_t k) {
    DegreeMultiset d = input;
    d.counts.erase(0);
    WeightProfile w{r, k};
    std::int64_t sum = d.degree_sum();
    std::int64_t value = weighted_sum(d, w);
    while (true) {
        if (apply_r2_rewrite(d, r) || apply_r1d_rewrite(d, r, k) || apply_rr1_rewrite(d, r, k)) {
            assert(d.degree_sum() == sum);
            std::int64_t next = weighted_sum(d, w);
            assert(next >= value);
            value = next;
            continue;
        }
        return d;
    }
}

std::int64_t seqopt_bound(std::int64_t m, int r) {
    if (r < 1) throw std::domain_error("seqopt_bound: r must be >= 1");
    if (m < binomial(r + 1, 2) + 1)
        throw std::domain_error("seqopt_bound: requires m >= C(r+1,2)+1");
    return (r - 2) * m;
}

GapDecomposition gap_functions(int r, std::int64_t a, int c, int d) {
    if (r < 1 || a < 0 || d < 0 || d > c || c > r)
        throw std::domain_error("gap_functions: requires 0 <= d <= c <= r, a >= 0");
    GapDecomposition out;
    out.m = a * binomial(r + 1, 2) + binomial(c, 2) + d;
    out.twice_block = 2 * a * binomial(r + 1, 2);
    out.twice_h = 2 * (c - r) * binomial(c, 2);
    out.twice_q = static_cast<std::int64_t>(d) * (3 * (d - 1) - 2 * (r - 2));
    out.twice_total = out.twice_block + out.twice_h + out.twice_q;
    assert(out.twice_total == 2 * (3 * g_t(out.m, r, 3) - (r - 2) * out.m));
    return out;
}

}  // namespace ktmax
