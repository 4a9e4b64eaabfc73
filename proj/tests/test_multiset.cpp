#include "doctest.h"

#include <random>

#include "ktmax/colex.hpp"
#include "ktmax/multiset_bound.hpp"

using namespace ktmax;

namespace {

// Independent oracle: enumerate every partition of `target` into parts <= r
// (optionally with a forced part r) and maximize the weighted sum directly.
std::int64_t partition_enumeration_max(std::int64_t target, int r, std::int64_t k, bool require_r) {
    WeightProfile w{r, k};
    std::int64_t best = INT64_MIN;
    auto rec = [&](auto&& self, std::int64_t remaining, int max_part, std::int64_t value,
                   bool has_r) -> void {
        if (remaining == 0) {
            if (!require_r || has_r) best = std::max(best, value);
            return;
        }
        for (int d = std::min<std::int64_t>(max_part, remaining); d >= 1; --d)
            self(self, remaining - d, d, value + w.weight(d), has_r || d == r);
    };
    rec(rec, target, r, 0, false);
    return best;
}

DegreeMultiset multiset_of(std::initializer_list<std::pair<int, std::int64_t>> items) {
    DegreeMultiset d;
    for (auto [deg, c] : items) d.add(deg, c);
    return d;
}

}  // namespace

TEST_CASE("mk_oracle hand-checkable case") {
    // r=3, k=2: w(2) = w(3) = 1, so seven 2s are optimal for 2m = 14.
    MkResult res = mk_oracle(7, 3, 2, false);
    CHECK(res.three_m == 7);
    CHECK(res.witness.counts == multiset_of({{2, 7}}).counts);
}

TEST_CASE("mk_oracle against partition enumeration") {
    for (int r : {2, 3, 4, 8}) {
        std::int64_t k = r == 8 ? 5 : (r + 1) / 2;
        for (std::int64_t m = 1; m <= 15; ++m) {
            CHECK(mk_oracle(m, r, k, false).three_m == partition_enumeration_max(2 * m, r, k, false));
            if (2 * m >= r)
                CHECK(mk_oracle(m, r, k, true).three_m ==
                      partition_enumeration_max(2 * m, r, k, true));
        }
    }
}

TEST_CASE("mk_oracle witnesses are feasible and optimal") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 2 + static_cast<int>(rng() % 7);
        std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 4);
        std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 60);
        bool require_r = 2 * m >= r && trial % 2 == 0;
        MkResult res = mk_oracle(m, r, k, require_r);
        CHECK(res.witness.degree_sum() == 2 * m);
        CHECK(weighted_sum(res.witness, WeightProfile{r, k}) == res.three_m);
        CHECK(res.witness.counts.count(0) == 0);
        if (require_r) CHECK(res.witness.counts.count(r) == 1);
    }
}

TEST_CASE("tabulated r=8 values") {
    CHECK(mk_oracle(47, 8, 5, true).three_m == 279);
    CHECK(mk_oracle(53, 8, 5, true).three_m == 317);
    CHECK_THROWS_AS(mk_oracle(3, 8, 5, true), std::domain_error);
}

TEST_CASE("r=8 closed form x and 6m-x") {
    struct Row {
        std::int64_t m;
        int x;
        std::int64_t value;
    };
    for (const Row& row : {Row{47, 3, 279}, Row{48, 5, 283}, Row{49, 7, 287}, Row{50, 2, 298},
                           Row{52, 6, 306}, Row{53, 1, 317}, Row{54, 3, 321}, Row{55, 5, 325}}) {
        R8ClosedForm cf = mk_closed_form_r8(row.m);
        CHECK(cf.count_r == row.x);
        CHECK(cf.three_m_star == row.value);
        CHECK(cf.witness.degree_sum() == 2 * row.m);
    }
    CHECK_THROWS_AS(mk_closed_form_r8(36), std::domain_error);
}

TEST_CASE("closed form vs oracle: equal except at multiples of 7") {
    for (std::int64_t m = 46; m <= 120; ++m) {
        R8ClosedForm cf = mk_closed_form_r8(m);
        std::int64_t oracle = mk_oracle(m, 8, 5, true).three_m;
        if (m % 7 == 0) {
            // One eight, one six and sevens beat any {7,8}-only multiset here.
            CHECK(oracle == cf.three_m_star + 3);
            CHECK(oracle == 6 * m - 4);
        } else {
            CHECK(oracle == cf.three_m_star);
        }
    }
}

TEST_CASE("structural reductions examples") {
    // Two mid-range entries get smoothed outward.
    DegreeMultiset d = multiset_of({{2, 1}, {3, 1}, {8, 4}});
    WeightProfile w{8, 5};
    std::int64_t before = weighted_sum(d, w);
    DegreeMultiset reduced = structural_reductions(d, 8, 5);
    CHECK(reduced.degree_sum() == d.degree_sum());
    CHECK(weighted_sum(reduced, w) >= before + 2);
    // At most one entry outside {7, 8} can survive.
    std::int64_t small = 0;
    for (auto [deg, c] : reduced.counts)
        if (deg <= 6) small += c;
    CHECK(small <= 1);

    // r-1 copies of r turn into r copies of r-1 when k >= r/2.
    DegreeMultiset seven_eights = multiset_of({{8, 7}});
    DegreeMultiset after = structural_reductions(seven_eights, 8, 5);
    CHECK(after.counts == multiset_of({{7, 8}}).counts);
    CHECK(weighted_sum(after, w) - weighted_sum(seven_eights, w) == 7);
}

TEST_CASE("structural reductions preserve sum and never lose value") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 3 + static_cast<int>(rng() % 6);
        std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 5);
        DegreeMultiset d;
        for (int i = 0; i < 6; ++i) d.add(1 + static_cast<int>(rng() % r));
        DegreeMultiset reduced = structural_reductions(d, r, k);
        CHECK(reduced.degree_sum() == d.degree_sum());
        CHECK(weighted_sum(reduced, WeightProfile{r, k}) >= weighted_sum(d, WeightProfile{r, k}));
        // Fixed point: applying again changes nothing.
        DegreeMultiset again = structural_reductions(reduced, r, k);
        CHECK(again.counts == reduced.counts);
    }
}

TEST_CASE("seqopt bound") {
    CHECK(seqopt_bound(7, 3) == 7);
    CHECK(mk_oracle(7, 3, 2, false).three_m == 7);
    CHECK(seqopt_bound(29, 7) == 145);
    CHECK(mk_oracle(29, 7, 4, false).three_m <= 145);
    CHECK(seqopt_bound(4, 2) == 0);
    CHECK(mk_oracle(4, 2, 1, false).three_m <= 0);
    CHECK_THROWS_AS(seqopt_bound(6, 3), std::domain_error);
}

TEST_CASE("gap decomposition values") {
    GapDecomposition gap = gap_functions(8, 1, 5, 0);
    CHECK(gap.twice_h == -60);  // h_8(5) = -30
    gap = gap_functions(8, 1, 5, 2);
    CHECK(gap.twice_q == -18);  // q_8(2) = -9
    gap = gap_functions(5, 1, 0, 0);
    CHECK(gap.twice_total == 30);  // 3g_3 - 3m = 15 at one K_6
    CHECK(gap.m == 15);
    CHECK_THROWS_AS(gap_functions(5, 1, 3, 4), std::domain_error);
}

TEST_CASE("gap decomposition equals the direct difference") {
    for (int r = 1; r <= 8; ++r)
        for (std::int64_t a = 0; a <= 2; ++a)
            for (int c = 0; c <= r; ++c)
                for (int d = 0; d <= c; ++d) {
                    GapDecomposition gap = gap_functions(r, a, c, d);
                    CHECK(gap.twice_total == 2 * (3 * g_t(gap.m, r, 3) - (r - 2) * gap.m));
                }
}

TEST_CASE("degree multiset bookkeeping") {
    DegreeMultiset d = multiset_of({{3, 2}, {5, 1}});
    CHECK(d.degree_sum() == 11);
    CHECK(d.size() == 3);
    d.add(3, -2);
    CHECK(d.counts.count(3) == 0);
}
