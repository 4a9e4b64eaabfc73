#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ktmax/combinatorics.hpp"
#include "ktmax/graph.hpp"

namespace ktmax {

/// The arithmetic m = a*C(r+1,2) + b with 0 <= b < C(r+1,2), and the
/// remainder written as b = [c,d] = C(c,2) + d with 0 <= d < c (both zero
/// when b = 0).
struct ColexDecomposition {
    std::int64_t m = 0;
    int r = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    int c = 0;
    int d = 0;
};

ColexDecomposition decompose(std::int64_t m, int r);

/// b = [c,d] for a bare edge count, no degree cap involved.
std::pair<int, int> cd_of(std::int64_t b);

/// The normalization [c,c] = [c+1,0].
std::pair<int, int> normalize_cd(int c, int d);

/// Graph whose edge set is the first b vertex pairs in colex order:
/// a K_c plus, when d > 0, one extra vertex joined to d of its vertices.
Graph colex_graph(std::int64_t b);

/// a disjoint copies of K_{r+1} together with the colex graph on b edges.
Graph blocks_plus_colex(std::int64_t a, int r, std::int64_t b);

/// g_t(m,r) = a*C(r+1,t) + C(c,t) + C(d,t-1), the K_t count of the graph
/// built by blocks_plus_colex over decompose(m,r).
std::int64_t g_t(std::int64_t m, int r, int t);

/// m * C(r+1,t) / C(r+1,2) as an exact rational; requires 3 <= t <= r+1.
Rational asymptotic_upper_bound(std::int64_t m, int r, int t);

/// A pair is omega-rainbow when its endpoints differ mod omega.
struct RainbowSpec {
    int omega = 2;
    int ground_cap = kMaxVertices;  // largest vertex id allowed + 1
};

/// Graph on the first m omega-rainbow pairs in colex order over {0,1,2,...}.
/// Throws std::domain_error if m pairs do not fit under the ground cap.
Graph rainbow_colex_graph(const RainbowSpec& spec, std::int64_t m);

std::int64_t rainbow_segment_clique_count(const RainbowSpec& spec, std::int64_t m, int t);

/// |∂^(ℓ)C| where C is the first N t-sets in colex order, computed by
/// materializing the segment and collecting its ℓ-subsets.
std::int64_t shadow_size(std::int64_t N, int t, int ell);

}  // namespace ktmax
