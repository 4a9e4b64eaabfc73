#include "ktmax/colex.hpp"

#include <cassert>
#include <set>
#include <stdexcept>

namespace ktmax {

std::pair<int, int> cd_of(std::int64_t b) {
    if (b == 0) return {0, 0};
    int c = 2;
    while (binomial(c + 1, 2) <= b) ++c;
    return {c, static_cast<int>(b - binomial(c, 2))};
}

std::pair<int, int> normalize_cd(int c, int d) {
    assert(0 <= d && d <= c);
    if (d == c) return {c + 1, 0};
    return {c, d};
}

ColexDecomposition decompose(std::int64_t m, int r) {
    if (m < 0) throw std::domain_error("decompose: m must be >= 0");
    if (r < 1) throw std::domain_error("decompose: r must be >= 1");
    ColexDecomposition out;
    out.m = m;
    out.r = r;
    std::int64_t block = binomial(r + 1, 2);
    out.a = m / block;
    out.b = m % block;
    auto [c, d] = cd_of(out.b);
    out.c = c;
    out.d = d;
    return out;
}

Graph colex_graph(std::int64_t b) {
    if (b < 0) throw std::domain_error("colex_graph: b must be >= 0");
    auto [c, d] = cd_of(b);
    Graph g(d > 0 ? c + 1 : c);
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v) g.add_edge(u, v);
    for (int u = 0; u < d; ++u) g.add_edge(u, c);
    assert(g.edge_count() == b);
    return g;
}

Graph blocks_plus_colex(std::int64_t a, int r, std::int64_t b) {
    Graph colex = colex_graph(b);
    int base = colex.vertex_count();
    Graph g(static_cast<int>(base + a * (r + 1)));
    for (auto [u, v] : colex.edges()) g.add_edge(u, v);
    for (std::int64_t i = 0; i < a; ++i) {
        int off = static_cast<int>(base + i * (r + 1));
        for (int u = 0; u < r + 1; ++u)
            for (int v = u + 1; v < r + 1; ++v) g.add_edge(off + u, off + v);
    }
    return g;
}

std::int64_t g_t(std::int64_t m, int r, int t) {
    if (t < 2) throw std::domain_error("g_t: t must be >= 2");
    ColexDecomposition dec = decompose(m, r);
    return dec.a * binomial(r + 1, t) + binomial(dec.c, t) + binomial(dec.d, t - 1);
}

Rational asymptotic_upper_bound(std::int64_t m, int r, int t) {
    if (t < 3 || t > r + 1)
        throw std::domain_error("asymptotic_upper_bound: requires 3 <= t <= r+1");
    return Rational(m * binomial(r + 1, t), binomial(r + 1, 2));
}

Graph rainbow_colex_graph(const RainbowSpec& spec, std::int64_t m) {
    if (spec.omega < 2) throw std::domain_error("rainbow: omega must be >= 2");
    if (m < 0) throw std::domain_error("rainbow: m must be >= 0");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    int maxv = -1;
    for (int y = 1; static_cast<std::int64_t>(pairs.size()) < m; ++y) {
        if (y >= spec.ground_cap)
            throw std::domain_error("rainbow: ground cap exceeded before m pairs were found");
        for (int x = 0; x < y && static_cast<std::int64_t>(pairs.size()) < m; ++x) {
            if (x % spec.omega != y % spec.omega) {
                pairs.emplace_back(x, y);
                maxv = y;
            }
        }
    }
    return Graph::from_edges(maxv + 1, pairs);
}

std::int64_t rainbow_segment_clique_count(const RainbowSpec& spec, std::int64_t m, int t) {
    if (t < 1) throw std::domain_error("rainbow: t must be >= 1");
    // A clique is a rainbow set, so nothing larger than omega can appear.
    if (t > spec.omega) return 0;
    return count_cliques(rainbow_colex_graph(spec, m), t);
}

std::int64_t shadow_size(std::int64_t N, int t, int ell) {
    if (N < 0) throw std::domain_error("shadow_size: N must be >= 0");
    if (ell < 1 || ell > t) throw std::domain_error("shadow_size: requires 1 <= ell <= t");
    std::set<std::vector<int>> shadow;
    for (std::int64_t rank = 0; rank < N; ++rank) {
        std::vector<int> tset = colex_unrank(rank, t);
        for_each_combination(t, ell, [&](std::span<const int> idx) {
            std::vector<int> sub(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = tset[idx[i]];
            shadow.insert(std::move(sub));
        });
    }
    return static_cast<std::int64_t>(shadow.size());
}

}  // namespace ktmax
