#include "ktmax/cluster.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "ktmax/combinatorics.hpp"

namespace ktmax {

std::vector<std::pair<int, int>> tight_edges(const Graph& g, int r) {
    if (g.max_degree() > r) throw std::domain_error("tight_edges: max degree exceeds r");
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges())
        if (pair_weight(g, u, v) == r - 1) out.emplace_back(u, v);
    return out;
}

std::vector<Cluster> clusters(const Graph& g, int r) {
    if (g.max_degree() > r) throw std::domain_error("clusters: max degree exceeds r");
    int n = g.vertex_count();

    // Group degree-r vertices on their closed neighborhoods.
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != r) continue;
        Bitset nbhd = g.closed_neighborhood(v);
        std::vector<int> key;
        key.reserve(r + 1);
        nbhd.for_each([&](int w) { key.push_back(w); });
        groups[std::move(key)].push_back(v);
    }

    std::vector<Cluster> out;
    out.reserve(groups.size());
    for (auto& [closed, tvs] : groups) {
        Cluster cl;
        cl.t_vertices = tvs;
        Bitset tmask(n);
        for (int v : tvs) tmask.set(v);
        for (int w : closed)
            if (!tmask.test(w)) cl.s_vertices.push_back(w);
        assert(static_cast<int>(closed.size()) == r + 1);

        cl.red = complement_on_subset(g, cl.s_vertices);
        // delta(R) >= 1 unless T already spans a whole K_{r+1}.
        assert(cl.t() == r + 1 || cl.red.min_degree() >= 1);

        Bitset inside(n);
        for (int w : closed) inside.set(w);
        for (int s : cl.s_vertices)
            g.neighbors(s).for_each([&](int w) {
                if (!inside.test(w)) cl.blue.emplace_back(s, w);
            });
        out.push_back(std::move(cl));
    }
    return out;
}

Graph fold(const Graph& g, const Cluster& cl) {
    if (cl.blue_edges() < cl.red_edges())
        throw std::domain_error(
            "fold: refused, e(B) = " + std::to_string(cl.blue_edges()) + " < e(R) = " +
            std::to_string(cl.red_edges()) + "; folding would increase the edge count");
    Graph out = g;
    for (std::size_t i = 0; i < cl.s_vertices.size(); ++i)
        for (std::size_t j = i + 1; j < cl.s_vertices.size(); ++j)
            out.add_edge(cl.s_vertices[i], cl.s_vertices[j]);
    for (auto [u, v] : cl.blue) out.remove_edge(u, v);
    return out;
}

std::int64_t q_of_red_graph(const Graph& red, int r) {
    int s = red.vertex_count();
    if (s > r + 1) throw std::domain_error("q_of_red_graph: red graph larger than r+1");
    std::int64_t binom_sum = 0;
    for (int v = 0; v < s; ++v) binom_sum += binomial(red.degree(v), 2);
    return (r + 1 - s) * red.edge_count() + count_cliques(red, 3) - binom_sum;
}

std::int64_t count_blue_triangles(const Graph& g, const Cluster& cl) {
    int n = g.vertex_count();
    Bitset smask(n), inside(n);
    for (int v : cl.s_vertices) {
        smask.set(v);
        inside.set(v);
    }
    for (int v : cl.t_vertices) inside.set(v);
    auto is_blue = [&](int u, int v) {
        return (smask.test(u) && !inside.test(v)) || (smask.test(v) && !inside.test(u));
    };
    std::int64_t count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                int blue = is_blue(a, b) + is_blue(a, c) + is_blue(b, c);
                if (blue >= 2) ++count;
            }
        }
    return count;
}

std::int64_t blue_triangle_bound(const Graph& red, int s) {
    if (red.vertex_count() != s) throw std::domain_error("blue_triangle_bound: s mismatch");
    std::int64_t doubled = 0;
    std::int64_t binom_sum = 0;
    for (int v = 0; v < s; ++v) {
        int d = red.degree(v);
        binom_sum += binomial(d, 2);
        doubled += static_cast<std::int64_t>(d) * (s - 1 - d);
    }
    assert(doubled % 2 == 0);
    return binom_sum + doubled / 2;
}

ExclusionVerdict excluded_red_predicate(const Cluster& cl, int r) {
    ExclusionVerdict verdict;
    std::int64_t er = cl.red_edges();
    int s = cl.s();
    int t = cl.t();
    int delta_r = cl.red.max_degree();

    if (s >= 1 && 2 * s <= r + 2) verdict.citations.push_back("thm:half");
    if (delta_r <= 1 && s >= 1) verdict.citations.push_back("lem:matching");
    if (delta_r <= 2 && t >= 2 && s >= 1) verdict.citations.push_back("lem:D2b");
    if (r >= 3 && (er == 1 || er == 2)) verdict.citations.push_back("thm:s=2");
    if (r >= 7 && er == 3) verdict.citations.push_back("thm:e=3");
    if (r >= 8 && er == 4) verdict.citations.push_back("thm:e=4");
    return verdict;
}

int BipartiteSystem::x_degree(int x) const {
    int d = 0;
    for (const Bitset& row : y_adj) d += row.test(x) ? 1 : 0;
    return d;
}

std::int64_t BipartiteSystem::edge_count() const {
    std::int64_t e = 0;
    for (const Bitset& row : y_adj) e += row.count();
    return e;
}

BipartiteSystem compress(const BipartiteSystem& b, int x, int y) {
    if (x < 0 || y < 0 || x >= b.y_count() || y >= b.y_count() || x == y)
        throw std::domain_error("compress: x and y must be distinct Y-vertices");
    BipartiteSystem out = b;
    Bitset moved = out.y_adj[x] - out.y_adj[y];
    out.y_adj[x] -= moved;
    out.y_adj[y] |= moved;
    return out;
}

std::int64_t psi(const BipartiteSystem& b) {
    std::int64_t total = 0;
    for (int x = 0; x < b.x_count(); ++x) total += binomial(b.x_degree(x), 2);
    for (const Bitset& row : b.y_adj) {
        std::vector<int> nbrs;
        row.for_each([&](int v) { nbrs.push_back(v); });
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (!b.h.has_edge(nbrs[i], nbrs[j])) ++total;
    }
    return total;
}

std::int64_t d2(const Graph& g) {
    std::int64_t total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t d = g.degree(v);
        total += d * d;
    }
    return total;
}

std::int64_t d2(const BipartiteSystem& b) {
    std::int64_t total = 0;
    for (int x = 0; x < b.x_count(); ++x) {
        std::int64_t d = b.x_degree(x);
        total += d * d;
    }
    for (const Bitset& row : b.y_adj) {
        std::int64_t d = row.count();
        total += d * d;
    }
    return total;
}

PlantedClusterGenerator::Instance PlantedClusterGenerator::next(bool require_blue_at_least_red) {
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    while (true) {
        int r = pick(r_min_, r_max_);
        int s = pick(2, r);  // t = r+1-s ranges over [1, r-1]
        int t = r + 1 - s;

        // Random red graph with delta >= 1.
        Graph red(s);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        double p = 0.3 + 0.5 * coin(rng_);
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (coin(rng_) < p) red.add_edge(i, j);
        bool ok = true;
        for (int v = 0; v < s; ++v) ok = ok && red.degree(v) >= 1;
        if (!ok) continue;

        std::int64_t blue_capacity = 2 * red.edge_count();
        std::int64_t blue_target;
        if (require_blue_at_least_red)
            blue_target = red.edge_count() + pick(0, static_cast<int>(red.edge_count()));
        else
            blue_target = pick(0, static_cast<int>(blue_capacity));

        int outside = pick(2, 6);
        int n = t + s + outside;
        Graph g(n);
        // Vertices: T = [0,t), S = [t, t+s), outside = [t+s, n).
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) g.add_edge(i, j);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < s; ++j) g.add_edge(i, t + j);
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (!red.has_edge(i, j)) g.add_edge(t + i, t + j);

        std::vector<int> budget(s);
        for (int i = 0; i < s; ++i) budget[i] = red.degree(i);

        std::int64_t placed = 0;
        int attempts = 0;
        while (placed < blue_target && attempts < 400) {
            ++attempts;
            int i = pick(0, s - 1);
            int w = t + s + pick(0, outside - 1);
            if (budget[i] == 0 || g.degree(w) >= r || g.has_edge(t + i, w)) continue;
            g.add_edge(t + i, w);
            --budget[i];
            ++placed;
        }
        if (require_blue_at_least_red && placed < red.edge_count()) continue;

        // Sprinkle edges among the outside vertices.
        for (int u = t + s; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng_) < 0.4 && g.degree(u) < r && g.degree(v) < r) g.add_edge(u, v);

        // Recover the planted cluster from the graph itself.
        std::vector<Cluster> found = clusters(g, r);
        const Cluster* planted = nullptr;
        for (const Cluster& cl : found)
            if (cl.t_vertices.front() == 0 && cl.t() == t) planted = &cl;
        if (planted == nullptr) continue;

        return Instance{std::move(g), *planted, r};
    }
}

BipartiteSystemGenerator::Instance BipartiteSystemGenerator::next() {
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    while (true) {
        int nx = pick(2, 7);
        int ny = pick(2, 6);
        BipartiteSystem b;
        b.h = Graph(nx);
        double ph = coin(rng_);
        for (int i = 0; i < nx; ++i)
            for (int j = i + 1; j < nx; ++j)
                if (coin(rng_) < ph) b.h.add_edge(i, j);
        b.y_adj.assign(ny, Bitset(nx));
        double pb = 0.2 + 0.6 * coin(rng_);
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x)
                if (coin(rng_) < pb) b.y_adj[y].set(x);

        // Find an incomparable pair of Y-neighborhoods.
        for (int x = 0; x < ny; ++x)
            for (int y = 0; y < ny; ++y) {
                if (x == y) continue;
                if (!b.y_adj[x].is_subset_of(b.y_adj[y]) && !b.y_adj[y].is_subset_of(b.y_adj[x]))
                    return Instance{std::move(b), x, y};
            }
    }
}

}  // namespace ktmax
