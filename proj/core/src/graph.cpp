#include "ktmax/graph.hpp"

#include <cassert>
#include <stdexcept>

#include "ktmax/combinatorics.hpp"

namespace ktmax {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::domain_error("Graph: vertex count out of range");
    adj_.assign(n_, Bitset(n_));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::domain_error("Graph: vertex out of range");
}

Bitset Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    Bitset b = adj_[v];
    b.set(v);
    return b;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::domain_error("Graph: no loops");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[u].test(v)) return;
    adj_[u].reset(v);
    adj_[v].reset(u);
    --edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, adj_[v].count());
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, adj_[v].count());
    return d;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<std::vector<int>> comps;
    Bitset seen(n_);
    for (int s = 0; s < n_; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        for (std::size_t head = 0; head < comp.size(); ++head) {
            adj_[comp[head]].for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const { return connected_components().size() <= 1; }

bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
}

namespace {

std::int64_t count_cliques_rec(const Graph& g, const Bitset& cand, int remaining) {
    if (remaining == 1) return cand.count();
    std::int64_t total = 0;
    for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
        Bitset next = cand & g.neighbors(v);
        // Only extend upward to count each subset once.
        for (int w = next.find_first(); w >= 0 && w <= v; w = next.find_next(w))
            next.reset(w);
        if (next.count() >= remaining - 1)
            total += count_cliques_rec(g, next, remaining - 1);
    }
    return total;
}

}  // namespace

std::int64_t count_cliques(const Graph& g, int t) {
    if (t < 1) throw std::domain_error("count_cliques: t must be >= 1");
    int n = g.vertex_count();
    if (t > n) return 0;
    if (t == 1) return n;
    if (t == 2) return g.edge_count();
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    return count_cliques_rec(g, all, t);
}

int pair_weight(const Graph& g, int x, int y) {
    if (x == y) throw std::domain_error("pair_weight: x and y must differ");
    return Bitset::intersection_count(g.neighbors(x), g.neighbors(y));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.vertex_count() + g2.vertex_count());
    int off = g1.vertex_count();
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(u + off, v + off);
    return g;
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
    Graph out(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph complement_on_subset(const Graph& g, std::span<const int> s) {
    Graph out(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

EdgeWeightTable::EdgeWeightTable(const Graph& g) : n_(g.vertex_count()) {
    w_.assign(static_cast<std::size_t>(binomial(n_, 2)), 0);
    for (int y = 1; y < n_; ++y)
        for (int x = 0; x < y; ++x)
            w_[static_cast<std::size_t>(colex_rank_pair(x, y))] = pair_weight(g, x, y);
}

int EdgeWeightTable::weight(int x, int y) const {
    if (x == y || x < 0 || y < 0 || x >= n_ || y >= n_)
        throw std::domain_error("EdgeWeightTable: bad pair");
    return w_[static_cast<std::size_t>(colex_rank_pair(x, y))];
}

}  // namespace ktmax
