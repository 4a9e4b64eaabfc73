#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ktmax/bitset.hpp"

namespace ktmax {

/// Simple graph on vertices 0..n-1 with per-vertex adjacency bitsets.
/// Adjacency is kept symmetric and loop-free by construction. Library
/// operations never mutate their inputs; edits return new graphs, so values
/// can be shared freely between threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph complete(int n);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }
    int degree(int v) const {
        check_vertex(v);
        return adj_[v].count();
    }
    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    /// N[v] = N(v) plus v itself.
    Bitset closed_neighborhood(int v) const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;

    int max_degree() const;
    int min_degree() const;
    std::vector<std::vector<int>> connected_components() const;
    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::int64_t edge_count_ = 0;
    std::vector<Bitset> adj_;
};

/// k_t(g): the number of t-vertex subsets inducing complete subgraphs.
/// k_1 = n, k_2 = e(g); zero whenever t > n.
std::int64_t count_cliques(const Graph& g, int t);

/// w(xy) = |N(x) ∩ N(y)|; for an edge, the number of triangles through it.
int pair_weight(const Graph& g, int x, int y);

Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Induced subgraph on `s`, relabeled 0..|s|-1 in the order given.
Graph induced_subgraph(const Graph& g, std::span<const int> s);

/// Complement of the induced subgraph on `s`, on |s| vertices.
Graph complement_on_subset(const Graph& g, std::span<const int> s);

/// Pairwise weights w(xy) for all vertex pairs of a graph.
class EdgeWeightTable {
public:
    explicit EdgeWeightTable(const Graph& g);
    int weight(int x, int y) const;
    int vertex_count() const { return n_; }

private:
    int n_;
    std::vector<int> w_;  // upper triangle, colex pair order
};

}  // namespace ktmax
