#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ktmax/graph.hpp"

namespace ktmax {

/// A maximal tight clique T with its satellite data: S = the common
/// neighborhood of T (so |T ∪ S| = r+1), the red graph R = complement of the
/// induced graph on S, and the blue edges from S to the rest of the graph.
/// Vertices of T all have degree exactly r and closed neighborhood T ∪ S.
struct Cluster {
    std::vector<int> t_vertices;             // the tight clique, ascending
    std::vector<int> s_vertices;             // common neighborhood, ascending
    Graph red;                               // complement of G[S], on |S| vertices
    std::vector<std::pair<int, int>> blue;  // edges (s, outside), s in S
    int t() const { return static_cast<int>(t_vertices.size()); }
    int s() const { return static_cast<int>(s_vertices.size()); }
    std::int64_t red_edges() const { return red.edge_count(); }
    std::int64_t blue_edges() const { return static_cast<std::int64_t>(blue.size()); }
};

/// Edges xy with w(xy) = r-1, the maximum possible under Δ(g) <= r.
std::vector<std::pair<int, int>> tight_edges(const Graph& g, int r);

/// All clusters of g: the degree-r vertices grouped by closed neighborhood.
/// Tightness of an edge forces equal closed neighborhoods, so the groups are
/// exactly the maximal tight cliques; degree-r vertices without a tight edge
/// form singleton clusters.
std::vector<Cluster> clusters(const Graph& g, int r);

/// Folding G_T: all pairs inside S become edges and all blue edges are
/// removed, turning T ∪ S into a K_{r+1}. Requires e(B) >= e(R); refuses
/// otherwise since folding would then add edges on balance.
Graph fold(const Graph& g, const Cluster& cl);

/// Q(R) = (r+1-s) e(R) + k_3(R) - Σ_v C(d_R(v),2), a lower bound on the
/// triangle gain of folding; s is the vertex count of R.
std::int64_t q_of_red_graph(const Graph& red, int r);

/// Triangles of g containing two blue edges of the cluster.
std::int64_t count_blue_triangles(const Graph& g, const Cluster& cl);

/// Σ_v C(d_R(v),2) + (1/2) Σ_v d_R(v)(s-1-d_R(v)); the second sum is always
/// even, so the value is computed doubled and halved exactly.
std::int64_t blue_triangle_bound(const Graph& red, int s);

/// Which exclusion rule (if any) certifies that a connected graph carrying
/// this cluster is not extremal. Identifiers are stable strings.
struct ExclusionVerdict {
    std::vector<std::string> citations;  // empty means "none"
    bool excluded() const { return !citations.empty(); }
};
ExclusionVerdict excluded_red_predicate(const Cluster& cl, int r);

/// Bipartite graph B between the vertex set of a fixed graph H and a set Y,
/// used by the compression argument. Edges are stored per Y vertex as
/// bitsets over V(H).
struct BipartiteSystem {
    Graph h;
    std::vector<Bitset> y_adj;  // y_adj[y] ⊆ V(H)

    int x_count() const { return h.vertex_count(); }
    int y_count() const { return static_cast<int>(y_adj.size()); }
    int x_degree(int x) const;
    std::int64_t edge_count() const;
};

/// Compression B_{x→y}: the edges from x to N(x) \ N(y) move to y.
/// Degrees on the V(H) side are unchanged.
BipartiteSystem compress(const BipartiteSystem& b, int x, int y);

/// ψ_H(B) = Σ_{v∈V(H)} C(d_B(v),2) + Σ_{y∈Y} #{pairs i<j in N_B(y), ij ∉ E(H)}.
std::int64_t psi(const BipartiteSystem& b);

/// d_2 = Σ d(v)^2 over all vertices.
std::int64_t d2(const Graph& g);
std::int64_t d2(const BipartiteSystem& b);

/// Deterministic generator of graphs that contain a known cluster: plants
/// K_{r+1} minus a random red graph with δ(R) >= 1, then attaches blue edges
/// within the degree budget d_B(u) <= d_R(u) and sprinkles edges among the
/// outside vertices, all respecting Δ <= r.
class PlantedClusterGenerator {
public:
    struct Instance {
        Graph graph;
        Cluster cluster;
        int r;
    };

    explicit PlantedClusterGenerator(std::uint64_t seed, int r_min = 4, int r_max = 9)
        : rng_(seed), r_min_(r_min), r_max_(r_max) {}

    /// Next instance; when require_blue_at_least_red is set, instances are
    /// drawn so that e(B) >= e(R) (the folding precondition).
    Instance next(bool require_blue_at_least_red);

private:
    std::mt19937_64 rng_;
    int r_min_;
    int r_max_;
};

/// Deterministic generator of bipartite systems with a designated pair of
/// Y-vertices whose neighborhoods are incomparable.
class BipartiteSystemGenerator {
public:
    struct Instance {
        BipartiteSystem system;
        int x;  // both in Y, neighborhoods incomparable
        int y;
    };

    explicit BipartiteSystemGenerator(std::uint64_t seed) : rng_(seed) {}
    Instance next();

private:
    std::mt19937_64 rng_;
};

}  // namespace ktmax
