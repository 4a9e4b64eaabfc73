#include "doctest.h"

#include <algorithm>

#include "ktmax/cluster.hpp"
#include "ktmax/colex.hpp"
#include "ktmax/graph6.hpp"
#include "test_helpers.hpp"

using namespace ktmax;
namespace tst = ktmax::testing;

namespace {

// Two tight vertices {0,1} with S = {2,3}, one missing S-edge, two blue
// edges leaving S. Hand-checkable end to end.
Graph six_vertex_example() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 5);
    return g;
}

const Cluster& find_cluster_with_t(const std::vector<Cluster>& cls, std::vector<int> t) {
    for (const Cluster& cl : cls)
        if (cl.t_vertices == t) return cl;
    REQUIRE(false);
    return cls.front();
}

}  // namespace

TEST_CASE("tight edges") {
    for (int r : {3, 5, 8}) {
        Graph k = Graph::complete(r + 1);
        CHECK(tight_edges(k, r).size() == static_cast<std::size_t>(k.edge_count()));
    }

    // K_4 minus one edge: only the edge between the two degree-3 vertices is tight.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    auto tight = tight_edges(g, 3);
    REQUIRE(tight.size() == 1);
    CHECK(tight[0] == std::pair{0, 1});

    CHECK(tight_edges(Graph::complete(3), 3).empty());
    CHECK_THROWS_AS(tight_edges(Graph::complete(5), 3), std::domain_error);
}

TEST_CASE("clusters of the six-vertex example") {
    Graph g = six_vertex_example();
    std::vector<Cluster> cls = clusters(g, 3);
    // All four vertices of the near-K_4 have degree 3; {0,1} share a closed
    // neighborhood while 2 and 3 sit in singleton clusters.
    REQUIRE(cls.size() == 3);

    const Cluster& main = find_cluster_with_t(cls, {0, 1});
    CHECK(main.s_vertices == std::vector<int>{2, 3});
    CHECK(main.red == Graph::complete(2));
    CHECK(main.blue_edges() == 2);
    CHECK(main.t() == 2);
    CHECK(main.s() == 2);

    const Cluster& single = find_cluster_with_t(cls, {2});
    CHECK(single.s() == 3);
    CHECK(single.red.edge_count() == 2);  // complement of one edge on {0,1,4}
}

TEST_CASE("clusters of complete and low-degree graphs") {
    std::vector<Cluster> cls = clusters(Graph::complete(9), 8);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].t() == 9);
    CHECK(cls[0].s() == 0);

    CHECK(clusters(Graph::complete(3), 3).empty());
    CHECK(clusters(Graph(5), 4).empty());
}

TEST_CASE("cluster well-formedness on planted instances") {
    PlantedClusterGenerator gen(987654321);
    for (int i = 0; i < 300; ++i) {
        auto inst = gen.next(i % 2 == 0);
        const Cluster& cl = inst.cluster;
        CHECK(cl.t() + cl.s() == inst.r + 1);
        CHECK(cl.red.min_degree() >= 1);
        Bitset closed = inst.graph.closed_neighborhood(cl.t_vertices[0]);
        for (int v : cl.t_vertices) {
            CHECK(inst.graph.degree(v) == inst.r);
            CHECK(inst.graph.closed_neighborhood(v) == closed);
        }
        for (auto [u, v] : cl.blue) {
            bool u_in_s = std::binary_search(cl.s_vertices.begin(), cl.s_vertices.end(), u);
            bool v_in_s = std::binary_search(cl.s_vertices.begin(), cl.s_vertices.end(), v);
            CHECK(u_in_s != v_in_s);
        }
        // Blue edges never exceed weight s-2.
        for (auto [u, v] : cl.blue) CHECK(pair_weight(inst.graph, u, v) <= cl.s() - 2);
    }
}

TEST_CASE("fold on the six-vertex example") {
    Graph g = six_vertex_example();
    std::vector<Cluster> cls = clusters(g, 3);
    const Cluster& main = find_cluster_with_t(cls, {0, 1});

    CHECK(count_cliques(g, 3) == 2);
    Graph folded = fold(g, main);
    CHECK(count_cliques(folded, 3) == 4);
    CHECK(folded.edge_count() == g.edge_count() - (main.blue_edges() - main.red_edges()));
    CHECK(folded.max_degree() <= 3);
    CHECK(count_cliques(folded, 4) == 1);
    CHECK(folded.degree(4) == 0);
    CHECK(folded.degree(5) == 0);
}

TEST_CASE("fold refuses when blue edges are scarce") {
    // Attach a single blue edge to a cluster whose red graph has two edges.
    Graph g(7);
    // T = {0}, S = {1,2,3}: vertex 0 adjacent to all of S.
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    // S internally: only 1-2 present, so R = {1-3, 2-3} has two edges.
    g.add_edge(1, 2);
    // Blue: one edge out of S.
    g.add_edge(1, 4);
    // Pad degrees so that 0 has degree r = 3.
    std::vector<Cluster> cls = clusters(g, 3);
    const Cluster& cl = find_cluster_with_t(cls, {0});
    REQUIRE(cl.red_edges() == 2);
    REQUIRE(cl.blue_edges() == 1);
    CHECK_THROWS_AS(fold(g, cl), std::domain_error);
}

TEST_CASE("fold is the identity on a complete component") {
    Graph k = Graph::complete(5);
    std::vector<Cluster> cls = clusters(k, 4);
    REQUIRE(cls.size() == 1);
    CHECK(fold(k, cls[0]) == k);
}

TEST_CASE("folding gain is at least Q on planted instances") {
    PlantedClusterGenerator gen(13579);
    for (int i = 0; i < 500; ++i) {
        auto inst = gen.next(/*require_blue_at_least_red=*/true);
        Graph folded = fold(inst.graph, inst.cluster);
        std::int64_t gain = count_cliques(folded, 3) - count_cliques(inst.graph, 3);
        CHECK(gain >= q_of_red_graph(inst.cluster.red, inst.r));
    }
}

TEST_CASE("Q on named red graphs") {
    for (int r : {5, 8, 11})
        for (int s = 0; s <= r; ++s) CHECK(q_of_red_graph(Graph(s), r) == 0);

    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    for (int r : {3, 8, 10}) CHECK(q_of_red_graph(p3, r) == 2 * r - 5);

    Graph star_plus_edge(6);  // K_{1,3} and a separate edge, s = 6
    star_plus_edge.add_edge(0, 1);
    star_plus_edge.add_edge(0, 2);
    star_plus_edge.add_edge(0, 3);
    star_plus_edge.add_edge(4, 5);
    for (int r : {8, 9}) CHECK(q_of_red_graph(star_plus_edge, r) == 4 * r - 23);

    for (int s : {2, 4, 6, 8}) {
        Graph matching(s);
        for (int i = 0; i < s / 2; ++i) matching.add_edge(2 * i, 2 * i + 1);
        for (int r = s; r <= s + 4; ++r)
            CHECK(q_of_red_graph(matching, r) == static_cast<std::int64_t>(r + 1 - s) * s / 2);
    }
}

TEST_CASE("blue triangle bound formula") {
    CHECK(blue_triangle_bound(Graph::complete(2), 2) == 0);
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(blue_triangle_bound(p3, 3) == 2);
    CHECK_THROWS_AS(blue_triangle_bound(p3, 4), std::domain_error);
}

TEST_CASE("blue triangles never exceed the bound on planted instances") {
    PlantedClusterGenerator gen(24680);
    for (int i = 0; i < 500; ++i) {
        auto inst = gen.next(i % 2 == 0);
        std::int64_t count = count_blue_triangles(inst.graph, inst.cluster);
        CHECK(count <= blue_triangle_bound(inst.cluster.red, inst.cluster.s()));
    }
}

TEST_CASE("excluded red graph verdicts") {
    auto make_cluster = [](int r, const Graph& red, int blue_edges) {
        Cluster cl;
        int s = red.vertex_count();
        for (int i = 0; i < r + 1 - s; ++i) cl.t_vertices.push_back(i);
        for (int i = 0; i < s; ++i) cl.s_vertices.push_back(r + 1 - s + i);
        cl.red = red;
        for (int i = 0; i < blue_edges; ++i) cl.blue.emplace_back(cl.s_vertices[0], 100 + i);
        return cl;
    };

    // e(R) = 4 at r = 8: excluded by the four-edge rule.
    Graph four_edges(6);
    four_edges.add_edge(0, 1);
    four_edges.add_edge(0, 2);
    four_edges.add_edge(0, 3);
    four_edges.add_edge(4, 5);
    ExclusionVerdict v = excluded_red_predicate(make_cluster(8, four_edges, 4), 8);
    CHECK(std::count(v.citations.begin(), v.citations.end(), "thm:e=4") == 1);

    // e(R) = 3 at r = 7.
    Graph three_edges(6);
    three_edges.add_edge(0, 1);
    three_edges.add_edge(2, 3);
    three_edges.add_edge(4, 5);
    v = excluded_red_predicate(make_cluster(7, three_edges, 3), 7);
    CHECK(std::count(v.citations.begin(), v.citations.end(), "thm:e=3") == 1);

    // r=8, e(R)=5, s=6, Delta(R)=3, t=3: nothing applies.
    Graph r5(6);
    r5.add_edge(0, 1);
    r5.add_edge(0, 2);
    r5.add_edge(0, 3);
    r5.add_edge(1, 2);
    r5.add_edge(4, 5);
    REQUIRE(r5.max_degree() == 3);
    v = excluded_red_predicate(make_cluster(8, r5, 5), 8);
    CHECK(!v.excluded());
}

TEST_CASE("compression moves private neighbors") {
    BipartiteSystem b;
    b.h = Graph(2);
    b.y_adj.assign(2, Bitset(2));
    b.y_adj[0].set(0);  // x adjacent to H-vertex 0
    b.y_adj[1].set(1);  // y adjacent to H-vertex 1
    BipartiteSystem after = compress(b, 0, 1);
    CHECK(after.y_adj[0].none());
    CHECK(after.y_adj[1].test(0));
    CHECK(after.y_adj[1].test(1));
    CHECK(after.edge_count() == 2);

    // Nested neighborhoods: compression changes nothing.
    BipartiteSystem nested;
    nested.h = Graph(3);
    nested.y_adj.assign(2, Bitset(3));
    nested.y_adj[0].set(0);
    nested.y_adj[1].set(0);
    nested.y_adj[1].set(1);
    BipartiteSystem same = compress(nested, 0, 1);
    CHECK(same.y_adj[0] == nested.y_adj[0]);
    CHECK(same.y_adj[1] == nested.y_adj[1]);

    CHECK_THROWS_AS(compress(b, 0, 0), std::domain_error);
    CHECK_THROWS_AS(compress(b, 0, 5), std::domain_error);
}

TEST_CASE("psi and d2 on tiny systems") {
    BipartiteSystem b;
    b.h = Graph(2);
    b.y_adj.assign(1, Bitset(2));
    b.y_adj[0].set(0);
    b.y_adj[0].set(1);
    CHECK(psi(b) == 1);

    b.h.add_edge(0, 1);
    CHECK(psi(b) == 0);

    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(d2(star) == 12);
}

TEST_CASE("compression monotonicity on generated systems") {
    BipartiteSystemGenerator gen(112233);
    for (int i = 0; i < 500; ++i) {
        auto inst = gen.next();
        BipartiteSystem after = compress(inst.system, inst.x, inst.y);
        CHECK(psi(after) >= psi(inst.system));
        CHECK(d2(after) > d2(inst.system));
        for (int v = 0; v < inst.system.x_count(); ++v)
            CHECK(after.x_degree(v) == inst.system.x_degree(v));
    }
}
