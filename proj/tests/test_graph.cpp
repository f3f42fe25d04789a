#include <doctest.h>

#include <map>

#include "lambda_lab/errors.hpp"
#include "lambda_lab/graph.hpp"
#include "lambda_lab/solver.hpp"
#include "oracle.hpp"

using namespace lambda_lab;

namespace {

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

void check_invariants(const Graph& g) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        auto nb = g.neighbors(u);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        for (Vertex v : nb) {
            CHECK(v != u);
            CHECK(g.adjacent(v, u));
        }
    }
}

// Maps every vertex of a through f and checks that it is an isomorphism onto b.
template <class F>
bool is_isomorphism(const Graph& a, const Graph& b, F f) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> img(a.vertex_count());
    std::set<Vertex> seen;
    for (Vertex v = 0; v < a.vertex_count(); ++v) {
        auto w = b.find(f(a.coord(v)));
        if (!w) return false;
        img[v] = *w;
        seen.insert(*w);
    }
    if (seen.size() != a.vertex_count()) return false;
    for (auto [u, v] : a.edges())
        if (!b.adjacent(img[u], img[v])) return false;
    return true;
}

}  // namespace

TEST_CASE("paths") {
    CHECK(path(2).vertex_count() == 2);
    CHECK(path(2).edge_count() == 1);
    auto p5 = path(5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.degree(0) == 1);
    CHECK(p5.degree(4) == 1);
    CHECK_FALSE(p5.has_coords());
    CHECK(path(1).vertex_count() == 1);
    CHECK(path(1).edge_count() == 0);
    CHECK_THROWS_AS(path(0), InvalidSize);
}

TEST_CASE("cycles") {
    CHECK(cycle(3).edge_count() == 3);
    auto c5 = cycle(5);
    CHECK(c5.edge_count() == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK_THROWS_AS(cycle(2), InvalidSize);
}

TEST_CASE("direct product examples") {
    auto g = direct_product(path(2), path(2));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(connected_components(g).size() == 2);

    auto p33 = direct_product(path(3), path(3));
    auto center = p33.find({1, 1});
    REQUIRE(center);
    CHECK(p33.degree(*center) == 4);
    for (Vertex v = 0; v < p33.vertex_count(); ++v) {
        auto [i, j] = p33.coord(v);
        CHECK(p33.degree(v) == path(3).degree(i) * path(3).degree(j));
    }

    // edge count of P4 x C5 enumerated from the definition
    auto e = oracle::direct_edges(oracle::path_matrix(4), oracle::cycle_matrix(5));
    CHECK(e.size() == 30);
    CHECK(direct_product(path(4), cycle(5)).edge_count() == 30);
    CHECK_THROWS_AS(direct_product(Graph{}, path(2)), InvalidSize);
}

TEST_CASE("vertex ids are row-major and coordinates round-trip") {
    auto g = direct_product(path(3), cycle(4));
    REQUIRE(g.shape());
    CHECK(g.shape()->rows == 3);
    CHECK(g.shape()->cols == 4);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto c = g.coord(v);
        CHECK(static_cast<Vertex>(c.i * 4 + c.j) == v);
        CHECK(g.find(c) == v);
    }
    CHECK(g.row(1).size() == 4);
    CHECK(g.column(2).size() == 3);
}

TEST_CASE("product identities on all small factor pairs") {
    std::vector<std::pair<Graph, oracle::Matrix>> factors;
    for (int m = 1; m <= 8; ++m) factors.emplace_back(path(m), oracle::path_matrix(m));
    for (int n = 3; n <= 8; ++n) factors.emplace_back(cycle(n), oracle::cycle_matrix(n));
    for (const auto& [a, ma] : factors) {
        for (const auto& [b, mb] : factors) {
            auto g = direct_product(a, b);
            CHECK(oracle::edge_set(g) == oracle::direct_edges(ma, mb));
            CHECK(g.edge_count() == 2 * a.edge_count() * b.edge_count());
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                auto [i, j] = g.coord(v);
                CHECK(g.degree(v) == a.degree(i) * b.degree(j));
            }
            check_invariants(g);
        }
    }
}

TEST_CASE("cartesian product") {
    auto c4 = cartesian_product(path(2), path(2));
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(cartesian_product(path(3), path(3)).edge_count() == 12);
    auto h = cycle(5);
    auto id = cartesian_product(path(1), h);
    CHECK(id.vertex_count() == 5);
    CHECK(oracle::edge_set(id) == oracle::edge_set(h));
    CHECK_THROWS_AS(cartesian_product(path(2), Graph{}), InvalidSize);
}

TEST_CASE("connected components") {
    auto p33 = connected_components(direct_product(path(3), path(3)));
    REQUIRE(p33.size() == 2);
    CHECK(p33.components[0].graph.vertex_count() == 5);
    CHECK(p33.components[1].graph.vertex_count() == 4);
    CHECK(p33.components[0].parity == Parity::even);
    CHECK(p33.components[1].parity == Parity::odd);

    CHECK(connected_components(direct_product(path(4), cycle(7))).size() == 1);
    CHECK(connected_components(direct_product(path(4), cycle(7))).components[0].parity == Parity::mixed);
    CHECK(connected_components(direct_product(path(4), cycle(6))).size() == 2);
}

TEST_CASE("components partition the vertex set and are connected") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_product(rng);
        auto parts = connected_components(g);
        std::vector<int> owner(g.vertex_count(), -1);
        for (std::size_t c = 0; c < parts.size(); ++c) {
            for (Vertex v : parts.components[c].to_parent) {
                CHECK(owner[v] == -1);
                owner[v] = static_cast<int>(c);
            }
            auto d = oracle::floyd(parts.components[c].graph);
            for (const auto& row : d)
                for (int x : row) CHECK(x < oracle::kInf);
        }
        for (int o : owner) CHECK(o >= 0);
        CHECK(std::find(parts.components[0].to_parent.begin(), parts.components[0].to_parent.end(), 0u) !=
              parts.components[0].to_parent.end());
    }
}

TEST_CASE("P_m x P_2 splits into two paths") {
    for (int m = 2; m <= 9; ++m) {
        auto parts = connected_components(direct_product(path(m), path(2)));
        REQUIRE(parts.size() == 2);
        for (const auto& c : parts.components) {
            CHECK(c.graph.vertex_count() == static_cast<std::size_t>(m));
            CHECK(c.graph.edge_count() == static_cast<std::size_t>(m - 1));
            CHECK(c.graph.max_degree() <= 2);
        }
    }
}

TEST_CASE("P_m x C_n is connected exactly when n is odd") {
    for (int m = 2; m <= 6; ++m)
        for (int n = 3; n <= 12; ++n) {
            auto parts = connected_components(direct_product(path(m), cycle(n)));
            CHECK(parts.size() == (n % 2 ? 1u : 2u));
        }
}

TEST_CASE("the two components of P_m x C_n (n even) are isomorphic") {
    for (int m = 2; m <= 5; ++m)
        for (int n = 4; n <= 10; n += 2) {
            auto parts = connected_components(direct_product(path(m), cycle(n)));
            REQUIRE(parts.size() == 2);
            const auto& a = parts.components[0].graph;
            const auto& b = parts.components[1].graph;
            CHECK(degree_sequence(a) == degree_sequence(b));
            CHECK(is_isomorphism(a, b, [n](GridCoord c) { return GridCoord{c.i, (c.j + 1) % n}; }));
            if (a.vertex_count() <= 30)
                CHECK(solve_exact(a, 1, 1).span == solve_exact(b, 1, 1).span);
        }
}

TEST_CASE("unrolling: component 0 of P_m x C_2n is P_m x C_n for odd n") {
    for (int m = 2; m <= 5; ++m)
        for (int n : {3, 5, 7}) {
            auto small = direct_product(path(m), cycle(n));
            auto big = connected_components(direct_product(path(m), cycle(2 * n))).components[0].graph;
            CHECK(big.vertex_count() == small.vertex_count());
            CHECK(big.edge_count() == small.edge_count());
            CHECK(is_isomorphism(big, small, [n](GridCoord c) { return GridCoord{c.i, c.j % n}; }));
            CHECK(solve_exact(big, 1, 1).span == solve_exact(small, 1, 1).span);
        }
}

TEST_CASE("distance") {
    CHECK(distance(path(5), 0, 4) == 4u);
    CHECK(distance(cycle(6), 0, 3) == 3u);
    auto g = direct_product(path(3), path(3));
    auto a = g.find({0, 0}), b = g.find({0, 1});
    CHECK_FALSE(distance(g, *a, *b).has_value());
    CHECK_THROWS_AS(distance(path(3), 0, 7), OutOfRange);
}

TEST_CASE("BFS distances agree with Floyd-Warshall") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = oracle::random_product(rng);
        auto d = oracle::floyd(g);
        for (Vertex s = 0; s < g.vertex_count(); ++s) {
            auto bfs = distances_from(g, s);
            for (Vertex t = 0; t < g.vertex_count(); ++t)
                CHECK(bfs[t] == (d[s][t] >= oracle::kInf ? -1 : d[s][t]));
        }
    }
}

TEST_CASE("square graph") {
    auto sq = square_graph(path(3));
    CHECK(sq.edge_count() == 3);
    auto k5 = square_graph(cycle(5));
    CHECK(k5.edge_count() == 10);
    auto c6 = square_graph(cycle(6));
    auto d = oracle::floyd(cycle(6));
    for (Vertex v = 0; v < 6; ++v) {
        std::size_t near = 0;
        for (Vertex w = 0; w < 6; ++w) near += d[v][w] >= 1 && d[v][w] <= 2;
        CHECK(c6.degree(v) == near);
        CHECK(near == 4);
    }
}

TEST_CASE("square graph contains the original edges and matches distances") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = oracle::random_product(rng);
        auto sq = square_graph(g);
        for (auto [u, v] : g.edges()) CHECK(sq.adjacent(u, v));
        auto d = oracle::floyd(g);
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) CHECK(sq.adjacent(u, v) == (d[u][v] <= 2));
        CHECK(sq.coords() == g.coords());
    }
}

TEST_CASE("graph construction rejects malformed adjacency") {
    using Adjacency = std::vector<std::vector<Vertex>>;
    CHECK_THROWS_AS(Graph(Adjacency{{1}, {}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(Adjacency{{0}}), InvalidArgument);
    std::vector<std::pair<Vertex, Vertex>> bad{{0, 5}};
    CHECK_THROWS(Graph::from_edges(3, bad));
    auto g = Graph({{2, 1, 1}, {0}, {0}});
    CHECK(g.neighbors(0).size() == 2);
    CHECK(g.neighbors(0)[0] == 1);
}

TEST_CASE("induced subgraph keeps coordinates and renumbers by parent id") {
    auto g = direct_product(path(4), cycle(4));
    std::vector<Vertex> pick{9, 2, 7}, parent;
    auto s = induced_subgraph(g, pick, &parent);
    CHECK(parent == std::vector<Vertex>{2, 7, 9});
    for (Vertex v = 0; v < s.vertex_count(); ++v) CHECK(s.coord(v) == g.coord(parent[v]));
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 0; v < 3; ++v) CHECK(s.adjacent(u, v) == g.adjacent(parent[u], parent[v]));
}
