#include <doctest.h>

#include <stdexcept>

#include "tpc/graph.hpp"

using namespace tpc;

TEST_CASE("graph construction normalizes and indexes edges") {
    Graph g(4, {{2, 0}, {0, 1}, {3, 2}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.edge_index(3, 2) == 2);
    CHECK(g.edge_index(1, 3) == -1);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.min_degree() == 1);
}

TEST_CASE("neighbor and incident-edge lists stay parallel and ascending") {
    Graph g(5, {{4, 2}, {2, 0}, {2, 1}, {3, 2}});
    CHECK(g.neighbors(2) == std::vector<int>{0, 1, 3, 4});
    for (size_t i = 0; i < g.neighbors(2).size(); ++i) {
        Edge e = g.edges()[g.incident_edges(2)[i]];
        CHECK(e == make_edge(2, g.neighbors(2)[i]));
    }
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("is_complete") {
    CHECK(Graph(1, {}).is_complete());
    CHECK(Graph(3, {{0, 1}, {0, 2}, {1, 2}}).is_complete());
    CHECK_FALSE(Graph(3, {{0, 1}, {0, 2}}).is_complete());
    CHECK(Graph(2, {{0, 1}}).is_complete());
}

TEST_CASE("serialize then parse is the identity") {
    Graph g(6, {{0, 5}, {1, 2}, {0, 1}, {3, 4}});
    Graph back = parse_graph(serialize_graph(g));
    CHECK(back == g);
}

TEST_CASE("parser accepts comments and blank lines") {
    Graph g = parse_graph("# landmark u1 0\n\n3 2\n# interior note\n0 1\n 1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parser reports offending input") {
    CHECK_THROWS_WITH_AS(parse_graph(""), "graph parse error: empty input", std::runtime_error);
    CHECK_THROWS_AS(parse_graph("2 1\n1 0\n"), std::runtime_error);   // u < v required
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), std::runtime_error);   // edge count mismatch
    CHECK_THROWS_AS(parse_graph("3 1\n0 1 9\n"), std::runtime_error); // trailing token
    CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), std::runtime_error);   // self-loop
}
