#include <doctest.h>

#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "tpc/families.hpp"
#include "tpc/structure.hpp"

using namespace tpc;

namespace {

bool bipartite(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::map<std::string, int> landmark_map(const GeneratedGraph& gg) {
    std::map<std::string, int> m;
    for (const auto& lm : gg.landmarks) m[lm.name] = lm.vertex;
    return m;
}

}  // namespace

TEST_CASE("basic family shapes") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
    CHECK(complete_multipartite_graph({2, 2, 2}).edge_count() == 12);
    CHECK(star_graph(7).max_degree() == 6);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(star_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite_graph({3}), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite_graph({2, 0}), std::invalid_argument);
}

TEST_CASE("doubled-segment ring family: counts, structure, landmarks") {
    for (int k : {2, 3}) {
        GeneratedGraph gg = two_ear_cycle(k);
        const Graph& g = gg.graph;
        int s = 1 << k;
        CHECK(g.vertex_count() == 6 * s - 2);
        CHECK(g.edge_count() == 6 * s);
        CHECK(bipartite(g));
        CHECK(is_two_connected(g));
        // exactly four degree-3 corners, everything else degree 2
        int deg3 = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK((g.degree(v) == 2 || g.degree(v) == 3));
            if (g.degree(v) == 3) ++deg3;
        }
        CHECK(deg3 == 4);

        auto lm = landmark_map(gg);
        REQUIRE(lm.size() == 16);
        for (int i = 1; i <= 4; ++i) {
            std::string u = "u" + std::to_string(i);
            REQUIRE(lm.count(u));
            // each corner's three neighbors carry its primed names
            std::set<int> named{lm.at(u + "p"), lm.at(u + "pp"), lm.at(u + "ppp")};
            const auto& nb = g.neighbors(lm.at(u));
            CHECK(std::set<int>(nb.begin(), nb.end()) == named);
        }
        // the two doubled segments join u1-u2 and u3-u4
        CHECK(g.has_edge(lm.at("u1"), lm.at("u1ppp")));
        CHECK(g.has_edge(lm.at("u2"), lm.at("u2ppp")));
        CHECK(g.has_edge(lm.at("u3"), lm.at("u3ppp")));
        CHECK(g.has_edge(lm.at("u4"), lm.at("u4ppp")));
    }
    CHECK_THROWS_AS(two_ear_cycle(1), std::invalid_argument);
}

TEST_CASE("three-short-ears ring family: counts and degrees") {
    for (int t : {1, 2}) {
        GeneratedGraph gg = three_ear_cycle(t);
        const Graph& g = gg.graph;
        CHECK(g.vertex_count() == 18 * t + 6);
        CHECK(g.edge_count() == 18 * t + 9);
        CHECK(is_two_connected(g));
        int deg4 = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK((g.degree(v) == 2 || g.degree(v) == 4));
            if (g.degree(v) == 4) ++deg4;
        }
        CHECK(deg4 == 3);  // the three corners carry two ears each
        CHECK(gg.landmarks.size() == 3);
    }
    CHECK(three_ear_cycle(1).graph.vertex_count() == 24);
    CHECK(three_ear_cycle(1).graph.edge_count() == 27);
    CHECK_THROWS_AS(three_ear_cycle(0), std::invalid_argument);
}

TEST_CASE("random families meet their postconditions") {
    for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
        Graph g = random_connected_graph(9, 14, seed);
        CHECK(g.vertex_count() == 9);
        CHECK(g.edge_count() == 14);
        CHECK(is_connected(g));

        Graph t = random_connected_graph(7, 6, seed);
        CHECK(is_connected(t));
        CHECK(t.edge_count() == 6);  // a tree when m = n-1

        Graph full = random_connected_graph(5, 10, seed);
        CHECK(full.is_complete());

        Graph b = random_two_connected_graph(8, seed);
        CHECK(is_two_connected(b));

        Graph d = random_min_degree_graph(12, 4, seed);
        CHECK(d.min_degree() >= 4);
        CHECK(is_connected(d));
    }
    CHECK_THROWS_AS(random_connected_graph(4, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_connected_graph(4, 7, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_min_degree_graph(5, 5, 0), std::invalid_argument);
}

TEST_CASE("same spec and seed give byte-identical output") {
    for (const char* kind : {"random_connected", "random_2connected", "random_min_degree"}) {
        FamilySpec spec;
        spec.kind = kind;
        spec.seed = 99;
        if (spec.kind == "random_connected")
            spec.parameters = {10, 16};
        else if (spec.kind == "random_2connected")
            spec.parameters = {10};
        else
            spec.parameters = {10, 3};
        CHECK(serialize_generated(generate(spec)) == serialize_generated(generate(spec)));
    }
}

TEST_CASE("generate dispatches to the same graphs as the direct builders") {
    CHECK(generate({"path", {6}, {}}).graph == path_graph(6));
    CHECK(generate({"cycle", {5}, {}}).graph == cycle_graph(5));
    CHECK(generate({"complete", {4}, {}}).graph == complete_graph(4));
    CHECK(generate({"complete_bipartite", {2, 3}, {}}).graph == complete_bipartite_graph(2, 3));
    CHECK(generate({"complete_multipartite", {1, 2, 2}, {}}).graph ==
          complete_multipartite_graph({1, 2, 2}));
    CHECK(generate({"star", {5}, {}}).graph == star_graph(5));
    CHECK(generate({"prop3", {2}, {}}).graph == two_ear_cycle(2).graph);
    CHECK(generate({"prop4", {1}, {}}).graph == three_ear_cycle(1).graph);
    CHECK(generate({"random_connected", {6, 8}, 7}).graph == random_connected_graph(6, 8, 7));
    CHECK(generate({"random_2connected", {6}, 7}).graph == random_two_connected_graph(6, 7));
    CHECK(generate({"random_min_degree", {8, 3}, 7}).graph == random_min_degree_graph(8, 3, 7));
    CHECK_THROWS_AS(generate({"moebius", {5}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"cycle", {5, 5}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({"prop3", {1}, {}}), std::invalid_argument);
}

TEST_CASE("landmark lines survive serialization and do not disturb parsing") {
    GeneratedGraph gg = two_ear_cycle(2);
    std::string text = serialize_generated(gg);
    Graph back = parse_graph(text);
    CHECK(back == gg.graph);
    auto lms = parse_landmarks(text);
    REQUIRE(lms.size() == gg.landmarks.size());
    for (size_t i = 0; i < lms.size(); ++i) {
        CHECK(lms[i].name == gg.landmarks[i].name);
        CHECK(lms[i].vertex == gg.landmarks[i].vertex);
    }
    CHECK(parse_landmarks(serialize_graph(path_graph(3))).empty());
}
