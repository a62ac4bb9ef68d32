#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "tpc/construct.hpp"
#include "tpc/families.hpp"
#include "tpc/rng.hpp"
#include "tpc/structure.hpp"
#include "tpc/verify.hpp"

using namespace tpc;

namespace {

void check_verified(const Graph& g, const TotalColoring& c) {
    REQUIRE(c.fits(g));
    CHECK(is_total_proper_connected(g, c, Mode::tpc).connected);
}

}  // namespace

TEST_CASE("complete graphs take one color") {
    for (int n : {1, 2, 3, 5, 8}) {
        Graph g = complete_graph(n);
        TotalColoring c = color_complete(g);
        check_verified(g, c);
        CHECK(c.color_count() == 1);
    }
    CHECK_THROWS_AS(color_complete(path_graph(3)), std::invalid_argument);
}

TEST_CASE("trees take max degree plus one colors") {
    Graph p3 = path_graph(3);
    TotalColoring c3 = color_tree(p3);
    check_verified(p3, c3);
    CHECK(c3.vertex_colors == std::vector<int>{3, 1, 2});
    CHECK(c3.edge_colors == std::vector<int>{2, 3});

    for (int n : {4, 5, 9}) {
        Graph p = path_graph(n);
        TotalColoring c = color_tree(p);
        check_verified(p, c);
        CHECK(c.max_color() == 3);
    }
    Graph s = star_graph(6);
    TotalColoring cs = color_tree(s);
    check_verified(s, cs);
    CHECK(cs.max_color() == 6);
    CHECK(cs.color_count() == 6);

    Rng rng(2026);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + rng.below(10);
        Graph t = random_connected_graph(n, n - 1, rng.next());
        TotalColoring c = color_tree(t);
        check_verified(t, c);
        CHECK(c.max_color() <= t.max_degree() + 1);
    }

    CHECK_THROWS_AS(color_tree(path_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(color_tree(cycle_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(color_tree(Graph(4, {{0, 1}, {2, 3}, {1, 2}, {0, 3}})), std::invalid_argument);
}

TEST_CASE("rings alternate two edge colors and two vertex colors") {
    for (int n = 4; n <= 11; ++n) {
        TotalColoring c = color_cycle(n);
        Graph g = cycle_graph(n);
        check_verified(g, c);
        CHECK(c.max_color() <= 4);
    }
    CHECK_THROWS_AS(color_cycle(3), std::invalid_argument);

    // relabeled ring: 0-3-1-4-2-5-0
    Graph odd(6, {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}});
    TotalColoring c = color_cycle(odd);
    check_verified(odd, c);
    CHECK(c.max_color() <= 4);
    CHECK_THROWS_AS(color_cycle(path_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(color_cycle(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("complete bipartite graphs take three colors") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 7}, {3, 3}, {3, 5}, {4, 4}, {5, 6}}) {
        TotalColoring c = color_complete_bipartite(m, n);
        Graph g = complete_bipartite_graph(m, n);
        check_verified(g, c);
        CHECK(c.max_color() <= 3);
        // same coloring through shape detection on the anonymous graph
        TotalColoring c2 = color_complete_bipartite(g);
        check_verified(g, c2);
        CHECK(c2.max_color() <= 3);
    }
    CHECK_THROWS_AS(color_complete_bipartite(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(color_complete_bipartite(star_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(color_complete_bipartite(cycle_graph(5)), std::invalid_argument);
    // bipartite but not complete bipartite
    CHECK_THROWS_AS(color_complete_bipartite(cycle_graph(6)), std::invalid_argument);
}

TEST_CASE("complete multipartite graphs take three colors or route to simpler shapes") {
    for (auto parts : std::vector<std::vector<int>>{
             {2, 2}, {2, 3}, {1, 2, 1}, {1, 1, 2}, {2, 2, 2}, {1, 2, 3}, {3, 3, 1}, {1, 1, 1, 2}}) {
        TotalColoring c = color_complete_multipartite(parts);
        Graph g = complete_multipartite_graph(parts);
        check_verified(g, c);
        CHECK(c.max_color() <= 3);
        TotalColoring c2 = color_complete_multipartite(g);
        check_verified(g, c2);
        CHECK(c2.max_color() <= 3);
    }
    // all parts singletons: the graph is complete, one color
    CHECK(color_complete_multipartite(std::vector<int>{1, 1, 1}).color_count() == 1);
    CHECK(color_complete_multipartite(complete_graph(4)).color_count() == 1);
    // a star is a tree, not this constructor's job
    CHECK_THROWS_AS(color_complete_multipartite(std::vector<int>{1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(color_complete_multipartite(star_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(color_complete_multipartite(path_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(color_complete_multipartite(std::vector<int>{4}), std::invalid_argument);
}

TEST_CASE("2-connected graphs take four colors with spare routes everywhere") {
    std::vector<Graph> hosts = {cycle_graph(5),
                                complete_graph(4),
                                complete_graph(5),
                                complete_bipartite_graph(2, 3),
                                complete_bipartite_graph(3, 4),
                                two_ear_cycle(2).graph,
                                three_ear_cycle(1).graph};
    Rng rng(888);
    for (int trial = 0; trial < 6; ++trial)
        hosts.push_back(random_two_connected_graph(5 + rng.below(8), rng.next()));
    for (const Graph& g : hosts) {
        TotalColoring c = color_2connected(g);
        check_verified(g, c);
        CHECK(c.max_color() <= 4);
        CHECK(has_strong_property(g, c).holds);
    }
    CHECK_THROWS_AS(color_2connected(path_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(color_2connected(star_graph(4)), std::invalid_argument);
}

TEST_CASE("arbitrary connected graphs respect the bridge-degree bound") {
    std::vector<Graph> hosts = {
        path_graph(2),
        path_graph(6),
        star_graph(6),
        cycle_graph(6),
        // triangle with a pendant vertex
        Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}),
        // two triangles joined by a bridge
        Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}),
        // two triangles sharing a cut vertex plus a pendant
        Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}),
    };
    Rng rng(909);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + rng.below(9);
        int extra = rng.below(3);
        long long cap = static_cast<long long>(n) * (n - 1) / 2;
        int m = static_cast<int>(std::min<long long>(n - 1 + extra, cap));
        hosts.push_back(random_connected_graph(n, m, rng.next()));
    }
    for (const Graph& g : hosts) {
        TotalColoring c = color_general(g);
        check_verified(g, c);
        int bound = std::max(structure_profile(g).bridge_max_degree + 1, 4);
        CHECK(c.max_color() <= bound);
    }
    CHECK_THROWS_AS(color_general(Graph(3, {{0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(color_general(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("trees through the block route still land within max degree plus one") {
    // every tree edge is a bridge, so the bound collapses to the tree bound
    // (clamped below by 4)
    Rng rng(610);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 4 + rng.below(8);
        Graph t = random_connected_graph(n, n - 1, rng.next());
        TotalColoring c = color_general(t);
        check_verified(t, c);
        CHECK(c.max_color() <= std::max(t.max_degree() + 1, 4));
    }
}

TEST_CASE("dominating-core coloring stays within core size plus three") {
    std::vector<Graph> hosts = {cycle_graph(6), complete_graph(5), complete_bipartite_graph(3, 3)};
    Rng rng(70707);
    for (int trial = 0; trial < 8; ++trial)
        hosts.push_back(random_min_degree_graph(9 + rng.below(7), 3, rng.next()));
    for (const Graph& g : hosts) {
        TotalColoring c = color_min_degree(g);
        check_verified(g, c);
        int k = static_cast<int>(two_way_two_step_dominating_set(g).size());
        CHECK(c.max_color() <= k + 3);
    }
    CHECK_THROWS_AS(color_min_degree(path_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(color_min_degree(Graph(5, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("graphs with a spanning path take three colors") {
    Graph p5 = path_graph(5);
    TotalColoring c = color_traceable(p5, {0, 1, 2, 3, 4});
    check_verified(p5, c);
    CHECK(c.max_color() <= 3);

    Graph c6 = cycle_graph(6);
    TotalColoring cc = color_traceable(c6);
    check_verified(c6, cc);
    CHECK(cc.max_color() <= 3);

    // extra off-path edges do not disturb the scheme
    Graph petersenish = random_two_connected_graph(9, 424242);
    if (hamiltonian_path(petersenish)) {
        TotalColoring ct = color_traceable(petersenish);
        check_verified(petersenish, ct);
        CHECK(ct.max_color() <= 3);
    }

    CHECK(color_traceable(complete_graph(4)).color_count() == 1);
    CHECK_THROWS_AS(color_traceable(star_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(color_traceable(p5, {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(color_traceable(p5, {0, 1, 2, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(color_traceable(p5, {0, 2, 1, 3, 4}), std::invalid_argument);
}
