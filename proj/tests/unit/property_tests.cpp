#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "tpc/families.hpp"
#include "tpc/rng.hpp"
#include "tpc/solve.hpp"
#include "tpc/verify.hpp"

using namespace tpc;

namespace {

TotalColoring random_coloring(const Graph& g, int k, Rng& rng) {
    TotalColoring c;
    for (int v = 0; v < g.vertex_count(); ++v) c.vertex_colors.push_back(1 + rng.below(k));
    for (int e = 0; e < g.edge_count(); ++e) c.edge_colors.push_back(1 + rng.below(k));
    return c;
}

std::optional<PathWitness> random_simple_path(const Graph& g, Rng& rng) {
    int u = rng.below(g.vertex_count());
    std::vector<int> path{u};
    std::vector<char> used(g.vertex_count(), 0);
    used[u] = 1;
    int steps = 1 + rng.below(g.vertex_count());
    for (int s = 0; s < steps; ++s) {
        std::vector<int> next;
        for (int w : g.neighbors(path.back()))
            if (!used[w]) next.push_back(w);
        if (next.empty()) break;
        int w = next[rng.below(static_cast<int>(next.size()))];
        used[w] = 1;
        path.push_back(w);
    }
    if (path.size() < 2) return std::nullopt;
    return PathWitness{path};
}

TotalColoring permute_colors(const TotalColoring& c, const std::vector<int>& perm) {
    TotalColoring out = c;
    for (int& x : out.vertex_colors) x = perm[x];
    for (int& x : out.edge_colors) x = perm[x];
    return out;
}

}  // namespace

TEST_CASE("a path is total proper exactly when its reverse is") {
    Rng rng(1111);
    Graph g = random_connected_graph(9, 14, 3);
    for (int trial = 0; trial < 200; ++trial) {
        TotalColoring c = random_coloring(g, 3, rng);
        auto p = random_simple_path(g, rng);
        if (!p) continue;
        PathWitness rev{{p->vertices.rbegin(), p->vertices.rend()}};
        CHECK(is_total_proper_path(g, c, *p) == is_total_proper_path(g, c, rev));
    }
}

TEST_CASE("every contiguous subpath of a total proper path is total proper") {
    Rng rng(2222);
    Graph g = random_connected_graph(9, 13, 5);
    int hits = 0;
    for (int trial = 0; trial < 400; ++trial) {
        TotalColoring c = random_coloring(g, 4, rng);
        auto p = random_simple_path(g, rng);
        if (!p || !is_total_proper_path(g, c, *p)) continue;
        ++hits;
        const auto& vs = p->vertices;
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b) {
                PathWitness sub{{vs.begin() + a, vs.begin() + b + 1}};
                CHECK(is_total_proper_path(g, c, sub));
            }
    }
    CHECK(hits > 0);
}

TEST_CASE("renaming colors by any bijection never changes a verdict") {
    Rng rng(3333);
    std::vector<Graph> hosts = {cycle_graph(5), star_graph(4), random_connected_graph(6, 8, 9)};
    for (const Graph& g : hosts) {
        for (int trial = 0; trial < 15; ++trial) {
            int k = 3 + rng.below(2);
            TotalColoring c = random_coloring(g, k, rng);
            std::vector<int> perm(k + 1);
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);
            // re-anchor: entry 0 must stay 0 (colors are 1-based)
            auto zero = std::find(perm.begin(), perm.end(), 0);
            std::swap(*zero, perm[0]);
            TotalColoring pc = permute_colors(c, perm);
            for (Mode mode : {Mode::tpc, Mode::pc, Mode::pvc})
                CHECK(is_total_proper_connected(g, c, mode).connected ==
                      is_total_proper_connected(g, pc, mode).connected);
            CHECK(has_strong_property(g, c).holds == has_strong_property(g, pc).holds);
        }
    }
}

TEST_CASE("the total discipline implies both relaxed disciplines") {
    Rng rng(4444);
    Graph g = random_connected_graph(8, 12, 17);
    int proper = 0;
    for (int trial = 0; trial < 300; ++trial) {
        TotalColoring c = random_coloring(g, 3, rng);
        auto p = random_simple_path(g, rng);
        if (!p || !is_total_proper_path(g, c, *p)) continue;
        ++proper;
        const auto& vs = p->vertices;
        for (size_t i = 0; i + 2 < vs.size(); ++i)
            CHECK(edge_color(g, c, vs[i], vs[i + 1]) != edge_color(g, c, vs[i + 1], vs[i + 2]));
        for (size_t i = 1; i + 2 < vs.size(); ++i)
            CHECK(c.vertex_colors[vs[i]] != c.vertex_colors[vs[i + 1]]);
    }
    CHECK(proper > 0);
}

TEST_CASE("connectivity in the total discipline implies it in both relaxed ones") {
    Rng rng(5555);
    for (int trial = 0, seen = 0; trial < 60 && seen < 8; ++trial) {
        Graph g = random_connected_graph(6, 8 + rng.below(3), rng.next());
        TotalColoring c = random_coloring(g, 4, rng);
        if (!is_total_proper_connected(g, c, Mode::tpc).connected) continue;
        ++seen;
        CHECK(is_total_proper_connected(g, c, Mode::pc).connected);
        CHECK(is_total_proper_connected(g, c, Mode::pvc).connected);
    }
}

TEST_CASE("exact numbers nest: tpc at least pc, strictly above pvc") {
    Rng rng(6666);
    std::vector<Graph> hosts = {path_graph(4), cycle_graph(5), star_graph(5),
                                complete_graph(4), complete_bipartite_graph(2, 3)};
    for (int trial = 0; trial < 6; ++trial) {
        int n = 4 + rng.below(3);
        hosts.push_back(random_connected_graph(n, n + rng.below(3), rng.next()));
    }
    for (const Graph& g : hosts) {
        auto rec = compare_numbers(g);
        CHECK(rec.tpc >= rec.pc);
        CHECK(rec.tpc > rec.pvc);
        CHECK(rec.gap_pc == rec.tpc - rec.pc);
        CHECK(rec.gap_pvc == rec.tpc - rec.pvc);
        if (!g.is_complete()) CHECK(rec.tpc >= 3);
        if (g.is_complete()) CHECK(rec.tpc == 1);
    }
}
