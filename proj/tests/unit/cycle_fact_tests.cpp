#include <doctest.h>

#include <vector>

#include "tpc/coloring.hpp"
#include "tpc/families.hpp"
#include "tpc/rng.hpp"

using namespace tpc;

namespace {

// Arc of a ring from a to b walking ascending positions (wrapping), 0-based.
PathWitness arc(int n, int from, int to) {
    PathWitness w;
    for (int p = from;; p = (p + 1) % n) {
        w.vertices.push_back(p);
        if (p == to) break;
    }
    return w;
}

// Hunt for positions i<j<k<l with l-i>1 and k-j>1 whose two wrap-around
// arcs (j..i and l..k) are both total proper.
bool crossing_proper_arcs_exist(const Graph& g, int n, const TotalColoring& c) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (l - i <= 1 || k - j <= 1) continue;
                    if (is_total_proper_path(g, c, arc(n, j, i)) &&
                        is_total_proper_path(g, c, arc(n, l, k)))
                        return true;
                }
    return false;
}

}  // namespace

// Around a ring the vertices and edges interleave into 2n elements. If two
// long wrap-around arcs both read as total proper paths, the element cycle
// is properly colored all the way around with 3 colors, which forces 3 | n.
TEST_CASE("three-coloring a ring with crossing proper arcs needs length divisible by 3") {
    // positive control: on rings of length 6 and 9, coloring the element
    // cycle 1,2,3,1,2,3,... makes every arc total proper
    for (int n : {6, 9}) {
        Graph g = cycle_graph(n);
        TotalColoring c;
        c.vertex_colors.assign(n, 0);
        c.edge_colors.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            c.vertex_colors[i] = 2 * i % 3 + 1;
            c.edge_colors[g.edge_index(i, (i + 1) % n)] = (2 * i + 1) % 3 + 1;
        }
        CHECK(crossing_proper_arcs_exist(g, n, c));
    }
    // lengths not divisible by 3: no sampled 3-coloring may admit the pair
    // (length 4 has no index tuple satisfying the gaps, so it proves nothing)
    Rng rng(987654321);
    for (int n : {5, 7, 8}) {
        Graph g = cycle_graph(n);
        for (int trial = 0; trial < 4000; ++trial) {
            TotalColoring c;
            for (int v = 0; v < n; ++v) c.vertex_colors.push_back(1 + rng.below(3));
            for (int e = 0; e < n; ++e) c.edge_colors.push_back(1 + rng.below(3));
            if (crossing_proper_arcs_exist(g, n, c)) {
                CAPTURE(n);
                CAPTURE(trial);
                FAIL_CHECK("found crossing total proper arcs on a ring of length not divisible by 3");
                return;
            }
        }
    }
}
