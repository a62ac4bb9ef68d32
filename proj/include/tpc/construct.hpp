#pragma once

#include <vector>

#include "tpc/coloring.hpp"
#include "tpc/graph.hpp"

namespace tpc {

// Each constructor returns a coloring that is re-checked with the verifier
// before being handed back; a verification failure raises std::logic_error
// since it would mean the construction itself is broken. Precondition
// violations raise std::invalid_argument.

// Complete graphs need a single color.
TotalColoring color_complete(const Graph& g);

// Trees with n >= 3: exactly max_degree + 1 colors. Rooted at a vertex of
// maximum degree (lowest index on ties); the root and its incident edges
// get pairwise distinct colors, and every other element picks the smallest
// color that avoids its already-colored neighborhood constraints.
TotalColoring color_tree(const Graph& t);

// Cycles with n >= 4, on vertices 0..n-1 in ring order: edges alternate
// 1,2 and vertices alternate 3,4 along the ring; an odd ring closes with
// edge color 4 and last vertex color 1. The result has the strong property
// (two witness paths per pair with distinct endpoint colors).
TotalColoring color_cycle(int n);
// Same pattern applied to any cycle graph, walked from vertex 0 toward its
// smaller neighbor.
TotalColoring color_cycle(const Graph& g);

// Complete bipartite K_{m,n} with 2 <= m <= n: exactly 3 colors. The
// (m, n) overload colors the canonical labeling (side U = 0..m-1, side
// V = m..m+n-1); the graph overload detects the bipartition first.
TotalColoring color_complete_bipartite(int m, int n);
TotalColoring color_complete_bipartite(const Graph& g);

// Complete multipartite graphs that are neither complete nor stars: 3
// colors via a spanning complete bipartite subgraph (first part vs the
// rest, patched when a side would be a single vertex); edges inside a
// side keep the filler color. Complete inputs fall through to
// color_complete. The (parts) overload uses the canonical labeling
// (vertices grouped part by part).
TotalColoring color_complete_multipartite(const std::vector<int>& parts);
TotalColoring color_complete_multipartite(const Graph& g);

// 2-connected graphs: at most 4 colors, and the result has the strong
// property. Colors a minimally 2-connected spanning subgraph along its ear
// decomposition - ring pattern on the base cycle, then each ear is glued
// between two witness paths whose endpoint colors leave a free color for
// the first ear edge - and gives the leftover edges the filler color 3.
TotalColoring color_2connected(const Graph& g);

// Any connected graph with n >= 2: at most max(D~ + 1, 4) colors, where
// D~ is the largest degree among bridge endpoints. Blocks are colored
// outward from the block containing vertex 0: 2-connected blocks via
// color_2connected remapped into a 4-color window anchored at the cut
// vertex, bridge edges like pendant edges (a fresh color absent around the
// cut vertex).
TotalColoring color_general(const Graph& g);

// Connected graphs with n >= 4: at most |D| + 3 colors for a connected
// two-way two-step dominating set D. A spanning tree of G[D] is colored
// like a tree over colors {4,...}, vertices at distance 1 / 2 from D get
// 3 / 4, and the connecting edges alternate over {1,2} so that each
// distance-2 vertex has entries of both parities into D. A bounded repair
// loop recolors fringe edges if verification finds a failing pair; if
// repair cannot fix the coloring, throws std::runtime_error rather than
// returning an unverified result.
TotalColoring color_min_degree(const Graph& g);

// Graphs with a spanning path: 3 colors. Path edges cycle 1,2,3 and every
// vertex takes the color its two surrounding path edges leave free;
// off-path edges get 3. Complete inputs fall through to color_complete.
TotalColoring color_traceable(const Graph& g, const std::vector<int>& spanning_path);
// Convenience overload that searches for the spanning path first.
TotalColoring color_traceable(const Graph& g);

}  // namespace tpc
