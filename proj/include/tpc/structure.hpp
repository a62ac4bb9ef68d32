#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "tpc/graph.hpp"

namespace tpc {

// Sentinel diameter for disconnected graphs.
inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

struct StructureProfile {
    bool connected = false;
    std::vector<Edge> bridges;        // sorted lexicographically
    int max_bridges_at_vertex = 0;    // most bridges sharing one endpoint
    int bridge_max_degree = 0;        // max degree over bridge endpoints, 0 if bridgeless
    int diameter = 0;                 // kInfiniteDiameter when disconnected
    bool complete = false;
};

bool is_connected(const Graph& g);
StructureProfile structure_profile(const Graph& g);

// Maximal 2-connected pieces plus single-edge (bridge) blocks. Every edge
// lies in exactly one block; blocks pairwise share at most a cut vertex.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // each sorted ascending
    std::vector<int> cut_vertices;         // sorted ascending
    Graph block_graph;                     // vertices = block indices, adjacency = shared cut vertex
    std::vector<int> bfs_order;            // block indices, root first
    std::vector<int> bfs_parent;           // parent block index per block, -1 for root
    std::vector<int> attach_vertex;        // cut vertex shared with parent, -1 for root
};

// Root block: lowest-indexed block containing root_vertex. BFS over the
// block graph, neighbors in ascending index order.
BlockDecomposition block_decomposition(const Graph& g, int root_vertex = 0);

struct Ear {
    int u = -1, v = -1;         // distinct endpoints, already present when the ear is added
    std::vector<int> internal;  // interior vertices in path order (may be empty)
};

struct EarDecomposition {
    std::vector<int> base_cycle;  // vertex sequence; closing edge implied
    std::vector<Ear> ears;
};

bool is_two_connected(const Graph& g);

// Open ear decomposition of a 2-connected graph. Deterministic: the base
// cycle closes the lexicographically first edge via a shortest detour, and
// ears are grown from the first uncovered edge leaving covered territory.
EarDecomposition ear_decomposition(const Graph& g);

// Spanning 2-connected subgraph that loses 2-connectivity on deleting any
// single edge. Greedy deletion in lexicographic edge order.
Graph minimally_two_connected_spanning(const Graph& g);

enum class SpanningTreeStrategy { bfs, min_max_degree_heuristic, exhaustive_min_delta };

// exhaustive_min_delta is limited to n <= 10: finds a spanning tree whose
// maximum degree is smallest possible.
Graph spanning_tree(const Graph& g, SpanningTreeStrategy strategy = SpanningTreeStrategy::bfs);

// D such that: G[D] is connected, every degree-1 vertex is in D, every
// vertex is within distance 2 of D, and every vertex at distance exactly 2
// has at least two neighbors at distance exactly 1. Greedy grow-and-prune;
// not guaranteed minimum. Requires connected g with n >= 4.
std::vector<int> two_way_two_step_dominating_set(const Graph& g);

// Predicate used by the dominating-set routine and its tests.
bool is_two_way_two_step_dominating(const Graph& g, const std::vector<int>& d);

// Backtracking search; practical for n <= 20 or so.
std::optional<std::vector<int>> hamiltonian_path(const Graph& g);

}  // namespace tpc
