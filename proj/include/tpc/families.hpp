#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpc/graph.hpp"

namespace tpc {

// A named vertex inside a generated graph (corner of a ring, ear endpoint,
// …) so tests and humans can talk about "u1" instead of a raw index.
struct Landmark {
    std::string name;
    int vertex;
};

struct GeneratedGraph {
    Graph graph;
    std::vector<Landmark> landmarks;  // empty for most kinds
};

// Request for `generate`. `kind` is one of family_kinds(); random kinds read
// `seed` (absent means 0), deterministic kinds ignore it.
struct FamilySpec {
    std::string kind;
    std::vector<int> parameters;
    std::optional<std::uint64_t> seed;
};

Graph path_graph(int n);      // n >= 1 vertices in a row
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 1
Graph complete_bipartite_graph(int m, int n);                       // sides m, n >= 1
Graph complete_multipartite_graph(const std::vector<int>& sizes);   // >= 2 parts
Graph star_graph(int n);      // n >= 2 vertices: center 0, leaves 1..n-1

// Even ring split into four equal segments by corners u1..u4, with two more
// equal-length paths doubling the first and third segments. Every segment
// has 2^k edges (k >= 2). Landmarks: u1..u4 and, for each corner, its three
// neighbors uNp/uNpp/uNppp (plain ring side, doubled-segment side, ear side).
GeneratedGraph two_ear_cycle(int k);

// Ring split into three segments of 6t edges each by corners w1..w3, with a
// 3-edge path doubling every segment (t >= 1). Landmarks: w1..w3.
GeneratedGraph three_ear_cycle(int t);

// Random spanning tree plus random extra edges up to m; n-1 <= m <= n(n-1)/2.
Graph random_connected_graph(int n, int m, std::uint64_t seed);
// Random ring over a shuffled vertex order plus random chords; n >= 3.
Graph random_two_connected_graph(int n, std::uint64_t seed);
// Random edges until every vertex has degree >= delta, then patched to be
// connected; 1 <= delta <= n-1.
Graph random_min_degree_graph(int n, int delta, std::uint64_t seed);

// Dispatch by kind: path(n), cycle(n), complete(n), complete_bipartite(m,n),
// complete_multipartite(s1,s2,...), star(n), prop3(k), prop4(t),
// random_connected(n,m), random_2connected(n), random_min_degree(n,delta).
// Throws std::invalid_argument for unknown kinds or out-of-domain parameters.
GeneratedGraph generate(const FamilySpec& spec);
const std::vector<std::string>& family_kinds();

// Graph text format plus one "# landmark <name> <vertex>" comment per
// landmark; parse_graph ignores those lines, parse_landmarks recovers them.
std::string serialize_generated(const GeneratedGraph& gg);
std::vector<Landmark> parse_landmarks(const std::string& text);

}  // namespace tpc
