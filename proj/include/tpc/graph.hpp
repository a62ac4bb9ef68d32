#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tpc {

// Undirected edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Finite simple undirected graph on vertices 0..n-1.
// Edge list is kept sorted lexicographically; adjacency lists ascending.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    // incident_edges(v)[i] is the index into edges() of {v, neighbors(v)[i]}
    const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    int edge_index(int u, int v) const;  // -1 when absent
    int max_degree() const;
    int min_degree() const;
    bool is_complete() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

// Text format: first non-comment line "n m", then m lines "u v" with
// 0 <= u < v < n. Lines starting with '#' are comments. Errors carry the
// offending line number.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace tpc
