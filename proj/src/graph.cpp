#include "tpc/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tpc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::set<Edge> seen;
    for (auto& e : edges) {
        if (e.first == e.second)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
        e = make_edge(e.first, e.second);
        if (e.first < 0 || e.second >= n)
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(e.first) + " " + std::to_string(e.second));
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge: " + std::to_string(e.first) + " " +
                                        std::to_string(e.second));
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(n_, {});
    inc_.assign(n_, {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        auto [u, v] = edges_[i];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        inc_[u].push_back(i);
        inc_[v].push_back(i);
    }
    // neighbor lists are ascending already for the lower endpoint, but not for
    // the higher one; sort both together with their edge indices
    for (int v = 0; v < n_; ++v) {
        std::vector<std::pair<int, int>> joined(adj_[v].size());
        for (size_t i = 0; i < adj_[v].size(); ++i) joined[i] = {adj_[v][i], inc_[v][i]};
        std::sort(joined.begin(), joined.end());
        for (size_t i = 0; i < joined.size(); ++i) {
            adj_[v][i] = joined[i].first;
            inc_[v][i] = joined[i].second;
        }
    }
}

int Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::is_complete() const {
    return static_cast<long long>(edge_count()) * 2 == static_cast<long long>(n_) * (n_ - 1);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("graph parse error on line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("expected header 'n m'");
            std::string rest;
            if (ls >> rest) fail("trailing tokens after header");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) fail("expected edge 'u v'");
        std::string rest;
        if (ls >> rest) fail("trailing tokens after edge");
        if (u == v) fail("self-loop '" + std::to_string(u) + " " + std::to_string(v) + "'");
        if (!(0 <= u && u < v && v < n)) fail("edge endpoints must satisfy 0 <= u < v < n");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::runtime_error("graph parse error: empty input");
    if (static_cast<int>(edges.size()) != m)
        throw std::runtime_error("graph parse error: header promised " + std::to_string(m) +
                                 " edges, got " + std::to_string(edges.size()));
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("graph parse error: ") + e.what());
    }
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace tpc
