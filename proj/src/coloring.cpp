#include "tpc/coloring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tpc {

int TotalColoring::color_count() const {
    std::set<int> seen(vertex_colors.begin(), vertex_colors.end());
    seen.insert(edge_colors.begin(), edge_colors.end());
    return static_cast<int>(seen.size());
}

int TotalColoring::max_color() const {
    int m = 0;
    for (int c : vertex_colors) m = std::max(m, c);
    for (int c : edge_colors) m = std::max(m, c);
    return m;
}

TotalColoring uniform_coloring(const Graph& g, int color) {
    TotalColoring c;
    c.vertex_colors.assign(g.vertex_count(), color);
    c.edge_colors.assign(g.edge_count(), color);
    return c;
}

int edge_color(const Graph& g, const TotalColoring& c, int u, int v) {
    int i = g.edge_index(u, v);
    if (i < 0) throw std::invalid_argument("no such edge: " + std::to_string(u) + " " + std::to_string(v));
    return c.edge_colors[i];
}

bool is_path_in(const Graph& g, const PathWitness& p) {
    const auto& vs = p.vertices;
    if (vs.empty()) return false;
    std::set<int> seen;
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[i + 1])) return false;
    return true;
}

bool is_total_proper_path(const Graph& g, const TotalColoring& c, const PathWitness& p) {
    if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
    if (!is_path_in(g, p)) throw std::invalid_argument("witness is not a path of the graph");
    const auto& vs = p.vertices;
    size_t s = vs.size();
    if (s <= 2) return true;
    for (size_t i = 0; i + 2 < s; ++i) {
        int e1 = edge_color(g, c, vs[i], vs[i + 1]);
        int e2 = edge_color(g, c, vs[i + 1], vs[i + 2]);
        if (e1 == e2) return false;                        // (i)
        int mid = c.vertex_colors[vs[i + 1]];
        if (mid == e1 || mid == e2) return false;          // (iii)
    }
    for (size_t i = 1; i + 2 < s; ++i)
        if (c.vertex_colors[vs[i]] == c.vertex_colors[vs[i + 1]]) return false;  // (ii)
    return true;
}

EndpointColors path_endpoint_colors(const Graph& g, const TotalColoring& c, const PathWitness& p) {
    if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
    if (!is_path_in(g, p)) throw std::invalid_argument("witness is not a path of the graph");
    const auto& vs = p.vertices;
    size_t s = vs.size();
    if (s < 2) throw std::invalid_argument("endpoint colors need at least two vertices");
    EndpointColors ec;
    ec.start_e = edge_color(g, c, vs[0], vs[1]);
    ec.end_e = edge_color(g, c, vs[s - 2], vs[s - 1]);
    if (s == 2) {
        // single-edge convention: the "inner" vertex seen from each end is the
        // opposite endpoint
        ec.start_v = c.vertex_colors[vs[1]];
        ec.end_v = c.vertex_colors[vs[0]];
    } else {
        ec.start_v = c.vertex_colors[vs[1]];
        ec.end_v = c.vertex_colors[vs[s - 2]];
    }
    return ec;
}

std::vector<int> colors_at(const Graph& g, const TotalColoring& c, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    std::set<int> seen{c.vertex_colors[v]};
    for (int ei : g.incident_edges(v)) seen.insert(c.edge_colors[ei]);
    return {seen.begin(), seen.end()};
}

std::string serialize_coloring(const Graph& g, const TotalColoring& c) {
    if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) out << "v " << v << ' ' << c.vertex_colors[v] << '\n';
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, w] = g.edges()[i];
        out << "e " << u << ' ' << w << ' ' << c.edge_colors[i] << '\n';
    }
    return out.str();
}

TotalColoring parse_coloring(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    TotalColoring c;
    c.vertex_colors.assign(g.vertex_count(), 0);
    c.edge_colors.assign(g.edge_count(), 0);
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("coloring parse error on line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            int v, col;
            if (!(ls >> v >> col)) fail("expected 'v <id> <color>'");
            if (v < 0 || v >= g.vertex_count()) fail("vertex out of range");
            if (col < 1) fail("colors must be positive");
            if (c.vertex_colors[v] != 0) fail("vertex colored twice");
            c.vertex_colors[v] = col;
        } else if (tag == "e") {
            int u, v, col;
            if (!(ls >> u >> v >> col)) fail("expected 'e <u> <v> <color>'");
            if (u >= v) fail("edge endpoints must satisfy u < v");
            int i = g.edge_index(u, v);
            if (i < 0) fail("no such edge in the host graph");
            if (col < 1) fail("colors must be positive");
            if (c.edge_colors[i] != 0) fail("edge colored twice");
            c.edge_colors[i] = col;
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.vertex_colors[v] == 0)
            throw std::runtime_error("coloring parse error: vertex " + std::to_string(v) + " missing");
    for (int i = 0; i < g.edge_count(); ++i)
        if (c.edge_colors[i] == 0) {
            auto [u, w] = g.edges()[i];
            throw std::runtime_error("coloring parse error: edge " + std::to_string(u) + " " +
                                     std::to_string(w) + " missing");
        }
    return c;
}

}  // namespace tpc
