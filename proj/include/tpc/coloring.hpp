#pragma once

#include <string>
#include <vector>

#include "tpc/graph.hpp"

namespace tpc {

// Assignment of a positive color to every vertex and every edge of a host
// graph. edge_colors is parallel to the host's edges() order.
struct TotalColoring {
    std::vector<int> vertex_colors;
    std::vector<int> edge_colors;

    bool fits(const Graph& g) const {
        return static_cast<int>(vertex_colors.size()) == g.vertex_count() &&
               static_cast<int>(edge_colors.size()) == g.edge_count();
    }
    int color_count() const;  // distinct colors over vertices and edges
    int max_color() const;
};

TotalColoring uniform_coloring(const Graph& g, int color = 1);

int edge_color(const Graph& g, const TotalColoring& c, int u, int v);

// A path given by its vertex sequence (at least one vertex, all distinct,
// consecutive vertices adjacent in the host).
struct PathWitness {
    std::vector<int> vertices;
};

bool is_path_in(const Graph& g, const PathWitness& p);

// A path is total proper when (i) consecutive edges differ in color,
// (ii) adjacent internal vertices differ in color, and (iii) every internal
// vertex differs from both path edges at it. End vertices are unconstrained;
// paths on at most 2 vertices hold vacuously. Throws when p is not a path
// of g.
bool is_total_proper_path(const Graph& g, const TotalColoring& c, const PathWitness& p);

struct EndpointColors {
    int start_e, end_e;  // colors of the first and last path edge
    int start_v, end_v;  // colors of the second and second-to-last vertex
};

// For a single-edge path v1v2: start_e = end_e = c(v1v2), start_v = c(v2),
// end_v = c(v1). Requires at least two vertices.
EndpointColors path_endpoint_colors(const Graph& g, const TotalColoring& c, const PathWitness& p);

// Sorted distinct colors on v and its incident edges.
std::vector<int> colors_at(const Graph& g, const TotalColoring& c, int v);

// Text format: lines "v <id> <color>" and "e <u> <v> <color>" with u < v,
// '#' comments, any order. Serialization is canonical: vertices ascending,
// then edges in the host's edge order. Parsing requires every vertex and
// edge to be colored exactly once.
std::string serialize_coloring(const Graph& g, const TotalColoring& c);
TotalColoring parse_coloring(const Graph& g, const std::string& text);

}  // namespace tpc
