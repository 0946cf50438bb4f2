// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "graphfield/errors.hpp"

namespace graphfield {

/// One edge of a metric graph. Endpoints are dense vertex indices,
/// the length is in arc-length units. Loops (from == to) and parallel
/// edges are allowed.
struct Edge {
    int id = 0;
    int from = 0;
    int to = 0;
    double length = 0.0;
};

/// A position on the graph: an edge index together with an arc-length
/// coordinate t in [0, length].
struct GraphPoint {
    int edge = 0;
    double t = 0.0;
};

/// A compact, connected metric graph: combinatorics plus edge lengths and
/// the shortest-path metric. Immutable after construction and safe for
/// concurrent reads; vertex-to-vertex distances are precomputed.
class MetricGraph {
public:
    /// Builds a graph from (from-id, to-id, length) records. Vertex ids may
    /// be arbitrary ints; they are remapped to dense indices in sorted id
    /// order. Throws NonPositiveLengthError or DisconnectedGraphError.
    static MetricGraph from_edge_list(const std::vector<std::tuple<int, int, double>>& edges);

    /// Parses the text format, one record per line:
    ///   edge <id> <from> <to> <length>
    /// Lines starting with '#' and blank lines are ignored.
    static MetricGraph from_stream(std::istream& in);
    static MetricGraph from_file(const std::string& path);

    /// Named graphs: interval, loop, tadpole, star4, triangle.
    static MetricGraph builtin(const std::string& name);

    /// Resolves a graph source: a builtin name if it matches, else a file path.
    static MetricGraph from_source(const std::string& source);

    int num_vertices() const { return static_cast<int>(degrees_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

    /// Original id of dense vertex index v.
    int vertex_id(int v) const { return vertex_ids_.at(static_cast<std::size_t>(v)); }

    /// Vertex degree; a loop at v contributes 2.
    int degree(int v) const { return degrees_.at(static_cast<std::size_t>(v)); }
    int min_degree() const;

    double total_length() const { return total_length_; }
    double min_edge_length() const;
    double max_edge_length() const;

    /// Shortest-path distance between two vertices.
    double vertex_distance(int u, int v) const;

    /// Shortest-path distance between two points on the graph.
    /// Throws InvalidPointError if a coordinate is outside its edge.
    double distance(const GraphPoint& x, const GraphPoint& y) const;

    bool operator==(const MetricGraph& other) const;

private:
    MetricGraph() = default;
    void validate_point(const GraphPoint& p) const;
    void compute_vertex_distances();

    std::vector<Edge> edges_;
    std::vector<int> vertex_ids_;
    std::vector<int> degrees_;
    std::vector<std::vector<double>> vertex_dist_;
    double total_length_ = 0.0;
};

}  // namespace graphfield
