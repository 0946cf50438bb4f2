// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

namespace graphfield {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MetricGraph MetricGraph::from_edge_list(const std::vector<std::tuple<int, int, double>>& edges) {
    if (edges.empty()) {
        throw ValidationError("graph has no edges");
    }
    std::map<int, int> remap;
    for (const auto& [u, v, l] : edges) {
        if (!(l > 0.0) || !std::isfinite(l)) {
            throw NonPositiveLengthError("edge length must be positive and finite, got " +
                                         std::to_string(l));
        }
        remap.emplace(u, 0);
        remap.emplace(v, 0);
    }
    MetricGraph g;
    for (auto& [id, idx] : remap) {
        idx = static_cast<int>(g.vertex_ids_.size());
        g.vertex_ids_.push_back(id);
    }
    g.degrees_.assign(g.vertex_ids_.size(), 0);
    int eid = 0;
    for (const auto& [u, v, l] : edges) {
        Edge e;
        e.id = eid++;
        e.from = remap.at(u);
        e.to = remap.at(v);
        e.length = l;
        g.edges_.push_back(e);
        g.degrees_[static_cast<std::size_t>(e.from)] += 1;
        g.degrees_[static_cast<std::size_t>(e.to)] += 1;
        g.total_length_ += l;
    }
    g.compute_vertex_distances();
    return g;
}

MetricGraph MetricGraph::from_stream(std::istream& in) {
    std::vector<std::tuple<int, int, double>> recs;
    std::vector<int> ids;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string tag;
        int id = 0, u = 0, v = 0;
        double l = 0.0;
        if (!(ls >> tag >> id >> u >> v >> l) || tag != "edge") {
            throw ConfigError("bad graph record on line " + std::to_string(lineno) + ": " + line);
        }
        recs.emplace_back(u, v, l);
        ids.push_back(id);
    }
    MetricGraph g = from_edge_list(recs);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        g.edges_[i].id = ids[i];
    }
    return g;
}

MetricGraph MetricGraph::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open graph file: " + path);
    }
    return from_stream(in);
}

MetricGraph MetricGraph::builtin(const std::string& name) {
    using EL = std::vector<std::tuple<int, int, double>>;
    if (name == "interval") {
        return from_edge_list(EL{{0, 1, 1.0}});
    }
    if (name == "loop") {
        return from_edge_list(EL{{0, 0, 2.0}});
    }
    if (name == "tadpole") {
        return from_edge_list(EL{{0, 0, 2.0}, {0, 1, 1.0}});
    }
    if (name == "star4") {
        return from_edge_list(EL{{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}});
    }
    if (name == "triangle") {
        return from_edge_list(EL{{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}});
    }
    throw ConfigError("unknown builtin graph: " + name);
}

MetricGraph MetricGraph::from_source(const std::string& source) {
    static const char* names[] = {"interval", "loop", "tadpole", "star4", "triangle"};
    for (const char* n : names) {
        if (source == n) {
            return builtin(source);
        }
    }
    return from_file(source);
}

int MetricGraph::min_degree() const {
    return *std::min_element(degrees_.begin(), degrees_.end());
}

double MetricGraph::min_edge_length() const {
    double m = kInf;
    for (const Edge& e : edges_) m = std::min(m, e.length);
    return m;
}

double MetricGraph::max_edge_length() const {
    double m = 0.0;
    for (const Edge& e : edges_) m = std::max(m, e.length);
    return m;
}

void MetricGraph::compute_vertex_distances() {
    const int nv = num_vertices();
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(nv));
    for (const Edge& e : edges_) {
        adj[static_cast<std::size_t>(e.from)].emplace_back(e.to, e.length);
        adj[static_cast<std::size_t>(e.to)].emplace_back(e.from, e.length);
    }
    vertex_dist_.assign(static_cast<std::size_t>(nv), std::vector<double>(static_cast<std::size_t>(nv), kInf));
    for (int s = 0; s < nv; ++s) {
        auto& dist = vertex_dist_[static_cast<std::size_t>(s)];
        dist[static_cast<std::size_t>(s)] = 0.0;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.emplace(0.0, s);
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (d > dist[static_cast<std::size_t>(u)]) continue;
            for (const auto& [v, w] : adj[static_cast<std::size_t>(u)]) {
                const double nd = d + w;
                if (nd < dist[static_cast<std::size_t>(v)]) {
                    dist[static_cast<std::size_t>(v)] = nd;
                    pq.emplace(nd, v);
                }
            }
        }
    }
    for (int v = 0; v < nv; ++v) {
        if (!std::isfinite(vertex_dist_[0][static_cast<std::size_t>(v)])) {
            throw DisconnectedGraphError("graph is not connected (vertex id " +
                                         std::to_string(vertex_id(v)) + " unreachable)");
        }
    }
}

double MetricGraph::vertex_distance(int u, int v) const {
    return vertex_dist_.at(static_cast<std::size_t>(u)).at(static_cast<std::size_t>(v));
}

void MetricGraph::validate_point(const GraphPoint& p) const {
    if (p.edge < 0 || p.edge >= num_edges()) {
        throw InvalidPointError("edge index out of range: " + std::to_string(p.edge));
    }
    const double l = edge(p.edge).length;
    if (!(p.t >= 0.0 && p.t <= l)) {
        throw InvalidPointError("arc coordinate " + std::to_string(p.t) + " outside [0, " +
                                std::to_string(l) + "]");
    }
}

double MetricGraph::distance(const GraphPoint& x, const GraphPoint& y) const {
    validate_point(x);
    validate_point(y);
    double best = kInf;
    if (x.edge == y.edge) {
        best = std::abs(x.t - y.t);
    }
    const Edge& ex = edge(x.edge);
    const Edge& ey = edge(y.edge);
    const std::pair<int, double> ends_x[2] = {{ex.from, x.t}, {ex.to, ex.length - x.t}};
    const std::pair<int, double> ends_y[2] = {{ey.from, y.t}, {ey.to, ey.length - y.t}};
    for (const auto& [vx, ox] : ends_x) {
        for (const auto& [vy, oy] : ends_y) {
            best = std::min(best, ox + vertex_distance(vx, vy) + oy);
        }
    }
    return best;
}

bool MetricGraph::operator==(const MetricGraph& other) const {
    if (vertex_ids_ != other.vertex_ids_ || edges_.size() != other.edges_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = other.edges_[i];
        if (a.id != b.id || a.from != b.from || a.to != b.to || a.length != b.length) {
            return false;
        }
    }
    return true;
}

}  // namespace graphfield
