// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "graphfield/metric_graph.hpp"

namespace graphfield {

/// Regular subdivision of every edge of a metric graph into n_e >= 2
/// segments, with a global degree-of-freedom numbering: vertex dofs first
/// (dof v = dense vertex index v), then interior nodes edge by edge in
/// increasing arc order. Immutable after construction.
class Mesh {
public:
    /// n_e = max(2, ceil(l_e / max_h)), so h_e = l_e/n_e <= max_h.
    Mesh(MetricGraph graph, double max_h);

    const MetricGraph& graph() const { return graph_; }
    int num_dofs() const { return num_dofs_; }

    /// Largest segment length over all edges.
    double h_max() const { return h_max_; }

    int intervals(int e) const { return intervals_.at(static_cast<std::size_t>(e)); }
    double h(int e) const { return seg_length_.at(static_cast<std::size_t>(e)); }

    /// Global dof of node j on edge e, j in [0, n_e]. Node 0 and n_e are the
    /// endpoint vertex dofs, shared across incident edges.
    int dof(int e, int j) const;

    /// Arc coordinate of node j on edge e.
    double node_t(int e, int j) const { return static_cast<double>(j) * h(e); }

    int vertex_dof(int v) const { return v; }

    /// Length measure attributed to each dof: half of every adjacent segment.
    /// Sums to the total graph length.
    Eigen::VectorXd lumped_measure() const;

private:
    MetricGraph graph_;
    std::vector<int> intervals_;
    std::vector<double> seg_length_;
    std::vector<int> interior_offset_;  // first interior dof of each edge
    int num_dofs_ = 0;
    double h_max_ = 0.0;
};

/// Matrix P (fine dofs x coarse dofs) with P_ji = value at fine node j of the
/// coarse hat function i, so P*c evaluates a coarse piecewise-linear field at
/// the fine nodes. Both meshes must discretize the same graph.
Eigen::SparseMatrix<double> prolongation_matrix(const Mesh& coarse, const Mesh& fine);

/// Point-evaluates the coarse field with coefficients c at the fine nodes.
Eigen::VectorXd prolongate(const Mesh& coarse, const Mesh& fine, const Eigen::VectorXd& c);

}  // namespace graphfield
