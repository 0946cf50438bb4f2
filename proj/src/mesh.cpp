// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/mesh.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace graphfield {

Mesh::Mesh(MetricGraph graph, double max_h) : graph_(std::move(graph)) {
    if (!(max_h > 0.0)) {
        throw ValidationError("max_h must be positive");
    }
    num_dofs_ = graph_.num_vertices();
    for (const Edge& e : graph_.edges()) {
        // Guard against ceil(l/max_h) rounding up when l/max_h is integral
        // up to floating-point noise.
        const double ratio = e.length / max_h;
        int n = static_cast<int>(std::ceil(ratio - 1e-12));
        n = std::max(2, n);
        intervals_.push_back(n);
        seg_length_.push_back(e.length / n);
        interior_offset_.push_back(num_dofs_);
        num_dofs_ += n - 1;
        h_max_ = std::max(h_max_, e.length / n);
    }
}

int Mesh::dof(int e, int j) const {
    const Edge& edge = graph_.edge(e);
    const int n = intervals(e);
    if (j == 0) return edge.from;
    if (j == n) return edge.to;
    return interior_offset_.at(static_cast<std::size_t>(e)) + j - 1;
}

Eigen::VectorXd Mesh::lumped_measure() const {
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(num_dofs_);
    for (int e = 0; e < graph_.num_edges(); ++e) {
        const double half = 0.5 * h(e);
        for (int j = 0; j < intervals(e); ++j) {
            mu[dof(e, j)] += half;
            mu[dof(e, j + 1)] += half;
        }
    }
    return mu;
}

Eigen::SparseMatrix<double> prolongation_matrix(const Mesh& coarse, const Mesh& fine) {
    if (!(coarse.graph() == fine.graph())) {
        throw ValidationError("prolongation requires meshes over the same graph");
    }
    std::vector<Eigen::Triplet<double>> trips;
    // Vertex rows are shared between incident edges; fill each row once.
    std::vector<bool> done(static_cast<std::size_t>(fine.num_dofs()), false);
    const int ne = coarse.graph().num_edges();
    for (int e = 0; e < ne; ++e) {
        const int nc = coarse.intervals(e);
        const double hc = coarse.h(e);
        for (int j = 0; j <= fine.intervals(e); ++j) {
            const int row = fine.dof(e, j);
            if (done[static_cast<std::size_t>(row)]) continue;
            done[static_cast<std::size_t>(row)] = true;
            const double t = fine.node_t(e, j);
            int ic = static_cast<int>(std::floor(t / hc));
            ic = std::min(std::max(ic, 0), nc - 1);
            const double xi = t / hc - ic;
            if (xi < 1e-12) {
                trips.emplace_back(row, coarse.dof(e, ic), 1.0);
            } else if (xi > 1.0 - 1e-12) {
                trips.emplace_back(row, coarse.dof(e, ic + 1), 1.0);
            } else {
                trips.emplace_back(row, coarse.dof(e, ic), 1.0 - xi);
                trips.emplace_back(row, coarse.dof(e, ic + 1), xi);
            }
        }
    }
    Eigen::SparseMatrix<double> P(fine.num_dofs(), coarse.num_dofs());
    P.setFromTriplets(trips.begin(), trips.end());
    P.makeCompressed();
    return P;
}

Eigen::VectorXd prolongate(const Mesh& coarse, const Mesh& fine, const Eigen::VectorXd& c) {
    if (c.size() != coarse.num_dofs()) {
        throw ValidationError("coefficient vector size does not match coarse mesh");
    }
    return prolongation_matrix(coarse, fine) * c;
}

}  // namespace graphfield
