// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/assembly.hpp"

#include <cmath>
#include <vector>

#include <Eigen/SparseCholesky>

#include "graphfield/errors.hpp"

namespace graphfield {

namespace {

// 3-point Gauss-Legendre on [0,1], exact through degree 5.
struct GaussRule {
    double xi[3];
    double w[3];
};

GaussRule gauss3() {
    const double s = std::sqrt(3.0 / 5.0);
    return GaussRule{{0.5 * (1.0 - s), 0.5, 0.5 * (1.0 + s)}, {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0}};
}

}  // namespace

WellposednessReport check_wellposedness(const MetricGraph& g, const CoefficientField& coeffs,
                                        double alpha) {
    WellposednessReport r;
    r.S = std::abs(alpha) / g.min_degree();
    r.kappa0_sq = coeffs.kappa2_min(g);
    r.H0 = coeffs.H_min(g);
    r.l_min = g.min_edge_length();
    r.l_max = g.max_edge_length();
    r.assumption1_holds = (r.kappa0_sq > 4.0 * r.S / r.l_min) && (2.0 * r.S * r.l_max <= r.H0);
    r.assumption1alt_holds = alpha >= 0.0;
    return r;
}

SparseMatrix assemble_mass(const Mesh& mesh) {
    std::vector<Eigen::Triplet<double>> trips;
    const auto& g = mesh.graph();
    for (int e = 0; e < g.num_edges(); ++e) {
        const double h = mesh.h(e);
        const double diag = h / 3.0, off = h / 6.0;
        for (int j = 0; j < mesh.intervals(e); ++j) {
            const int a = mesh.dof(e, j), b = mesh.dof(e, j + 1);
            trips.emplace_back(a, a, diag);
            trips.emplace_back(b, b, diag);
            trips.emplace_back(a, b, off);
            trips.emplace_back(b, a, off);
        }
    }
    SparseMatrix M(mesh.num_dofs(), mesh.num_dofs());
    M.setFromTriplets(trips.begin(), trips.end());
    M.makeCompressed();
    return M;
}

SparseMatrix assemble_stiffness(const Mesh& mesh, const CoefficientField& coeffs, double alpha,
                                const AssemblyOptions& opts) {
    const GaussRule q = gauss3();
    std::vector<Eigen::Triplet<double>> trips;
    const auto& g = mesh.graph();
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edge(e);
        const EdgePoly& k2 = coeffs.kappa2(edge);
        const EdgePoly& H = coeffs.H(edge);
        const double h = mesh.h(e);
        for (int j = 0; j < mesh.intervals(e); ++j) {
            const double t0 = mesh.node_t(e, j);
            double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
            double grad = 0.0;
            for (int p = 0; p < 3; ++p) {
                const double x = t0 + q.xi[p] * h;
                const double k2x = k2(x);
                const double Hx = H(x);
                if (opts.enforce_positivity && (!(k2x > 0.0) || !(Hx > 0.0))) {
                    throw NonPositiveCoefficientError(
                        "coefficient not positive at quadrature point (edge id " +
                        std::to_string(edge.id) + ", t = " + std::to_string(x) + ")");
                }
                const double phi[2] = {1.0 - q.xi[p], q.xi[p]};
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) m[a][b] += q.w[p] * k2x * phi[a] * phi[b] * h;
                grad += q.w[p] * Hx / h;
            }
            const int d[2] = {mesh.dof(e, j), mesh.dof(e, j + 1)};
            const double s[2][2] = {{grad, -grad}, {-grad, grad}};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) trips.emplace_back(d[a], d[b], m[a][b] + s[a][b]);
        }
    }
    // Vertex term of the form: for a continuous basis it collapses to
    // alpha * f(v) g(v) at each vertex.
    if (alpha != 0.0) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            trips.emplace_back(mesh.vertex_dof(v), mesh.vertex_dof(v), alpha);
        }
    }
    SparseMatrix K(mesh.num_dofs(), mesh.num_dofs());
    K.setFromTriplets(trips.begin(), trips.end());
    K.makeCompressed();
    return K;
}

Eigen::VectorXd assemble_load(const Mesh& mesh, const EdgeFunction& f) {
    const GaussRule q = gauss3();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(mesh.num_dofs());
    const auto& g = mesh.graph();
    for (int e = 0; e < g.num_edges(); ++e) {
        const double h = mesh.h(e);
        for (int j = 0; j < mesh.intervals(e); ++j) {
            const double t0 = mesh.node_t(e, j);
            const int d[2] = {mesh.dof(e, j), mesh.dof(e, j + 1)};
            for (int p = 0; p < 3; ++p) {
                const double x = t0 + q.xi[p] * h;
                const double fv = f(e, x);
                b[d[0]] += q.w[p] * fv * (1.0 - q.xi[p]) * h;
                b[d[1]] += q.w[p] * fv * q.xi[p] * h;
            }
        }
    }
    return b;
}

Eigen::VectorXd project_l2(const Mesh& mesh, const SparseMatrix& M, const EdgeFunction& f) {
    const Eigen::VectorXd b = assemble_load(mesh, f);
    Eigen::SimplicialLLT<SparseMatrix> llt(M);
    if (llt.info() != Eigen::Success) {
        throw SolverError("mass matrix factorization failed");
    }
    return llt.solve(b);
}

SparseMatrix drop_dof(const SparseMatrix& A, int dof) {
    if (dof < 0 || dof >= A.rows()) {
        throw ValidationError("dof index out of range");
    }
    std::vector<Eigen::Triplet<double>> trips;
    for (int col = 0; col < A.outerSize(); ++col) {
        for (SparseMatrix::InnerIterator it(A, col); it; ++it) {
            if (it.row() == dof || it.col() == dof) continue;
            const int r = it.row() > dof ? static_cast<int>(it.row()) - 1 : static_cast<int>(it.row());
            const int c = it.col() > dof ? static_cast<int>(it.col()) - 1 : static_cast<int>(it.col());
            trips.emplace_back(r, c, it.value());
        }
    }
    SparseMatrix B(A.rows() - 1, A.cols() - 1);
    B.setFromTriplets(trips.begin(), trips.end());
    B.makeCompressed();
    return B;
}

OperatorPair build_operator_pair(const Mesh& mesh, const CoefficientField& coeffs, double alpha,
                                 const AssemblyOptions& opts) {
    OperatorPair ops{mesh, coeffs, alpha, assemble_mass(mesh),
                     assemble_stiffness(mesh, coeffs, alpha, opts)};
    return ops;
}

}  // namespace graphfield
