// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "graphfield/coefficients.hpp"
#include "graphfield/mesh.hpp"

namespace graphfield {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Scalar data sampled on the graph: (edge index, arc coordinate) -> value.
using EdgeFunction = std::function<double(int, double)>;

struct AssemblyOptions {
    /// Coefficients are required to be positive at every quadrature point.
    /// Tests may switch the check off (e.g. kappa^2 = 0 kernels).
    bool enforce_positivity = true;
};

/// Assumption checks for the bilinear form. assumption1 is the edge-length
/// criterion kappa0^2 > 4 S / l_min together with 2 S l_max <= H0, with
/// S = |alpha| / d0; assumption1_alt is alpha >= 0. Either one suffices.
struct WellposednessReport {
    double S = 0.0;
    double kappa0_sq = 0.0;
    double H0 = 0.0;
    double l_min = 0.0;
    double l_max = 0.0;
    bool assumption1_holds = false;
    bool assumption1alt_holds = false;

    bool passed() const { return assumption1_holds || assumption1alt_holds; }
};

WellposednessReport check_wellposedness(const MetricGraph& g, const CoefficientField& coeffs,
                                        double alpha);

/// Gram matrix of the hat basis, symmetric positive definite.
SparseMatrix assemble_mass(const Mesh& mesh);

/// Matrix of the bilinear form: the kappa^2-weighted mass part plus the
/// H-weighted gradient part (3-point Gauss per element, exact for the cubic
/// coefficients), plus alpha on every vertex-dof diagonal.
SparseMatrix assemble_stiffness(const Mesh& mesh, const CoefficientField& coeffs, double alpha,
                                const AssemblyOptions& opts = {});

/// Load vector b_i = (f, phi_i), 3-point Gauss per element.
Eigen::VectorXd assemble_load(const Mesh& mesh, const EdgeFunction& f);

/// Coefficients of the L2-orthogonal projection of f onto the hat space.
Eigen::VectorXd project_l2(const Mesh& mesh, const SparseMatrix& M, const EdgeFunction& f);

/// Removes one dof (row and column); realizes a Dirichlet condition at a
/// vertex exactly rather than by penalty.
SparseMatrix drop_dof(const SparseMatrix& A, int dof);

/// Mass and stiffness pair for one discretization, immutable once built.
struct OperatorPair {
    Mesh mesh;
    CoefficientField coeffs;
    double alpha = 0.0;
    SparseMatrix M;
    SparseMatrix K;

    int num_dofs() const { return mesh.num_dofs(); }
};

OperatorPair build_operator_pair(const Mesh& mesh, const CoefficientField& coeffs, double alpha,
                                 const AssemblyOptions& opts = {});

}  // namespace graphfield
