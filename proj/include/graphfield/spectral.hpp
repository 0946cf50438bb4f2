// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphfield/assembly.hpp"

namespace graphfield {

/// Generalized eigenpairs K e = lambda M e, ascending, with M-orthonormal
/// eigenvectors stored as columns.
struct EigenSystem {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;

    /// Half-open index ranges of eigenvalues that agree to relative 1e-10.
    std::vector<std::pair<int, int>> clusters;

    int count() const { return static_cast<int>(values.size()); }
};

enum class EigsMethod {
    Auto,         ///< dense for small problems or large m, shift-invert otherwise
    Dense,        ///< full dense solve (validation oracle, N <= 2000)
    ShiftInvert,  ///< Lanczos on K^{-1} M with deflated restarts
};

/// Computes the m smallest eigenpairs of the pencil (K, M). K must be
/// symmetric (positive definite for the shift-invert path), M symmetric
/// positive definite.
EigenSystem generalized_eigs(const SparseMatrix& K, const SparseMatrix& M, int m,
                             EigsMethod method = EigsMethod::Auto);

EigenSystem generalized_eigs(const OperatorPair& ops, int m, EigsMethod method = EigsMethod::Auto);

/// Weyl-law constants over an index window: C1 = min lambda_n / n^2,
/// C2 = max lambda_n / n^2 for n in [n_lo, n_hi] (1-based).
struct WeylBounds {
    double C1 = 0.0;
    double C2 = 0.0;
};

WeylBounds weyl_check(const EigenSystem& es, int n_lo, int n_hi);

/// Result of the discrete interlacing test between a vertex coefficient
/// alpha and a larger one alpha_tilde (nullopt = Dirichlet at the vertex).
struct InterlacingResult {
    bool holds = false;
    /// Smallest slack over all inequalities in the chain (before tolerance);
    /// negative values within tolerance still pass.
    double worst_margin = 0.0;
};

/// Checks lambda_n(alpha) <= lambda_n(alpha_tilde) <= lambda_{n+1}(alpha) for
/// the pencil where only the condition at one vertex differs:
/// K(alpha_tilde) = K(alpha) + (alpha_tilde - alpha) e_v e_v^T, or the
/// vertex dof removed entirely for the Dirichlet endpoint.
InterlacingResult interlacing_check(const Mesh& mesh, const CoefficientField& coeffs, int vertex,
                                    double alpha, std::optional<double> alpha_tilde,
                                    double rel_tol = 1e-8);

}  // namespace graphfield
