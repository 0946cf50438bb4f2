// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include <Eigen/Dense>

#include "graphfield/assembly.hpp"
#include "graphfield/spectral.hpp"

namespace graphfield {

enum class CovarianceMode {
    Eigen,  ///< spectral kernel lambda_j^{-2 beta}
    Sinc,   ///< quadrature kernel: the integer/fraction split of 2 beta
};

/// Dense covariance of the discrete field at the dof locations (nodal values
/// of eigenvectors are their coefficients).
struct CovarianceMatrix {
    Eigen::MatrixXd values;
    CovarianceMode mode = CovarianceMode::Eigen;
    double beta = 0.0;
    double k = 0.0;  ///< quadrature step (sinc mode)
};

/// Builds the covariance matrix by a full dense eigendecomposition;
/// N_h is limited to size_limit. In sinc mode k defaults to the
/// -1/(beta ln h_hat) rule on the pair's mesh.
CovarianceMatrix covariance_matrix(const OperatorPair& ops, double beta, CovarianceMode mode,
                                   std::optional<double> k = {}, int size_limit = 2000);

/// L2(Gamma x Gamma) distance of two covariance matrices sampled on the same
/// (overkill) dof set, with each dof weighted by its half-element measure:
/// sqrt(sum_{i,m} (a_im - b_im)^2 mu_i mu_m).
double covariance_l2_error(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                           const Mesh& overkill);

/// Mean-square truncation error of the discrete KL expansion after n modes:
/// sqrt(sum_{j>n} lambda_{j,h}^{-2 beta}) over the computed eigenvalues.
double kl_truncation_error(const EigenSystem& es, double beta, int n);

}  // namespace graphfield
