// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/covariance.hpp"

#include <cmath>

#include "graphfield/errors.hpp"
#include "graphfield/fractional.hpp"

namespace graphfield {

CovarianceMatrix covariance_matrix(const OperatorPair& ops, double beta, CovarianceMode mode,
                                   std::optional<double> k, int size_limit) {
    if (ops.num_dofs() > size_limit) {
        throw SizeLimitError("covariance matrix limited to " + std::to_string(size_limit) +
                             " dofs");
    }
    if (!(beta > 0.0)) {
        throw ValidationError("covariance exponent must be positive");
    }
    if (mode == CovarianceMode::Sinc && !(beta <= 1.0)) {
        throw ValidationError("the quadrature kernel needs 2 beta in (0, 2]");
    }
    const EigenSystem es = generalized_eigs(ops, ops.num_dofs(), EigsMethod::Dense);

    CovarianceMatrix cov;
    cov.mode = mode;
    cov.beta = beta;
    Eigen::VectorXd g(es.count());
    if (mode == CovarianceMode::Eigen) {
        for (int j = 0; j < es.count(); ++j) {
            g[j] = std::pow(es.values[j], -2.0 * beta);
        }
    } else {
        const FracExponent two_beta = FracExponent::of(2.0 * beta);
        const double step = k ? *k : default_sinc_step(beta, ops.mesh.h_max());
        cov.k = step;
        if (two_beta.remainder > 0.0) {
            const SincRule rule = plan_sinc(two_beta.remainder, step);
            for (int j = 0; j < es.count(); ++j) {
                g[j] = std::pow(es.values[j], -two_beta.integer_part) * rule.q(es.values[j]);
            }
        } else {
            for (int j = 0; j < es.count(); ++j) {
                g[j] = std::pow(es.values[j], -two_beta.integer_part);
            }
        }
    }
    cov.values = es.vectors * g.asDiagonal() * es.vectors.transpose();
    return cov;
}

double covariance_l2_error(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                           const Mesh& overkill) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != overkill.num_dofs()) {
        throw ValidationError("covariance matrices must both live on the overkill dof set");
    }
    const Eigen::VectorXd mu = overkill.lumped_measure();
    const Eigen::VectorXd sq = mu.array().sqrt();
    const Eigen::MatrixXd d = sq.asDiagonal() * (a - b) * sq.asDiagonal();
    return d.norm();
}

double kl_truncation_error(const EigenSystem& es, double beta, int n) {
    if (n < 0 || n > es.count()) {
        throw ValidationError("truncation index out of range");
    }
    double acc = 0.0;
    for (int j = es.count() - 1; j >= n; --j) {
        acc += std::pow(es.values[j], -2.0 * beta);
    }
    return std::sqrt(acc);
}

}  // namespace graphfield
