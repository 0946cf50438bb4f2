// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/fractional.hpp"

#include <cmath>
#include <string>

#include "graphfield/errors.hpp"
#include "graphfield/spectral.hpp"

namespace graphfield {

FracExponent FracExponent::of(double gamma) {
    if (!(gamma > 0.0 && gamma <= 2.0)) {
        throw ValidationError("fractional exponent must lie in (0,2], got " +
                              std::to_string(gamma));
    }
    FracExponent g;
    g.gamma = gamma;
    g.integer_part = static_cast<int>(std::floor(gamma + 1e-12));
    g.remainder = gamma - g.integer_part;
    if (g.remainder < 1e-12) g.remainder = 0.0;
    return g;
}

FractionalSolver::FractionalSolver(const OperatorPair& ops) : ops_(ops) {
    // M, K and M + tK share one sparsity pattern (element adjacency plus
    // the vertex diagonal), so the ordering is computed once.
    const SparseMatrix pattern = ops_.M + ops_.K;
    shifted_.analyzePattern(pattern);
    kfac_.analyzePattern(pattern);
}

Eigen::MatrixXd FractionalSolver::solve_shifted(double t, const Eigen::MatrixXd& B) const {
    if (!(t >= 0.0)) {
        throw ValidationError("resolvent shift must be nonnegative");
    }
    const SparseMatrix A = ops_.M + t * ops_.K;
    shifted_.factorize(A);
    if (shifted_.info() != Eigen::Success) {
        throw SolverError("resolvent factorization failed at shift t = " + std::to_string(t));
    }
    Eigen::MatrixXd X = shifted_.solve(B);
    const double bn = B.norm();
    if (bn > 0.0) {
        Eigen::MatrixXd R = B - A * X;
        if (R.norm() > 1e-10 * bn) {
            X += shifted_.solve(R);
            R = B - A * X;
            if (R.norm() > 1e-10 * bn) {
                throw SolverError("resolvent solve exceeded residual tolerance at t = " +
                                  std::to_string(t));
            }
        }
    }
    return X;
}

const Eigen::SimplicialLDLT<SparseMatrix>& FractionalSolver::stiffness_solver() const {
    if (!kfac_ready_) {
        kfac_.factorize(ops_.K);
        if (kfac_.info() != Eigen::Success) {
            throw SolverError("stiffness factorization failed");
        }
        kfac_ready_ = true;
    }
    return kfac_;
}

Eigen::VectorXd FractionalSolver::resolve(double t, const Eigen::VectorXd& b) const {
    return solve_shifted(t, b);
}

Eigen::MatrixXd FractionalSolver::resolve(double t, const Eigen::MatrixXd& B) const {
    return solve_shifted(t, B);
}

Eigen::MatrixXd FractionalSolver::apply_inverse(const FracExponent& gamma, const Eigen::MatrixXd& B,
                                                double k) const {
    if (B.rows() != ops_.num_dofs()) {
        throw ValidationError("dual vector size does not match operator");
    }
    Eigen::MatrixXd X;
    int exact_solves = gamma.integer_part;
    if (gamma.remainder > 0.0) {
        const SincRule rule = plan_sinc(gamma.remainder, k);
        X = Eigen::MatrixXd::Zero(B.rows(), B.cols());
        for (const SincNode& node : rule.nodes()) {
            X += node.weight * solve_shifted(node.shift, B);
        }
    } else {
        X = stiffness_solver().solve(B);
        --exact_solves;
    }
    for (int i = 0; i < exact_solves; ++i) {
        X = stiffness_solver().solve(ops_.M * X);
    }
    return X;
}

Eigen::VectorXd FractionalSolver::apply_inverse(const FracExponent& gamma,
                                                const Eigen::VectorXd& b, double k) const {
    return apply_inverse(gamma, Eigen::MatrixXd(b), k).col(0);
}

Eigen::VectorXd apply_resolvent(const OperatorPair& ops, double t, const Eigen::VectorXd& b) {
    return FractionalSolver(ops).resolve(t, b);
}

Eigen::VectorXd apply_fractional_inverse(const OperatorPair& ops, const FracExponent& gamma,
                                         const Eigen::VectorXd& b, double k) {
    return FractionalSolver(ops).apply_inverse(gamma, b, k);
}

Eigen::MatrixXd apply_fractional_inverse(const OperatorPair& ops, const FracExponent& gamma,
                                         const Eigen::MatrixXd& B, double k) {
    return FractionalSolver(ops).apply_inverse(gamma, B, k);
}

FieldSample solve_deterministic(const MetricGraph& g, const CoefficientField& coeffs, double alpha,
                                double beta, const EdgeFunction& f, double max_h,
                                std::optional<double> k) {
    const WellposednessReport report = check_wellposedness(g, coeffs, alpha);
    if (!report.passed()) {
        throw ValidationError("well-posedness check failed (S = " + std::to_string(report.S) +
                              ")");
    }
    Mesh mesh(g, max_h);
    const OperatorPair ops = build_operator_pair(mesh, coeffs, alpha);
    const FracExponent gamma = FracExponent::of(beta);
    double step = 0.0;
    if (k) {
        step = *k;
    } else if (gamma.remainder > 0.0) {
        step = default_sinc_step(beta, mesh.h_max());
    }
    const Eigen::VectorXd b = assemble_load(mesh, f);
    FieldSample s{mesh, apply_fractional_inverse(ops, gamma, b, step), beta, 0, 0, step, ""};
    return s;
}

Eigen::VectorXd fractional_eigen_oracle(const OperatorPair& ops, double gamma,
                                        const Eigen::VectorXd& b, int size_limit) {
    if (gamma < 0.0) {
        throw ValidationError("oracle exponent must be nonnegative");
    }
    if (ops.num_dofs() > size_limit) {
        throw SizeLimitError("eigen oracle limited to " + std::to_string(size_limit) + " dofs");
    }
    const EigenSystem es = generalized_eigs(ops, ops.num_dofs(), EigsMethod::Dense);
    const Eigen::VectorXd proj = es.vectors.transpose() * b;
    Eigen::VectorXd scaled(proj.size());
    for (int j = 0; j < proj.size(); ++j) {
        scaled[j] = std::pow(es.values[j], -gamma) * proj[j];
    }
    return es.vectors * scaled;
}

}  // namespace graphfield
