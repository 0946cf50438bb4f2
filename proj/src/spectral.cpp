// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>

#include "graphfield/errors.hpp"

namespace graphfield {

namespace {

constexpr int kDenseLimit = 2000;

// Deterministic pseudo-random start vectors for the Lanczos restarts.
double lcg_unit(std::uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
}

void detect_clusters(EigenSystem& es) {
    es.clusters.clear();
    int begin = 0;
    for (int i = 1; i <= es.count(); ++i) {
        const bool boundary =
            i == es.count() ||
            es.values[i] - es.values[i - 1] > 1e-10 * std::max(std::abs(es.values[i]), 1.0);
        if (boundary) {
            es.clusters.emplace_back(begin, i);
            begin = i;
        }
    }
}

// Re-enforces M-orthonormality inside each cluster of equal eigenvalues.
void reorthonormalize_clusters(EigenSystem& es, const SparseMatrix& M) {
    for (const auto& [b, e] : es.clusters) {
        for (int i = b; i < e; ++i) {
            Eigen::VectorXd v = es.vectors.col(i);
            for (int j = b; j < i; ++j) {
                const Eigen::VectorXd& u = es.vectors.col(j);
                v -= u * (u.dot(M * v));
            }
            const double n = std::sqrt(v.dot(M * v));
            if (n > 0.0) es.vectors.col(i) = v / n;
        }
    }
}

EigenSystem dense_eigs(const SparseMatrix& K, const SparseMatrix& M, int m) {
    if (K.rows() > kDenseLimit) {
        throw SizeLimitError("dense eigensolve limited to " + std::to_string(kDenseLimit) +
                             " dofs, got " + std::to_string(K.rows()));
    }
    Eigen::MatrixXd Kd = Eigen::MatrixXd(K);
    Eigen::MatrixXd Md = Eigen::MatrixXd(M);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(Kd, Md);
    if (solver.info() != Eigen::Success) {
        throw SolverError("dense generalized eigensolver failed");
    }
    EigenSystem es;
    es.values = solver.eigenvalues().head(m);
    es.vectors = solver.eigenvectors().leftCols(m);
    detect_clusters(es);
    reorthonormalize_clusters(es, M);
    return es;
}

// Shift-invert Lanczos with full reorthogonalization on the operator
// K^{-1} M in the M inner product. Restarted with deflation against the
// converged set so repeated eigenvalues are recovered.
EigenSystem lanczos_eigs(const SparseMatrix& K, const SparseMatrix& M, int m) {
    const int n = static_cast<int>(K.rows());
    Eigen::SimplicialLDLT<SparseMatrix> kfac(K);
    if (kfac.info() != Eigen::Success) {
        throw SolverError("stiffness factorization failed in eigensolver");
    }

    Eigen::MatrixXd X(n, 0);   // converged eigenvectors, M-orthonormal
    Eigen::MatrixXd MX(n, 0);  // M * X (kept in sync)
    std::vector<double> lambdas;
    std::uint64_t rng = 0x9e3779b97f4a7c15ULL;

    const auto deflate = [&](Eigen::VectorXd& v) {
        if (X.cols() > 0) v -= X * (MX.transpose() * v);
    };

    const int max_restarts = 12;
    bool verified = false;
    for (int restart = 0; restart < max_restarts && !verified; ++restart) {
        const int want = std::max(m - static_cast<int>(lambdas.size()), 1);
        const int ncv = std::min(n - static_cast<int>(lambdas.size()),
                                 std::max(2 * want + 16, 24));
        if (ncv <= 0) break;

        Eigen::MatrixXd Q(n, ncv);
        Eigen::MatrixXd MQ(n, ncv);
        Eigen::VectorXd alpha = Eigen::VectorXd::Zero(ncv);
        Eigen::VectorXd beta = Eigen::VectorXd::Zero(ncv);

        Eigen::VectorXd q(n);
        for (int i = 0; i < n; ++i) q[i] = lcg_unit(rng);
        deflate(q);
        {
            Eigen::VectorXd Mq = M * q;
            const double nrm = std::sqrt(q.dot(Mq));
            if (nrm < 1e-300) continue;
            q /= nrm;
        }

        int steps = 0;
        for (int j = 0; j < ncv; ++j) {
            Q.col(j) = q;
            MQ.col(j) = M * q;
            Eigen::VectorXd w = kfac.solve(MQ.col(j));
            deflate(w);
            alpha[j] = w.dot(MQ.col(j));
            w -= alpha[j] * Q.col(j);
            if (j > 0) w -= beta[j - 1] * Q.col(j - 1);
            // Full reorthogonalization, twice.
            for (int pass = 0; pass < 2; ++pass) {
                for (int i = 0; i <= j; ++i) {
                    w -= Q.col(i) * (MQ.col(i).dot(w));
                }
                deflate(w);
            }
            steps = j + 1;
            const double nrm = std::sqrt(std::max(w.dot(M * w), 0.0));
            beta[j] = nrm;
            if (nrm < 1e-12 * std::max(std::abs(alpha[j]), 1.0)) break;  // invariant subspace
            q = w / nrm;
        }

        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
        for (int j = 0; j < steps; ++j) {
            T(j, j) = alpha[j];
            if (j + 1 < steps) T(j, j + 1) = T(j + 1, j) = beta[j];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tsolver(T);
        if (tsolver.info() != Eigen::Success) {
            throw SolverError("tridiagonal eigensolver failed");
        }

        // Largest theta of K^{-1}M <-> smallest lambda of the pencil. Accept
        // contiguously from the extremal end so no smaller eigenvalue can be
        // skipped; deflated restarts pick up the rest (and multiplicities).
        for (int idx = steps - 1; idx >= 0; --idx) {
            const double theta = tsolver.eigenvalues()[idx];
            if (theta <= 0.0) break;
            const double lam = 1.0 / theta;
            Eigen::VectorXd x = Q.leftCols(steps) * tsolver.eigenvectors().col(idx);
            deflate(x);
            Eigen::VectorXd Mx = M * x;
            const double xn = std::sqrt(x.dot(Mx));
            if (xn < 0.5) continue;  // direction already covered
            x /= xn;
            Mx /= xn;
            const Eigen::VectorXd resid = K * x - lam * Mx;
            if (resid.norm() > 1e-9 * std::max(std::abs(lam), 1.0)) break;
            X.conservativeResize(n, X.cols() + 1);
            MX.conservativeResize(n, MX.cols() + 1);
            X.col(X.cols() - 1) = x;
            MX.col(MX.cols() - 1) = Mx;
            lambdas.push_back(lam);
        }

        if (static_cast<int>(lambdas.size()) >= m) {
            // Inertia certificate: no pencil eigenvalue below the accepted
            // range may be missing. If the indefinite factorization fails the
            // check is inconclusive and the accepted set stands.
            std::vector<double> sorted = lambdas;
            std::sort(sorted.begin(), sorted.end());
            const double sigma = sorted[static_cast<std::size_t>(m - 1)] * (1.0 + 1e-7);
            int below = 0;
            for (const double l : lambdas) {
                if (l < sigma) ++below;
            }
            SparseMatrix shifted = K - sigma * M;
            Eigen::SimplicialLDLT<SparseMatrix> sfac(shifted);
            verified = true;
            if (sfac.info() == Eigen::Success) {
                int neg = 0;
                const auto& D = sfac.vectorD();
                for (int i = 0; i < D.size(); ++i) {
                    if (D[i] < 0.0) ++neg;
                }
                if (neg > below) verified = false;  // missed one; keep restarting
            }
        }
    }

    if (static_cast<int>(lambdas.size()) < m) {
        throw SolverError("shift-invert Lanczos did not converge to the requested count");
    }

    // Sort ascending and keep the m smallest.
    std::vector<int> order(lambdas.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lambdas[a] < lambdas[b]; });
    EigenSystem es;
    es.values.resize(m);
    es.vectors.resize(n, m);
    for (int i = 0; i < m; ++i) {
        es.values[i] = lambdas[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        es.vectors.col(i) = X.col(order[static_cast<std::size_t>(i)]);
    }
    detect_clusters(es);
    reorthonormalize_clusters(es, M);
    return es;
}

}  // namespace

EigenSystem generalized_eigs(const SparseMatrix& K, const SparseMatrix& M, int m,
                             EigsMethod method) {
    const int n = static_cast<int>(K.rows());
    if (m < 1 || m > n) {
        throw ValidationError("eigen count must be in [1, N]");
    }
    if (K.rows() != K.cols() || M.rows() != M.cols() || K.rows() != M.rows()) {
        throw ValidationError("matrix dimensions mismatch");
    }
    switch (method) {
        case EigsMethod::Dense:
            return dense_eigs(K, M, m);
        case EigsMethod::ShiftInvert:
            return lanczos_eigs(K, M, m);
        case EigsMethod::Auto:
        default:
            if (n <= 200 || 3 * m >= n) return dense_eigs(K, M, m);
            return lanczos_eigs(K, M, m);
    }
}

EigenSystem generalized_eigs(const OperatorPair& ops, int m, EigsMethod method) {
    return generalized_eigs(ops.K, ops.M, m, method);
}

WeylBounds weyl_check(const EigenSystem& es, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo || n_hi > es.count()) {
        throw ValidationError("weyl window out of range");
    }
    WeylBounds w;
    w.C1 = std::numeric_limits<double>::infinity();
    w.C2 = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double r = es.values[n - 1] / (static_cast<double>(n) * n);
        w.C1 = std::min(w.C1, r);
        w.C2 = std::max(w.C2, r);
    }
    return w;
}

InterlacingResult interlacing_check(const Mesh& mesh, const CoefficientField& coeffs, int vertex,
                                    double alpha, std::optional<double> alpha_tilde,
                                    double rel_tol) {
    if (vertex < 0 || vertex >= mesh.graph().num_vertices()) {
        throw ValidationError("vertex index out of range");
    }
    if (alpha_tilde && !(*alpha_tilde > alpha)) {
        throw ValidationError("interlacing requires alpha < alpha_tilde");
    }
    const SparseMatrix M = assemble_mass(mesh);
    const SparseMatrix K = assemble_stiffness(mesh, coeffs, alpha);
    const int n = mesh.num_dofs();
    const int vd = mesh.vertex_dof(vertex);

    Eigen::VectorXd base = generalized_eigs(K, M, n, EigsMethod::Dense).values;
    Eigen::VectorXd pert;
    if (alpha_tilde) {
        SparseMatrix Kt = K;
        Kt.coeffRef(vd, vd) += *alpha_tilde - alpha;
        pert = generalized_eigs(Kt, M, n, EigsMethod::Dense).values;
    } else {
        const SparseMatrix Kd = drop_dof(K, vd);
        const SparseMatrix Md = drop_dof(M, vd);
        pert = generalized_eigs(Kd, Md, n - 1, EigsMethod::Dense).values;
    }

    InterlacingResult res;
    res.holds = true;
    res.worst_margin = std::numeric_limits<double>::infinity();
    const int np = static_cast<int>(pert.size());
    for (int i = 0; i < np; ++i) {
        const double tol_lo = rel_tol * std::max(std::abs(base[i]), 1.0);
        const double lo = pert[i] - base[i];
        res.worst_margin = std::min(res.worst_margin, lo);
        if (lo < -tol_lo) res.holds = false;
        if (i + 1 < n) {
            const double tol_hi = rel_tol * std::max(std::abs(pert[i]), 1.0);
            const double hi = base[i + 1] - pert[i];
            res.worst_margin = std::min(res.worst_margin, hi);
            if (hi < -tol_hi) res.holds = false;
        }
    }
    return res;
}

}  // namespace graphfield
