// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/noise.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "graphfield/errors.hpp"

namespace graphfield {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double counter_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const std::uint64_t base = splitmix64(splitmix64(seed) ^ stream);
    const std::uint64_t h1 = splitmix64(base ^ (2 * counter));
    const std::uint64_t h2 = splitmix64(base ^ (2 * counter + 1));
    // u1 in (0,1] keeps the log finite; u2 in [0,1).
    const double u1 = static_cast<double>((h1 >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(h2 >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

WhiteNoiseSampler::WhiteNoiseSampler(const SparseMatrix& M, std::uint64_t seed)
    : seed_(seed), n_(static_cast<int>(M.rows())) {
    llt_.compute(M);
    if (llt_.info() != Eigen::Success) {
        throw SolverError("mass matrix Cholesky factorization failed");
    }
}

Eigen::VectorXd WhiteNoiseSampler::draw(std::uint64_t draw_index) const {
    Eigen::VectorXd z(n_);
    for (int i = 0; i < n_; ++i) {
        z[i] = counter_normal(seed_, draw_index, static_cast<std::uint64_t>(i));
    }
    // M = P^T L L^T P, so W = P^T L z has covariance M.
    return llt_.permutationPinv() * (llt_.matrixL() * z);
}

Eigen::MatrixXd WhiteNoiseSampler::draws(std::uint64_t first_index, int count) const {
    Eigen::MatrixXd W(n_, count);
    for (int j = 0; j < count; ++j) {
        W.col(j) = draw(first_index + static_cast<std::uint64_t>(j));
    }
    return W;
}

std::vector<FieldSample> sample_field(const OperatorPair& ops, double beta, double k,
                                      std::uint64_t seed, int n) {
    if (!(beta > 0.25 && beta <= 2.0)) {
        throw ValidationError("field exponent must lie in (1/4, 2], got " + std::to_string(beta));
    }
    if (n < 1) {
        throw ValidationError("sample count must be positive");
    }
    const WellposednessReport report =
        check_wellposedness(ops.mesh.graph(), ops.coeffs, ops.alpha);
    if (!report.passed()) {
        throw ValidationError("well-posedness check failed");
    }
    const WhiteNoiseSampler sampler(ops.M, seed);
    const Eigen::MatrixXd W = sampler.draws(0, n);
    const Eigen::MatrixXd U = apply_fractional_inverse(ops, FracExponent::of(beta), W, k);
    std::vector<FieldSample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        FieldSample s{ops.mesh, U.col(j), beta, seed, static_cast<std::uint64_t>(j), k,
                      kNoiseGenerator};
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace graphfield
