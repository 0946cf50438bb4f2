// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include "graphfield/assembly.hpp"
#include "graphfield/fractional.hpp"

namespace graphfield {

/// Stateless counter-based stream: every (seed, stream, counter) triple maps
/// to one standard normal, so parallel and serial sampling agree bit for bit.
std::uint64_t splitmix64(std::uint64_t x);
double counter_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Name recorded in sample provenance; bump when the stream changes.
inline constexpr const char* kNoiseGenerator = "splitmix64-boxmuller-v1";

/// Draws dual-pairing white-noise vectors W with W_i = <W_h, phi_i>,
/// distributed N(0, M), via the sparse Cholesky factor of the mass matrix:
/// W = R^T z with M = R^T R. Deterministic given (seed, draw index).
class WhiteNoiseSampler {
public:
    WhiteNoiseSampler(const SparseMatrix& M, std::uint64_t seed);

    Eigen::VectorXd draw(std::uint64_t draw_index) const;

    /// Columns are draws first_index, ..., first_index + count - 1.
    Eigen::MatrixXd draws(std::uint64_t first_index, int count) const;

    std::uint64_t seed() const { return seed_; }
    int dim() const { return n_; }

private:
    Eigen::SimplicialLLT<SparseMatrix> llt_;
    std::uint64_t seed_;
    int n_;
};

/// Whittle-Matern samples u = L_h^{-beta} W_h for fresh noise draws,
/// beta in (1/4, 2].
std::vector<FieldSample> sample_field(const OperatorPair& ops, double beta, double k,
                                      std::uint64_t seed, int n);

}  // namespace graphfield
