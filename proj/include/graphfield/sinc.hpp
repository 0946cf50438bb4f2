// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace graphfield {

/// One quadrature node: resolvent shift t_l = exp(2 l k) and weight
/// w_l = (2 k sin(pi beta) / pi) exp(2 beta l k).
struct SincNode {
    double shift = 0.0;
    double weight = 0.0;
};

/// Sinc quadrature rule approximating the scalar map x -> x^{-beta} on the
/// positive axis by sum_l w_l / (1 + t_l x), for beta in (0,1). The index
/// runs l = -K^-, ..., K^+ with K^- = ceil(pi^2 / (4 beta k^2)) and
/// K^+ = ceil(pi^2 / (4 (1-beta) k^2)); the error decays like
/// exp(-pi^2 / (2k)) uniformly over the spectrum.
class SincRule {
public:
    SincRule(double beta, double k);

    double beta() const { return beta_; }
    double step() const { return k_; }
    int k_minus() const { return k_minus_; }
    int k_plus() const { return k_plus_; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<SincNode>& nodes() const { return nodes_; }

    /// Evaluates q_{k,beta}(lambda), the quadrature approximation of
    /// lambda^{-beta}.
    double q(double lambda) const;

private:
    double beta_;
    double k_;
    int k_minus_;
    int k_plus_;
    std::vector<SincNode> nodes_;
};

SincRule plan_sinc(double beta, double k);

/// The calibration k = -1 / (beta ln h_hat); requires h_hat in (0, 1).
double default_sinc_step(double beta, double h_hat);

}  // namespace graphfield
