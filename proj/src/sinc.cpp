// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/sinc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "graphfield/errors.hpp"

namespace graphfield {

SincRule::SincRule(double beta, double k) : beta_(beta), k_(k) {
    if (!(beta > 0.0 && beta < 1.0)) {
        throw ValidationError("sinc exponent must lie in (0,1), got " + std::to_string(beta));
    }
    if (!(k > 0.0)) {
        throw ValidationError("sinc step must be positive");
    }
    const double pi2 = std::numbers::pi * std::numbers::pi;
    k_minus_ = static_cast<int>(std::ceil(pi2 / (4.0 * beta * k * k)));
    k_plus_ = static_cast<int>(std::ceil(pi2 / (4.0 * (1.0 - beta) * k * k)));
    const double c = 2.0 * k * std::sin(std::numbers::pi * beta) / std::numbers::pi;
    nodes_.reserve(static_cast<std::size_t>(k_minus_ + k_plus_ + 1));
    for (int l = -k_minus_; l <= k_plus_; ++l) {
        SincNode node;
        node.shift = std::exp(2.0 * l * k);
        node.weight = c * std::exp(2.0 * beta * l * k);
        nodes_.push_back(node);
    }
}

double SincRule::q(double lambda) const {
    double acc = 0.0;
    for (const SincNode& n : nodes_) {
        acc += n.weight / (1.0 + n.shift * lambda);
    }
    return acc;
}

SincRule plan_sinc(double beta, double k) { return SincRule(beta, k); }

double default_sinc_step(double beta, double h_hat) {
    if (!(h_hat > 0.0 && h_hat < 1.0)) {
        throw ValidationError("the step rule k = -1/(beta ln h) needs h in (0,1); got h = " +
                              std::to_string(h_hat) + ", pass an explicit step instead");
    }
    return -1.0 / (beta * std::log(h_hat));
}

}  // namespace graphfield
