// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/rates.hpp"

#include <cmath>

#include "graphfield/errors.hpp"

namespace graphfield {

std::pair<double, double> fit_rate(const std::vector<std::pair<double, double>>& h_err) {
    if (h_err.size() < 2) {
        throw ValidationError("rate fit needs at least two (h, error) pairs");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [h, err] : h_err) {
        if (!(h > 0.0) || !(err > 0.0)) {
            throw ValidationError("rate fit needs positive mesh sizes and errors");
        }
        const double x = std::log(h);
        const double y = std::log(err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(h_err.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        throw ValidationError("rate fit needs at least two distinct mesh sizes");
    }
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    return {intercept, slope};
}

}  // namespace graphfield
