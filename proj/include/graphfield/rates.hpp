// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

namespace graphfield {

/// Ordinary least squares for ln err = c + r ln h over (h, err) pairs.
/// Returns (c, r). Requires at least two pairs, all entries positive.
std::pair<double, double> fit_rate(const std::vector<std::pair<double, double>>& h_err);

}  // namespace graphfield
