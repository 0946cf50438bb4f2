// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphfield/assembly.hpp"
#include "graphfield/rates.hpp"

namespace graphfield {

/// Configuration of a convergence study: a mesh hierarchy with max_h = 2^-l
/// for l in [level_lo, level_hi], an overkill reference level above it, and
/// coupled noise replication.
struct ExperimentConfig {
    std::string graph_source = "tadpole";
    CoefficientField coeffs = CoefficientField::constants(1.0, 1.0);
    double alpha = 0.0;
    std::vector<double> betas{0.5};
    int level_lo = 3;
    int level_hi = 6;
    int overkill_level = 10;
    int replicates = 10;
    std::uint64_t seed = 1;
    std::optional<double> k_override;
    std::string f_spec = "one";  ///< deterministic data: zero|one|noise|[c0,c1,c2,c3]
    std::string out_dir;         ///< empty = no CSV output
};

struct RatePoint {
    int level = 0;
    double h = 0.0;
    double error = 0.0;
};

struct RateFit {
    double beta = 0.0;
    std::vector<RatePoint> points;
    double fitted = 0.0;
    double theoretical = 0.0;
};

struct RateTable {
    std::vector<RateFit> fits;
};

/// Strong mean-square error of the sampled field against a coupled overkill
/// reference; theoretical rate 2 beta - 1/2.
RateTable run_strong_convergence(const ExperimentConfig& cfg);

/// L2(Gamma x Gamma) error of the sinc covariance kernel against the eigen
/// kernel on the overkill mesh; theoretical rate min(4 beta - 1/2, 2).
RateTable run_covariance_convergence(const ExperimentConfig& cfg);

/// Deterministic solve against the overkill reference with data from
/// cfg.f_spec; theoretical rate 2 for smooth data, min(2 beta, 2) for the
/// fixed white-noise realization.
RateTable run_deterministic_convergence(const ExperimentConfig& cfg);

/// Writes errors.csv (beta,level,h,error) and rates.csv
/// (beta,fitted,theoretical) into out_dir.
void write_rate_csvs(const RateTable& table, const std::string& out_dir);

/// Resolves a data-field spec to a callable: "zero", "one", or a polynomial
/// "[c0,c1,c2,c3]" in the arc-length parameter of each edge.
EdgeFunction resolve_data_field(const std::string& f_spec);

}  // namespace graphfield
