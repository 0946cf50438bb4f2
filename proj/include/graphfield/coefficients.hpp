// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <string>

#include "graphfield/metric_graph.hpp"

namespace graphfield {

/// Polynomial of degree <= 3 in the arc-length parameter of one edge.
struct EdgePoly {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    static EdgePoly constant(double v) { return EdgePoly{{v, 0.0, 0.0, 0.0}}; }

    double operator()(double t) const { return ((c[3] * t + c[2]) * t + c[1]) * t + c[0]; }

    /// Exact minimum over [0, len] (endpoints plus real critical points).
    double min_on(double len) const;

    bool is_constant() const { return c[1] == 0.0 && c[2] == 0.0 && c[3] == 0.0; }
};

/// The operator coefficients kappa^2(x) and H(x): a global polynomial each,
/// optionally overridden per edge id. Scalars are the degree-0 case.
class CoefficientField {
public:
    CoefficientField() : kappa2_(EdgePoly::constant(1.0)), H_(EdgePoly::constant(1.0)) {}

    static CoefficientField constants(double kappa2, double H) {
        CoefficientField f;
        f.kappa2_ = EdgePoly::constant(kappa2);
        f.H_ = EdgePoly::constant(H);
        return f;
    }

    void set_kappa2(const EdgePoly& p) { kappa2_ = p; }
    void set_H(const EdgePoly& p) { H_ = p; }
    void set_kappa2(int edge_id, const EdgePoly& p) { kappa2_per_edge_[edge_id] = p; }
    void set_H(int edge_id, const EdgePoly& p) { H_per_edge_[edge_id] = p; }

    const EdgePoly& kappa2(const Edge& e) const {
        auto it = kappa2_per_edge_.find(e.id);
        return it == kappa2_per_edge_.end() ? kappa2_ : it->second;
    }
    const EdgePoly& H(const Edge& e) const {
        auto it = H_per_edge_.find(e.id);
        return it == H_per_edge_.end() ? H_ : it->second;
    }

    /// Exact infima over the whole graph.
    double kappa2_min(const MetricGraph& g) const;
    double H_min(const MetricGraph& g) const;

private:
    EdgePoly kappa2_;
    EdgePoly H_;
    std::map<int, EdgePoly> kappa2_per_edge_;
    std::map<int, EdgePoly> H_per_edge_;
};

/// Parses "1.5" or "[c0,c1,c2,c3]" (shorter lists are zero-padded).
EdgePoly parse_poly(const std::string& text);

}  // namespace graphfield
