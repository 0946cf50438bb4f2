// Copyright (c) 2026 The graphfield authors.
// SPDX-License-Identifier: Apache-2.0

#include "graphfield/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphfield/errors.hpp"

namespace graphfield {

double EdgePoly::min_on(double len) const {
    double m = std::min((*this)(0.0), (*this)(len));
    // Critical points: roots of 3 c3 t^2 + 2 c2 t + c1.
    const double a = 3.0 * c[3], b = 2.0 * c[2], d = c[1];
    if (a == 0.0) {
        if (b != 0.0) {
            const double t = -d / b;
            if (t > 0.0 && t < len) m = std::min(m, (*this)(t));
        }
    } else {
        const double disc = b * b - 4.0 * a * d;
        if (disc >= 0.0) {
            const double s = std::sqrt(disc);
            for (const double t : {(-b - s) / (2.0 * a), (-b + s) / (2.0 * a)}) {
                if (t > 0.0 && t < len) m = std::min(m, (*this)(t));
            }
        }
    }
    return m;
}

double CoefficientField::kappa2_min(const MetricGraph& g) const {
    double m = std::numeric_limits<double>::infinity();
    for (const Edge& e : g.edges()) m = std::min(m, kappa2(e).min_on(e.length));
    return m;
}

double CoefficientField::H_min(const MetricGraph& g) const {
    double m = std::numeric_limits<double>::infinity();
    for (const Edge& e : g.edges()) m = std::min(m, H(e).min_on(e.length));
    return m;
}

EdgePoly parse_poly(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return std::isspace(ch); }), s.end());
    if (s.empty()) {
        throw ConfigError("empty coefficient");
    }
    EdgePoly p;
    if (s.front() == '[') {
        if (s.back() != ']') {
            throw ConfigError("unterminated coefficient list: " + text);
        }
        std::istringstream in(s.substr(1, s.size() - 2));
        std::string item;
        std::size_t i = 0;
        while (std::getline(in, item, ',')) {
            if (i >= 4) {
                throw ConfigError("coefficient polynomials have degree <= 3: " + text);
            }
            try {
                p.c[i++] = std::stod(item);
            } catch (const std::exception&) {
                throw ConfigError("bad coefficient value: " + item);
            }
        }
    } else {
        try {
            p = EdgePoly::constant(std::stod(s));
        } catch (const std::exception&) {
            throw ConfigError("bad coefficient value: " + text);
        }
    }
    return p;
}

}  // namespace graphfield
