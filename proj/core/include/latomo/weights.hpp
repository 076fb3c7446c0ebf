#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "latomo/geometry.hpp"

namespace latomo {

/// Smooth, strictly positive, 2*pi-periodic line weight mu(phi, x).
/// constant(c):    mu = c, c > 0
/// exponential(c): mu = exp(c * x.theta(phi)); not symmetric under
///                 (phi, s) -> (phi + pi, -s) for c != 0.
struct WeightSpec {
    enum class Kind { Constant, Exponential };

    Kind kind{Kind::Constant};
    double c{1.0};

    static WeightSpec constant(double c) {
        if (c <= 0.0)
            throw std::invalid_argument("constant weight requires c > 0");
        return WeightSpec{Kind::Constant, c};
    }
    static WeightSpec exponential(double c) { return WeightSpec{Kind::Exponential, c}; }
    static WeightSpec unit() { return WeightSpec{Kind::Constant, 1.0}; }

    double eval(double phi, Vec2 x) const {
        if (kind == Kind::Constant)
            return c;
        return std::exp(c * dot(x, theta(phi)));
    }

    bool is_unit() const { return kind == Kind::Constant && c == 1.0; }
};

} // namespace latomo
