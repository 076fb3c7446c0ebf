#pragma once

#include "latomo/grids.hpp"

namespace latomo {

/// Angular cutoff applied to sinogram rows.
///   hard:   characteristic function of the open interval (a, b)
///   smooth: 1 on [a1, b1], 0 outside (a, b), C^order transitions built
///           from the polynomial smoothstep
///   none:   constant 1 (full data)
struct CutoffSpec {
    enum class Kind { None, Hard, Smooth };

    Kind kind{Kind::None};
    double a{0.0};
    double b{0.0};
    double a1{0.0}; // inner plateau start (smooth only)
    double b1{0.0}; // inner plateau end
    int order{5};

    static CutoffSpec none();
    static CutoffSpec hard(double a, double b);
    static CutoffSpec smooth(double a, double b, double transition, int order = 5);
    static CutoffSpec smooth_inner(double a, double b, double a1, double b1, int order = 5);

    double eval(double phi) const;
    double width() const { return kind == Kind::None ? 6.283185307179586 : b - a; }
};

/// Polynomial smoothstep with derivatives 1..order-1 vanishing at 0 and 1.
double smoothstep(int order, double x);

/// Multiply each angle row by the cutoff value at its angle.
Sinogram apply_cutoff(const Sinogram& g, const CutoffSpec& c);

} // namespace latomo
