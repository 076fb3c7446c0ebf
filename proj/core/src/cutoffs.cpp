#include "latomo/cutoffs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "latomo/geometry.hpp"

namespace latomo {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}
} // namespace

double smoothstep(int order, double x) {
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    // S_N with N = order - 1: derivatives 1..order-1 vanish at both ends.
    int N = order - 1;
    double acc = 0.0;
    double xn = 1.0;
    for (int n = 0; n <= N; ++n) {
        acc += binomial(N + n, n) * binomial(2 * N + 1, N - n) * xn;
        xn *= -x;
    }
    return std::pow(x, N + 1) * acc;
}

CutoffSpec CutoffSpec::none() {
    CutoffSpec c;
    c.kind = Kind::None;
    c.a = 0.0;
    c.b = kTwoPi;
    return c;
}

CutoffSpec CutoffSpec::hard(double a, double b) {
    if (!(a < b) || a < 0.0 || b > kTwoPi + 1e-12)
        throw std::invalid_argument("hard cutoff requires 0 <= a < b <= 2*pi");
    CutoffSpec c;
    c.kind = Kind::Hard;
    c.a = a;
    c.b = b;
    return c;
}

CutoffSpec CutoffSpec::smooth(double a, double b, double transition, int order) {
    return smooth_inner(a, b, a + transition, b - transition, order);
}

CutoffSpec CutoffSpec::smooth_inner(double a, double b, double a1, double b1, int order) {
    if (!(a < b) || a < 0.0 || b > kTwoPi + 1e-12)
        throw std::invalid_argument("smooth cutoff requires 0 <= a < b <= 2*pi");
    if (!(a < a1 && a1 < b1 && b1 < b))
        throw std::invalid_argument("smooth cutoff requires a < a' < b' < b");
    if (order < 2)
        throw std::invalid_argument("smooth cutoff requires order >= 2");
    CutoffSpec c;
    c.kind = Kind::Smooth;
    c.a = a;
    c.b = b;
    c.a1 = a1;
    c.b1 = b1;
    c.order = order;
    return c;
}

double CutoffSpec::eval(double phi) const {
    if (kind == Kind::None)
        return 1.0;
    double p = wrap_angle(phi);
    if (kind == Kind::Hard)
        return (p > a && p < b) ? 1.0 : 0.0;
    if (p <= a || p >= b)
        return 0.0;
    if (p < a1)
        return smoothstep(order, (p - a) / (a1 - a));
    if (p > b1)
        return smoothstep(order, (b - p) / (b - b1));
    return 1.0;
}

Sinogram apply_cutoff(const Sinogram& g, const CutoffSpec& c) {
    Sinogram out = g;
    for (int i = 0; i < g.grid.n_phi; ++i) {
        double w = c.eval(g.grid.phi(i));
        if (w == 1.0)
            continue;
        double* row = out.row(i);
        for (int j = 0; j < g.grid.n_s; ++j)
            row[j] *= w;
    }
    return out;
}

} // namespace latomo
