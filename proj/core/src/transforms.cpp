#include "latomo/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "latomo/threading.hpp"

namespace latomo {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
} // namespace

Sinogram forward_analytic(const Phantom& phantom, const SinogramGrid& grid, int threads) {
    Sinogram out(grid);
    parallel_for(grid.n_phi, threads, [&](long long i) {
        double phi = grid.phi(static_cast<int>(i));
        double* row = out.row(static_cast<int>(i));
        for (int j = 0; j < grid.n_s; ++j) {
            double s = grid.s(j);
            double sum = 0.0;
            for (const auto& e : phantom.components)
                sum += chord_length(e, phi, s);
            row[j] = sum;
        }
    });
    return out;
}

namespace {

// Composite midpoint quadrature along the line s*theta + t*theta_perp.
template <typename EvalF>
Sinogram forward_quadrature(const EvalF& f, const WeightSpec& weight, const SinogramGrid& grid,
                            double step, int threads) {
    if (step <= 0.0)
        throw std::invalid_argument("forward_numeric: step must be positive");
    if (step > grid.ds() * (1.0 + 1e-12))
        throw std::invalid_argument("forward_numeric: step must be <= detector spacing");
    const double half_span = kSqrt2 + grid.s_max;
    const int m = static_cast<int>(std::ceil(2.0 * half_span / step));
    const double h = 2.0 * half_span / m;

    Sinogram out(grid);
    parallel_for(grid.n_phi, threads, [&](long long i) {
        double phi = grid.phi(static_cast<int>(i));
        Vec2 th = theta(phi);
        Vec2 tp = theta_perp(phi);
        double* row = out.row(static_cast<int>(i));
        for (int j = 0; j < grid.n_s; ++j) {
            double s = grid.s(j);
            double sum = 0.0;
            for (int k = 0; k < m; ++k) {
                double t = -half_span + (k + 0.5) * h;
                Vec2 x{s * th.x + t * tp.x, s * th.y + t * tp.y};
                double v = f(x);
                if (v != 0.0)
                    sum += v * weight.eval(phi, x);
            }
            row[j] = sum * h;
        }
    });
    return out;
}

} // namespace

Sinogram forward_numeric(const Phantom& phantom, const WeightSpec& weight, const SinogramGrid& grid,
                         double step, int threads) {
    return forward_quadrature([&](Vec2 x) { return phantom.density_at(x); }, weight, grid, step,
                              threads);
}

Sinogram forward_numeric(const Image& f, const WeightSpec& weight, const SinogramGrid& grid,
                         double step, int threads) {
    return forward_quadrature([&](Vec2 x) { return f.sample(x.x, x.y); }, weight, grid, step,
                              threads);
}

Image backproject(const Sinogram& g, const WeightSpec& weight, int n, int threads) {
    Image img(n);
    const int n_phi = g.grid.n_phi;
    const double dphi = g.grid.dphi();
    parallel_for(n, threads, [&](long long iy) {
        double y = img.coord(static_cast<int>(iy));
        for (int ix = 0; ix < n; ++ix) {
            Vec2 x{img.coord(ix), y};
            double sum = 0.0;
            for (int i = 0; i < n_phi; ++i) {
                double phi = g.grid.phi(i);
                double s = dot(x, theta(phi));
                double v = g.sample_s(i, s);
                if (v != 0.0)
                    sum += v * weight.eval(phi, x);
            }
            img.at(ix, static_cast<int>(iy)) = sum * dphi;
        }
    });
    return img;
}

Image reconstruct(const Sinogram& data, const FilterSpec& filter, const CutoffSpec& cutoff,
                  const WeightSpec& back_weight, int n, int threads) {
    Sinogram cut = apply_cutoff(data, cutoff);
    Sinogram filtered = apply_filter(cut, filter, threads);
    return backproject(filtered, back_weight, n, threads);
}

Sinogram forward_auto(const Phantom& phantom, const WeightSpec& weight, const SinogramGrid& grid,
                      int threads) {
    if (weight.kind == WeightSpec::Kind::Constant) {
        Sinogram g = forward_analytic(phantom, grid, threads);
        if (weight.c != 1.0)
            for (auto& v : g.values)
                v *= weight.c;
        return g;
    }
    return forward_numeric(phantom, weight, grid, grid.ds() / 2.0, threads);
}

Image reconstruct(const Phantom& phantom, const SinogramGrid& grid, const WeightSpec& fwd_weight,
                  const FilterSpec& filter, const CutoffSpec& cutoff, const WeightSpec& back_weight,
                  int n, int threads) {
    return reconstruct(forward_auto(phantom, fwd_weight, grid, threads), filter, cutoff,
                       back_weight, n, threads);
}

} // namespace latomo
