#pragma once

#include "latomo/cutoffs.hpp"
#include "latomo/filters.hpp"
#include "latomo/geometry.hpp"
#include "latomo/grids.hpp"
#include "latomo/weights.hpp"

namespace latomo {

/// Exact (closed-form) forward transform for mu == 1 on an analytic phantom.
Sinogram forward_analytic(const Phantom& phantom, const SinogramGrid& grid, int threads = 0);

/// Weighted forward transform by composite midpoint quadrature along each line,
/// integrand f(x) * mu(phi, x). step must be positive and <= ds.
Sinogram forward_numeric(const Phantom& phantom, const WeightSpec& weight,
                         const SinogramGrid& grid, double step, int threads = 0);
Sinogram forward_numeric(const Image& f, const WeightSpec& weight,
                         const SinogramGrid& grid, double step, int threads = 0);

/// Weighted backprojection: for each pixel x, sum_i g(phi_i, x.theta(phi_i))
/// * nu(phi_i, x) * dphi with linear interpolation of g in s.
Image backproject(const Sinogram& g, const WeightSpec& weight, int n, int threads = 0);

/// Full pipeline: cutoff, then filter, then weighted backprojection.
Image reconstruct(const Sinogram& data, const FilterSpec& filter, const CutoffSpec& cutoff,
                  const WeightSpec& back_weight, int n, int threads = 0);

/// Convenience overload that first forms R_mu(phantom) on the grid.  Uses the
/// exact path (scaled) for constant weights and quadrature otherwise.
Image reconstruct(const Phantom& phantom, const SinogramGrid& grid, const WeightSpec& fwd_weight,
                  const FilterSpec& filter, const CutoffSpec& cutoff,
                  const WeightSpec& back_weight, int n, int threads = 0);

/// Forward data for a phantom with the given weight: exact for constant
/// weights, quadrature at step = ds/2 otherwise.
Sinogram forward_auto(const Phantom& phantom, const WeightSpec& weight,
                      const SinogramGrid& grid, int threads = 0);

} // namespace latomo
