#pragma once

#include <complex>
#include <string>

#include "latomo/grids.hpp"

namespace latomo {

/// Fourier-multiplier filter acting in s per angle row.
/// Symbols: fbp |sigma|/(4*pi), lambda sigma^2/(4*pi), dds i*sigma, identity 1.
struct FilterSpec {
    enum class Kind { Fbp, Lambda, Dds, Identity };

    Kind kind{Kind::Fbp};
    double apodize{0.0}; // raised-cosine band limit as a fraction of Nyquist; 0 disables

    static FilterSpec fbp() { return {Kind::Fbp, 0.0}; }
    static FilterSpec lambda() { return {Kind::Lambda, 0.0}; }
    static FilterSpec dds() { return {Kind::Dds, 0.0}; }
    static FilterSpec identity() { return {Kind::Identity, 0.0}; }
};

/// Top-order symbol p(sigma) of the filter at physical frequency sigma.
std::complex<double> filter_symbol(const FilterSpec& f, double sigma);

/// Apply the filter row by row: zero-pad to the next power of two >= 2*n_s,
/// FFT in s, multiply by p(sigma_k), inverse FFT, truncate.
Sinogram apply_filter(const Sinogram& g, const FilterSpec& f, int threads = 0);

std::string to_string(FilterSpec::Kind k);
FilterSpec::Kind filter_kind_from_string(const std::string& s);

} // namespace latomo
