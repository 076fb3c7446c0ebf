#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace latomo {

/// Uniform discretization of the data space [0, 2*pi) x [-s_max, s_max].
/// n_s is odd so s = 0 is a sample; s_max >= sqrt(2) covers every line
/// meeting [-1,1]^2.
struct SinogramGrid {
    int n_phi{360};
    int n_s{363};
    double s_max{1.5};

    double dphi() const { return 6.283185307179586476925286766559 / n_phi; }
    double ds() const { return 2.0 * s_max / (n_s - 1); }
    double phi(int i) const { return i * dphi(); }
    double s(int j) const { return -s_max + j * ds(); }

    bool operator==(const SinogramGrid&) const = default;
};

struct Sinogram {
    SinogramGrid grid;
    std::vector<double> values; // row-major, n_phi x n_s

    Sinogram() = default;
    explicit Sinogram(SinogramGrid g) : grid(g), values(static_cast<size_t>(g.n_phi) * g.n_s, 0.0) {}

    double& at(int i_phi, int j_s) { return values[static_cast<size_t>(i_phi) * grid.n_s + j_s]; }
    double at(int i_phi, int j_s) const { return values[static_cast<size_t>(i_phi) * grid.n_s + j_s]; }

    double* row(int i_phi) { return values.data() + static_cast<size_t>(i_phi) * grid.n_s; }
    const double* row(int i_phi) const { return values.data() + static_cast<size_t>(i_phi) * grid.n_s; }

    /// Linear interpolation of row i_phi at physical coordinate s; zero outside the grid.
    double sample_s(int i_phi, double s) const;
};

/// n x n image on [-1,1]^2, pixel centers at -1 + (i + 1/2) * 2/n.
struct Image {
    int n{0};
    std::vector<double> values; // row-major, y outer, x inner

    Image() = default;
    explicit Image(int n_) : n(n_), values(static_cast<size_t>(n_) * n_, 0.0) {}

    double& at(int ix, int iy) { return values[static_cast<size_t>(iy) * n + ix]; }
    double at(int ix, int iy) const { return values[static_cast<size_t>(iy) * n + ix]; }

    double pixel_size() const { return 2.0 / n; }
    double coord(int i) const { return -1.0 + (i + 0.5) * pixel_size(); }

    /// Bilinear interpolation at (x, y) in [-1,1]^2; zero outside.
    double sample(double x, double y) const;
};

} // namespace latomo
