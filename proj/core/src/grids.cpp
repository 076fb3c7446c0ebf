#include "latomo/grids.hpp"

#include <cmath>

namespace latomo {

double Sinogram::sample_s(int i_phi, double s) const {
    double u = (s + grid.s_max) / grid.ds();
    if (u < 0.0 || u > grid.n_s - 1)
        return 0.0;
    int j0 = static_cast<int>(u);
    if (j0 >= grid.n_s - 1)
        return at(i_phi, grid.n_s - 1);
    double w = u - j0;
    return (1.0 - w) * at(i_phi, j0) + w * at(i_phi, j0 + 1);
}

double Image::sample(double x, double y) const {
    double h = pixel_size();
    double u = (x + 1.0) / h - 0.5;
    double v = (y + 1.0) / h - 0.5;
    if (u < -1.0 || u > n || v < -1.0 || v > n)
        return 0.0;
    int i0 = static_cast<int>(std::floor(u));
    int j0 = static_cast<int>(std::floor(v));
    double wu = u - i0;
    double wv = v - j0;
    auto cell = [&](int i, int j) -> double {
        if (i < 0 || i >= n || j < 0 || j >= n)
            return 0.0;
        return at(i, j);
    };
    return (1.0 - wu) * (1.0 - wv) * cell(i0, j0) + wu * (1.0 - wv) * cell(i0 + 1, j0) +
           (1.0 - wu) * wv * cell(i0, j0 + 1) + wu * wv * cell(i0 + 1, j0 + 1);
}

} // namespace latomo
