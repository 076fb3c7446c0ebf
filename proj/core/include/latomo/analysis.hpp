#pragma once

#include <optional>
#include <vector>

#include "latomo/geometry.hpp"
#include "latomo/grids.hpp"
#include "latomo/microlocal.hpp"

namespace latomo {

/// |5-point Laplacian| with the outermost pixel ring zeroed.
Image highpass(const Image& img);

/// Boolean mask over an image grid.
struct Mask {
    int n{0};
    std::vector<unsigned char> values;

    explicit Mask(int n_ = 0) : n(n_), values(static_cast<size_t>(n_) * n_, 0) {}
    bool at(int ix, int iy) const { return values[static_cast<size_t>(iy) * n + ix] != 0; }
    void set(int ix, int iy, bool v) { values[static_cast<size_t>(iy) * n + ix] = v ? 1 : 0; }
};

/// Phantom support (rasterized nonzero) dilated by the given pixel radius.
Mask support_mask(const Phantom& phantom, int n, int dilate_px = 3);

struct LineStats {
    double mean{0.0};
    double max{0.0};
    int samples{0};
};

/// Mean/max of img along {x.theta(phi) = s} at sample points inside the
/// image square and outside the exclusion mask.  Empty optional when the
/// line misses the square or all samples are excluded.
std::optional<LineStats> line_profile(const Image& img, double phi, double s, const Mask& exclusion);

struct LineMeasurement {
    ArtifactLine line{};
    double mean_response{0.0};
    double control_mean{0.0};
    double ratio{0.0};
    bool valid{false};
};

struct ArtifactReport {
    std::vector<LineMeasurement> lines;
    double visible_response{0.0};
    double invisible_response{0.0};
    double visible_invisible_ratio{0.0};
    int visible_count{0};
    int invisible_count{0};
};

/// Measure predicted artifact lines against rotated control lines and the
/// edge response at visible vs invisible wavefront points, all on the
/// highpass of the reconstruction.
ArtifactReport artifact_strength(const Image& recon, const Prediction& prediction,
                                 const Phantom& phantom);

} // namespace latomo
