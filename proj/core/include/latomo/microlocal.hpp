#pragma once

#include <complex>
#include <vector>

#include "latomo/cutoffs.hpp"
#include "latomo/filters.hpp"
#include "latomo/geometry.hpp"
#include "latomo/weights.hpp"

namespace latomo {

/// Covector on the data space: (phi, s; nu dphi + alpha ds).
/// alpha != 0 on the canonical relation.
struct DataCovector {
    double phi{0.0};
    double s{0.0};
    double nu{0.0};
    double alpha{1.0};
};

/// Covector (x, xi dx) on the image space, xi != 0.
struct ImageCovector {
    Vec2 x{};
    Vec2 xi{1.0, 0.0};
};

/// One line of predicted artifacts: {generator + t*theta_perp(phi)},
/// carrying covectors parallel to sign*theta(phi).
struct ArtifactLine {
    double phi{0.0}; // a or b
    double s{0.0};   // generator.theta(phi)
    Vec2 generator{};
    int covector_sign{+1};
};

/// Angle phi0 in [0, 2*pi) with xi = |xi| theta(phi0); phi1 = phi0 + pi.
double phi0(Vec2 xi);
double phi1(Vec2 xi);

/// The two data-space preimages of (x, xi dx) under the canonical relation.
DataCovector lambda0(const ImageCovector& c);
DataCovector lambda1(const ImageCovector& c);

/// Composition with the transpose relation: recovers the unique image
/// covector (x, alpha*theta(phi)) with x = s*theta + (-nu/alpha)*theta_perp.
ImageCovector canonical_back(const DataCovector& d);

/// Directed wavefront covector: oracle elements split per sign.
struct DirectedCovector {
    Vec2 point{};
    double angle{0.0}; // direction of the covector in [0, 2*pi)
};

/// Expand oracle elements into directed covectors (two per element when both_signs).
std::vector<DirectedCovector> directed_covectors(const std::vector<WavefrontElement>& wf);

/// Directed covectors whose angle lies in the open interval (a, b) mod 2*pi.
bool direction_visible(double angle, double a, double b);
std::vector<DirectedCovector> visible_set(const std::vector<WavefrontElement>& wf, double a, double b);

/// Artifact lines generated by wavefront directions within tau of the
/// endpoint angles a, b.  tau <= 0 selects the default pi/m for an oracle of
/// m samples per component; here it must be given explicitly.
std::vector<ArtifactLine> artifact_lines(const std::vector<WavefrontElement>& wf, double a, double b,
                                         double tau);

/// Top-order symbol of the reconstruction operator R*_nu P K_phi R_mu at (x, xi).
std::complex<double> symbol_L(const ImageCovector& c, const CutoffSpec& cutoff,
                              const FilterSpec& filter, const WeightSpec& mu,
                              const WeightSpec& nu);

struct EllipticityReport {
    bool elliptic{false};
    double min_normalized{0.0}; // min over samples of |sigma| / cancellation-free bound
    bool case_real_filter{false};  // filter symbol real and single-signed on samples
    bool case_short_range{false};  // b - a < pi
    int samples{0};
};

/// Sample covectors with directions in the cutoff plateau (full circle for
/// kind none) and test |symbol_L| for uniform lower bounds.
EllipticityReport ellipticity_check(const CutoffSpec& cutoff, const FilterSpec& filter,
                                    const WeightSpec& mu, const WeightSpec& nu,
                                    int n_samples, unsigned long long seed = 1234);

struct Prediction {
    std::vector<DirectedCovector> visible;
    std::vector<DirectedCovector> invisible;
    std::vector<ArtifactLine> artifacts;
    bool range_warning{false}; // b - a >= pi
};

/// Package the predicted right-hand side of the artifact characterization
/// for a concrete phantom: visible/invisible partition of the oracle
/// wavefront set plus the endpoint artifact lines.
Prediction predict(const Phantom& phantom, double a, double b, int m);

} // namespace latomo
