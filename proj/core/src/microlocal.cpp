#include "latomo/microlocal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace latomo {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_nonzero(Vec2 xi) {
    if (xi.x == 0.0 && xi.y == 0.0)
        throw std::invalid_argument("covector direction must be nonzero");
}

// Distance between angles mod 2*pi.
double ang_dist(double u, double v) {
    double d = std::abs(wrap_angle(u) - wrap_angle(v));
    return std::min(d, kTwoPi - d);
}
} // namespace

double phi0(Vec2 xi) {
    require_nonzero(xi);
    return wrap_angle(std::atan2(xi.y, xi.x));
}

double phi1(Vec2 xi) {
    return wrap_angle(phi0(xi) + kPi);
}

DataCovector lambda0(const ImageCovector& c) {
    double p0 = phi0(c.xi);
    double r = norm(c.xi);
    return DataCovector{p0, dot(c.x, theta(p0)), -r * dot(c.x, theta_perp(p0)), r};
}

DataCovector lambda1(const ImageCovector& c) {
    double p1 = phi1(c.xi);
    double r = norm(c.xi);
    return DataCovector{p1, dot(c.x, theta(p1)), r * dot(c.x, theta_perp(p1)), -r};
}

ImageCovector canonical_back(const DataCovector& d) {
    if (d.alpha == 0.0)
        throw std::invalid_argument("canonical_back: alpha must be nonzero");
    Vec2 th = theta(d.phi);
    Vec2 tp = theta_perp(d.phi);
    double t = -d.nu / d.alpha;
    return ImageCovector{Vec2{d.s * th.x + t * tp.x, d.s * th.y + t * tp.y},
                         Vec2{d.alpha * th.x, d.alpha * th.y}};
}

std::vector<DirectedCovector> directed_covectors(const std::vector<WavefrontElement>& wf) {
    std::vector<DirectedCovector> out;
    out.reserve(wf.size() * 2);
    for (const auto& e : wf) {
        out.push_back(DirectedCovector{e.point, wrap_angle(e.normal_angle)});
        if (e.both_signs)
            out.push_back(DirectedCovector{e.point, wrap_angle(e.normal_angle + kPi)});
    }
    return out;
}

bool direction_visible(double angle, double a, double b) {
    if (b - a >= kTwoPi - 1e-12)
        return true; // full range: endpoints a and b coincide mod 2*pi
    // Visible covectors come with both signs of alpha, so the direction is
    // tested together with its antipode.
    for (double q : {angle, angle + kPi}) {
        double t = std::fmod(q - a, kTwoPi);
        if (t < 0.0)
            t += kTwoPi;
        if (t > 1e-12 && t < b - a - 1e-12)
            return true;
    }
    return false;
}

std::vector<DirectedCovector> visible_set(const std::vector<WavefrontElement>& wf, double a,
                                          double b) {
    if (!(a < b))
        throw std::invalid_argument("visible_set: requires a < b");
    std::vector<DirectedCovector> out;
    for (const auto& c : directed_covectors(wf))
        if (direction_visible(c.angle, a, b))
            out.push_back(c);
    return out;
}

std::vector<ArtifactLine> artifact_lines(const std::vector<WavefrontElement>& wf, double a,
                                         double b, double tau) {
    if (!(a < b))
        throw std::invalid_argument("artifact_lines: requires a < b");
    if (tau <= 0.0)
        throw std::invalid_argument("artifact_lines: tau must be positive");

    struct Candidate {
        ArtifactLine line;
        double mismatch; // angular distance to the endpoint
    };
    std::vector<Candidate> cands;
    for (const auto& c : directed_covectors(wf)) {
        for (double endpoint : {a, b}) {
            double d_plus = ang_dist(c.angle, endpoint);
            double d_minus = ang_dist(c.angle, endpoint + kPi);
            if (d_plus <= tau || d_minus <= tau) {
                int sign = d_plus <= d_minus ? +1 : -1;
                double s = dot(c.point, theta(endpoint));
                cands.push_back({ArtifactLine{endpoint, s, c.point, sign},
                                 std::min(d_plus, d_minus)});
            }
        }
    }
    // Neighboring boundary samples match the same tangent line; merge lines
    // with the same endpoint angle and nearly equal offsets, keeping the
    // best-aligned generator.
    std::sort(cands.begin(), cands.end(), [](const Candidate& u, const Candidate& v) {
        return u.mismatch < v.mismatch;
    });
    const double s_merge_tol = 0.02;
    std::vector<ArtifactLine> out;
    for (const auto& c : cands) {
        bool dup = false;
        for (const auto& kept : out)
            if (kept.phi == c.line.phi && std::abs(kept.s - c.line.s) < s_merge_tol)
                dup = true;
        if (!dup)
            out.push_back(c.line);
    }
    return out;
}

std::complex<double> symbol_L(const ImageCovector& c, const CutoffSpec& cutoff,
                              const FilterSpec& filter, const WeightSpec& mu,
                              const WeightSpec& nu) {
    require_nonzero(c.xi);
    DataCovector l0 = lambda0(c);
    DataCovector l1 = lambda1(c);
    double r = norm(c.xi);
    std::complex<double> term0 =
        cutoff.eval(l0.phi) * filter_symbol(filter, l0.alpha) * nu.eval(l0.phi, c.x) * mu.eval(l0.phi, c.x);
    std::complex<double> term1 =
        cutoff.eval(l1.phi) * filter_symbol(filter, l1.alpha) * nu.eval(l1.phi, c.x) * mu.eval(l1.phi, c.x);
    return (kTwoPi / r) * (term0 + term1);
}

EllipticityReport ellipticity_check(const CutoffSpec& cutoff, const FilterSpec& filter,
                                    const WeightSpec& mu, const WeightSpec& nu, int n_samples,
                                    unsigned long long seed) {
    if (cutoff.kind == CutoffSpec::Kind::Hard)
        throw std::invalid_argument("ellipticity_check: cutoff must be smooth or none");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> mag(0.5, 4.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    const bool full = cutoff.kind == CutoffSpec::Kind::None;
    const double lo = full ? 0.0 : cutoff.a1;
    const double hi = full ? kTwoPi : cutoff.b1;

    EllipticityReport rep;
    rep.samples = n_samples;
    rep.case_short_range = !full && (cutoff.b - cutoff.a < kPi);
    rep.min_normalized = std::numeric_limits<double>::infinity();

    bool filter_real = true;
    double sign_seen = 0.0;
    bool single_signed = true;

    for (int k = 0; k < n_samples; ++k) {
        Vec2 x{unit(rng), unit(rng)};
        // Directions on the plateau, both covector signs.
        double dir = lo + u01(rng) * (hi - lo);
        if (u01(rng) < 0.5)
            dir += kPi;
        double r = mag(rng);
        ImageCovector c{x, Vec2{r * std::cos(dir), r * std::sin(dir)}};
        std::complex<double> sigma = symbol_L(c, cutoff, filter, mu, nu);

        // Cancellation-free bound: sum of the two term magnitudes.
        DataCovector l0 = lambda0(c);
        DataCovector l1 = lambda1(c);
        double bound = cutoff.eval(l0.phi) * std::abs(filter_symbol(filter, l0.alpha)) *
                           std::abs(nu.eval(l0.phi, x) * mu.eval(l0.phi, x)) +
                       cutoff.eval(l1.phi) * std::abs(filter_symbol(filter, l1.alpha)) *
                           std::abs(nu.eval(l1.phi, x) * mu.eval(l1.phi, x));
        bound *= kTwoPi / r;
        double normalized = bound > 0.0 ? std::abs(sigma) / bound : 0.0;
        rep.min_normalized = std::min(rep.min_normalized, normalized);

        for (double av : {r, -r}) {
            std::complex<double> p = filter_symbol(filter, av);
            if (std::abs(p.imag()) > 1e-14 * (1.0 + std::abs(p)))
                filter_real = false;
            if (p.real() != 0.0) {
                if (sign_seen == 0.0)
                    sign_seen = p.real() > 0.0 ? 1.0 : -1.0;
                else if (sign_seen * p.real() < 0.0)
                    single_signed = false;
            }
        }
    }

    rep.case_real_filter = filter_real && single_signed;
    rep.elliptic = rep.min_normalized > 1e-9;
    return rep;
}

Prediction predict(const Phantom& phantom, double a, double b, int m) {
    if (!(a < b))
        throw std::invalid_argument("predict: requires a < b");
    Prediction out;
    out.range_warning = (b - a >= kPi);
    if (phantom.empty())
        return out;

    auto wf = wavefront_oracle(phantom, m);
    double tau = kPi / m; // half the oracle's angular sampling gap
    bool full = b - a >= kTwoPi - 1e-12;
    for (const auto& c : directed_covectors(wf)) {
        // Covectors at the cutoff endpoints generate artifact lines; they
        // belong to neither the visible nor the invisible class.
        bool endpoint = !full && (ang_dist(c.angle, a) <= tau || ang_dist(c.angle, a + kPi) <= tau ||
                                  ang_dist(c.angle, b) <= tau || ang_dist(c.angle, b + kPi) <= tau);
        if (endpoint)
            continue;
        if (direction_visible(c.angle, a, b))
            out.visible.push_back(c);
        else
            out.invisible.push_back(c);
    }
    out.artifacts = artifact_lines(wf, a, b, tau);
    return out;
}

} // namespace latomo
