#include "latomo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latomo {

namespace {
constexpr double kPi = std::numbers::pi;

// Control-line rotations, irrational-ish w.r.t. the cutoff angles.
constexpr double kControlRot[4] = {kPi / 7.0, -kPi / 7.0, 2.0 * kPi / 7.0, -2.0 * kPi / 7.0};

double line_dist(Vec2 p, const ArtifactLine& l) {
    return std::abs(dot(p, theta(l.phi)) - l.s);
}

// Base mask plus a stripe of the given half-width around each listed line.
// Profiles must not count one predicted artifact as background for another.
Mask add_line_stripes(const Mask& base, const std::vector<ArtifactLine>& lines, double half_width,
                      const Image& ref) {
    Mask out = base;
    for (int iy = 0; iy < out.n; ++iy)
        for (int ix = 0; ix < out.n; ++ix) {
            if (out.at(ix, iy))
                continue;
            Vec2 p{ref.coord(ix), ref.coord(iy)};
            for (const auto& l : lines)
                if (line_dist(p, l) < half_width) {
                    out.set(ix, iy, true);
                    break;
                }
        }
    return out;
}
} // namespace

Image highpass(const Image& img) {
    if (img.n < 3)
        throw std::invalid_argument("highpass: image must be at least 3x3");
    Image out(img.n);
    for (int iy = 1; iy < img.n - 1; ++iy)
        for (int ix = 1; ix < img.n - 1; ++ix) {
            double lap = img.at(ix + 1, iy) + img.at(ix - 1, iy) + img.at(ix, iy + 1) +
                         img.at(ix, iy - 1) - 4.0 * img.at(ix, iy);
            out.at(ix, iy) = std::abs(lap);
        }
    return out;
}

Mask support_mask(const Phantom& phantom, int n, int dilate_px) {
    Image raster = rasterize(phantom, n);
    Mask base(n);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
            base.set(ix, iy, raster.at(ix, iy) != 0.0);
    if (dilate_px <= 0)
        return base;
    Mask out(n);
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            bool hit = false;
            for (int dy = -dilate_px; dy <= dilate_px && !hit; ++dy)
                for (int dx = -dilate_px; dx <= dilate_px && !hit; ++dx) {
                    int jx = ix + dx, jy = iy + dy;
                    if (jx >= 0 && jx < n && jy >= 0 && jy < n && base.at(jx, jy))
                        hit = true;
                }
            out.set(ix, iy, hit);
        }
    return out;
}

std::optional<LineStats> line_profile(const Image& img, double phi, double s, const Mask& exclusion) {
    if (std::abs(s) > std::numbers::sqrt2)
        throw std::invalid_argument("line_profile: line misses the image square");
    Vec2 th = theta(phi);
    Vec2 tp = theta_perp(phi);
    const double step = img.pixel_size() / 2.0;
    const double span = std::numbers::sqrt2;
    LineStats stats;
    bool inside_square = false;
    for (double t = -span; t <= span; t += step) {
        Vec2 p{s * th.x + t * tp.x, s * th.y + t * tp.y};
        if (std::abs(p.x) > 1.0 || std::abs(p.y) > 1.0)
            continue;
        inside_square = true;
        int ix = std::clamp(static_cast<int>((p.x + 1.0) / img.pixel_size()), 0, img.n - 1);
        int iy = std::clamp(static_cast<int>((p.y + 1.0) / img.pixel_size()), 0, img.n - 1);
        if (exclusion.n == img.n && exclusion.at(ix, iy))
            continue;
        double v = img.sample(p.x, p.y);
        stats.mean += v;
        stats.max = std::max(stats.max, v);
        ++stats.samples;
    }
    if (!inside_square)
        throw std::invalid_argument("line_profile: line misses the image square");
    if (stats.samples == 0)
        return std::nullopt; // fully excluded: absent, not zero
    stats.mean /= stats.samples;
    return stats;
}

ArtifactReport artifact_strength(const Image& recon, const Prediction& prediction,
                                 const Phantom& phantom) {
    ArtifactReport report;
    Image hp = highpass(recon);
    Mask excl = support_mask(phantom, recon.n, 3);
    const double stripe = 4.0 * recon.pixel_size();
    // Controls never sample near any predicted line; stripes of the other
    // predicted lines are also cut out of the measured line's own profile.
    Mask control_excl = add_line_stripes(excl, prediction.artifacts, stripe, recon);

    for (size_t li = 0; li < prediction.artifacts.size(); ++li) {
        const ArtifactLine& line = prediction.artifacts[li];
        LineMeasurement m;
        m.line = line;
        std::vector<ArtifactLine> others;
        for (size_t lj = 0; lj < prediction.artifacts.size(); ++lj)
            if (lj != li)
                others.push_back(prediction.artifacts[lj]);
        Mask line_excl = add_line_stripes(excl, others, stripe, recon);
        auto on_line = line_profile(hp, line.phi, line.s, line_excl);
        double control_sum = 0.0;
        int control_count = 0;
        for (double rot : kControlRot) {
            for (double s : {line.s, -line.s}) {
                double cphi = line.phi + rot;
                if (std::abs(s) > std::numbers::sqrt2 - 1e-9)
                    continue;
                try {
                    if (auto c = line_profile(hp, cphi, s, control_excl)) {
                        control_sum += c->mean;
                        ++control_count;
                    }
                } catch (const std::invalid_argument&) {
                }
            }
        }
        if (on_line && control_count > 0) {
            m.mean_response = on_line->mean;
            m.control_mean = control_sum / control_count;
            m.ratio = m.control_mean > 0.0 ? m.mean_response / m.control_mean : 0.0;
            m.valid = true;
        }
        report.lines.push_back(m);
    }

    // Edge response at wavefront points: strongest highpass value within a
    // 2-pixel radius of the boundary point.  Points sitting on a predicted
    // artifact line are skipped in both groups; the response there measures
    // the artifact, not the edge.
    auto edge_response = [&](const DirectedCovector& c) {
        double h = hp.pixel_size();
        double best = 0.0;
        for (int dy = -2; dy <= 2; ++dy)
            for (int dx = -2; dx <= 2; ++dx)
                best = std::max(best, hp.sample(c.point.x + dx * h, c.point.y + dy * h));
        return best;
    };
    const double line_pad = 2.0 * recon.pixel_size();
    auto off_artifact_lines = [&](const DirectedCovector& c) {
        for (const auto& l : prediction.artifacts)
            if (line_dist(c.point, l) < line_pad)
                return false;
        return true;
    };
    for (const auto& c : prediction.visible) {
        if (!off_artifact_lines(c))
            continue;
        report.visible_response += edge_response(c);
        ++report.visible_count;
    }
    for (const auto& c : prediction.invisible) {
        if (!off_artifact_lines(c))
            continue;
        report.invisible_response += edge_response(c);
        ++report.invisible_count;
    }
    if (report.visible_count > 0)
        report.visible_response /= report.visible_count;
    if (report.invisible_count > 0)
        report.invisible_response /= report.invisible_count;
    report.visible_invisible_ratio = report.invisible_response > 0.0
                                         ? report.visible_response / report.invisible_response
                                         : 0.0;
    return report;
}

} // namespace latomo
