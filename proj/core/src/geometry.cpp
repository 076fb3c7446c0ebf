#include "latomo/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latomo {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Direction of the line's normal in the ellipse frame, stretched by the axes:
// v = diag(A, B) * R(-tilt) * theta(phi).
Vec2 stretched_normal(const Ellipse& e, double phi) {
    double c = std::cos(phi - e.tilt);
    double s = std::sin(phi - e.tilt);
    return Vec2{e.semi_a * c, e.semi_b * s};
}
} // namespace

double wrap_angle(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    return w == kTwoPi ? 0.0 : w;
}

bool Ellipse::contains(Vec2 p) const {
    double dx = p.x - center.x;
    double dy = p.y - center.y;
    double c = std::cos(tilt);
    double s = std::sin(tilt);
    double u = (c * dx + s * dy) / semi_a;
    double v = (-s * dx + c * dy) / semi_b;
    return u * u + v * v <= 1.0;
}

double Ellipse::support_radius(double phi) const {
    return norm(stretched_normal(*this, phi));
}

Vec2 Ellipse::boundary_point(double t) const {
    double c = std::cos(tilt);
    double s = std::sin(tilt);
    double u = semi_a * std::cos(t);
    double v = semi_b * std::sin(t);
    return Vec2{center.x + c * u - s * v, center.y + s * u + c * v};
}

double Ellipse::normal_angle(double t) const {
    // Gradient of the implicit form, rotated back to world coordinates.
    double nu = std::cos(t) / semi_a;
    double nv = std::sin(t) / semi_b;
    double c = std::cos(tilt);
    double s = std::sin(tilt);
    return wrap_angle(std::atan2(s * nu + c * nv, c * nu - s * nv));
}

double Phantom::density_at(Vec2 p) const {
    double sum = 0.0;
    for (const auto& e : components)
        if (e.contains(p))
            sum += e.density;
    return sum;
}

double chord_length(const Ellipse& e, double phi, double s) {
    // Map the ellipse to the unit disk; the line x.theta = s becomes
    // u.v = s - center.theta with v the stretched normal.
    Vec2 v = stretched_normal(e, phi);
    double r = norm(v);
    double d = (s - dot(e.center, theta(phi))) / r;
    if (std::abs(d) >= 1.0)
        return 0.0;
    double half = std::sqrt(1.0 - d * d);
    // Chord direction in disk coordinates, stretched back to world lengths.
    Vec2 w{-v.y / r, v.x / r};
    double stretch = std::hypot(e.semi_a * w.x, e.semi_b * w.y);
    return 2.0 * half * stretch * e.density;
}

Image rasterize(const Phantom& phantom, int n) {
    if (n < 16)
        throw std::invalid_argument("rasterize: n must be >= 16");
    Image img(n);
    for (int iy = 0; iy < n; ++iy) {
        double y = img.coord(iy);
        for (int ix = 0; ix < n; ++ix)
            img.at(ix, iy) = phantom.density_at(Vec2{img.coord(ix), y});
    }
    return img;
}

std::vector<WavefrontElement> wavefront_oracle(const Phantom& phantom, int m) {
    if (m < 8)
        throw std::invalid_argument("wavefront_oracle: m must be >= 8");
    std::vector<WavefrontElement> out;
    out.reserve(phantom.components.size() * m);
    for (const auto& e : phantom.components) {
        for (int k = 0; k < m; ++k) {
            double t = kTwoPi * k / m;
            out.push_back(WavefrontElement{e.boundary_point(t), e.normal_angle(t), true});
        }
    }
    return out;
}

Phantom default_phantom() {
    Phantom p;
    p.components.push_back(Ellipse{{0.0, 0.0}, 0.72, 0.60, 0.35, 1.0});
    p.components.push_back(Ellipse{{0.28, -0.18}, 0.18, 0.12, 1.10, 0.8});
    p.components.push_back(Ellipse{{-0.22, 0.26}, 0.12, 0.20, 2.30, -0.4});
    return p;
}

Phantom disk_phantom(double radius, double density) {
    Phantom p;
    p.components.push_back(Ellipse{{0.0, 0.0}, radius, radius, 0.0, density});
    return p;
}

} // namespace latomo
