#pragma once

#include <cmath>
#include <vector>

#include "latomo/grids.hpp"

namespace latomo {

struct Vec2 {
    double x{0.0};
    double y{0.0};
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

inline Vec2 theta(double phi) { return Vec2{std::cos(phi), std::sin(phi)}; }
inline Vec2 theta_perp(double phi) { return Vec2{-std::sin(phi), std::cos(phi)}; }

/// Wrap an angle into [0, 2*pi).
double wrap_angle(double phi);

/// Tilted ellipse with additive density, contained in [-1,1]^2.
struct Ellipse {
    Vec2 center{};
    double semi_a{1.0};
    double semi_b{1.0};
    double tilt{0.0}; // radians
    double density{1.0};

    bool contains(Vec2 p) const;

    /// s-extent under x -> x.theta(phi): the ellipse projects onto
    /// [center.theta - r, center.theta + r] with r the returned value.
    double support_radius(double phi) const;

    /// Boundary point at disk-parameterization angle t.
    Vec2 boundary_point(double t) const;

    /// Outward unit-normal angle at boundary_point(t), in [0, 2*pi).
    double normal_angle(double t) const;
};

struct Phantom {
    std::vector<Ellipse> components;

    bool empty() const { return components.empty(); }
    double density_at(Vec2 p) const;
};

/// One directed singularity of a piecewise-constant phantom: a boundary
/// point together with the angle of its conormal direction.
struct WavefrontElement {
    Vec2 point{};
    double normal_angle{0.0}; // [0, 2*pi)
    bool both_signs{true};    // jump discontinuities carry both covector signs
};

/// Exact chord length of the line {x . theta(phi) = s} through the ellipse,
/// times the ellipse density.
double chord_length(const Ellipse& e, double phi, double s);

/// n x n image on [-1,1]^2; pixel value = sum of densities covering the pixel center.
Image rasterize(const Phantom& phantom, int n);

/// m boundary samples per component, uniform in the disk parameterization,
/// each with its outward normal angle.
std::vector<WavefrontElement> wavefront_oracle(const Phantom& phantom, int m);

/// Built-in asymmetric 3-ellipse phantom used by the default config.
Phantom default_phantom();

/// Centered disk of the given radius and density.
Phantom disk_phantom(double radius = 1.0, double density = 1.0);

} // namespace latomo
