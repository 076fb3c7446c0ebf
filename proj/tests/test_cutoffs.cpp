#include <doctest.h>

#include <cmath>
#include <numbers>

#include "latomo/cutoffs.hpp"
#include "latomo/transforms.hpp"

using namespace latomo;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("hard cutoff indicator values") {
    auto c = CutoffSpec::hard(kPi / 4.0, 3.0 * kPi / 4.0);
    CHECK(c.eval(kPi / 2.0) == 1.0);
    CHECK(c.eval(0.0) == 0.0);
    CHECK(c.eval(kPi) == 0.0);
    CHECK(c.eval(kPi / 2.0 + 2.0 * kPi) == 1.0); // mod 2*pi
}

TEST_CASE("smooth cutoff plateau, transitions, midpoint") {
    double a = kPi / 4.0, b = 3.0 * kPi / 4.0;
    auto c = CutoffSpec::smooth(a, b, kPi / 12.0, 3);
    CHECK(c.eval((a + b) / 2.0) == 1.0);
    CHECK(c.eval(a) == 0.0);
    CHECK(c.eval(b) == 0.0);
    // odd symmetry of smoothstep about the transition midpoint
    CHECK(c.eval((a + c.a1) / 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(smoothstep(3, 0.5) == doctest::Approx(0.5));

    for (double phi = 0.0; phi < 2.0 * kPi; phi += 0.01) {
        double v = c.eval(phi);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }

    // monotone on the transitions
    double prev = -1.0;
    for (double phi = a; phi <= c.a1; phi += 1e-3) {
        double v = c.eval(phi);
        CHECK(v >= prev);
        prev = v;
    }
    prev = 2.0;
    for (double phi = c.b1; phi <= b; phi += 1e-3) {
        double v = c.eval(phi);
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("malformed cutoff specs are rejected") {
    CHECK_THROWS(CutoffSpec::hard(1.0, 1.0));
    CHECK_THROWS(CutoffSpec::hard(2.0, 1.0));
    CHECK_THROWS(CutoffSpec::hard(-1.0, 1.0));
    CHECK_THROWS(CutoffSpec::smooth_inner(1.0, 2.0, 0.9, 1.5));  // a' <= a
    CHECK_THROWS(CutoffSpec::smooth_inner(1.0, 2.0, 1.6, 1.5));  // a' >= b'
    CHECK_THROWS(CutoffSpec::smooth_inner(1.0, 2.0, 1.2, 1.8, 1)); // order < 2
}

TEST_CASE("apply_cutoff row behavior and idempotence") {
    SinogramGrid grid{72, 31, 1.5};
    Sinogram g(grid);
    for (size_t k = 0; k < g.values.size(); ++k)
        g.values[k] = 1.0 + static_cast<double>(k % 17);

    auto none = CutoffSpec::none();
    CHECK(apply_cutoff(g, none).values == g.values);

    double a = kPi / 4.0, b = 3.0 * kPi / 4.0;
    auto hard = CutoffSpec::hard(a, b);
    Sinogram cut = apply_cutoff(g, hard);
    for (int i = 0; i < grid.n_phi; ++i) {
        double phi = grid.phi(i);
        bool in = phi > a && phi < b;
        for (int j = 0; j < grid.n_s; ++j)
            CHECK(cut.at(i, j) == (in ? g.at(i, j) : 0.0));
    }
    CHECK(apply_cutoff(cut, hard).values == cut.values); // idempotent

    auto smooth = CutoffSpec::smooth(a, b, kPi / 12.0);
    Sinogram sm = apply_cutoff(g, smooth);
    for (int i = 0; i < grid.n_phi; ++i) {
        double phi = grid.phi(i);
        if (phi >= smooth.a1 && phi <= smooth.b1)
            for (int j = 0; j < grid.n_s; ++j)
                CHECK(sm.at(i, j) == g.at(i, j)); // plateau rows bit-identical
    }
}

TEST_CASE("junction derivatives vanish with the expected order") {
    // smoothstep of order k has derivatives 1..k-1 vanishing at 0 and 1; the
    // j-th finite-difference derivative at a junction must shrink like
    // h^(k-j) under refinement.
    for (int k : {2, 3, 5}) {
        for (int j = 1; j < k; ++j) {
            auto fd = [&](double h) {
                // central differences of order j at x = 0
                double acc = 0.0;
                for (int i = 0; i <= j; ++i) {
                    double coeff = 1.0;
                    for (int t = 0; t < i; ++t)
                        coeff *= -(j - t) / static_cast<double>(t + 1);
                    acc += coeff * smoothstep(k, (j / 2.0 - i) * h);
                }
                return std::abs(acc) / std::pow(h, j);
            };
            double h = 1e-2;
            double d1 = fd(h);
            double d2 = fd(h / 2.0);
            double expected_factor = std::pow(2.0, k - j);
            if (d1 > 1e-13) // below that, round-off dominates
                CHECK(d1 / d2 > 0.6 * expected_factor);
        }
    }
}
