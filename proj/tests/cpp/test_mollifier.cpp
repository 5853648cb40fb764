#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sliclab/mollifier.hpp"
#include "sliclab/rng.hpp"
#include "sliclab/vacuum.hpp"

using namespace slic;

TEST_CASE("kernel normalization and primitive") {
    for (const char* label : {"bump", "bump_zero_center"}) {
        auto phi = make_mollifier(label);
        CHECK(phi.mass() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(phi.Phi(0.0) == 0.0);
        CHECK(phi.Phi(1.0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(phi.Phi(-1.0) == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(phi.phi(1.1) == 0.0);
        CHECK(phi.phi(0.4) == phi.phi(-0.4));
        // Phi nondecreasing
        double prev = -0.5 - 1e-14;
        for (int i = 0; i <= 100; ++i) {
            const double v = phi.Phi(-1.0 + 0.02 * i);
            CHECK(v >= prev - 1e-14);
            prev = v;
        }
    }
    CHECK(make_mollifier("bump").phi0_positive);
    auto zero = make_mollifier("bump_zero_center");
    CHECK(!zero.phi0_positive);
    CHECK(zero.phi(0.0) == 0.0);
    CHECK_THROWS_AS(make_mollifier("triangle"), std::invalid_argument);
}

TEST_CASE("tabulated primitive matches direct quadrature") {
    auto phi = make_mollifier("bump");
    for (double x : {0.05, 0.3, 0.77, 0.99}) {
        const double direct =
            integrate([&](double u) { return phi.phi(u); }, 0.0, x, QuadratureOptions{1e-14, 1e-14});
        CHECK(phi.Phi(x) == doctest::Approx(direct).epsilon(1e-12));
        const double moment =
            integrate([&](double u) { return u * phi.phi(u); }, 0.0, x, QuadratureOptions{1e-14, 1e-14});
        CHECK(phi.M(x) == doctest::Approx(moment).epsilon(1e-12));
    }
}

TEST_CASE("line convolution reproduces affine functions") {
    auto phi = make_mollifier("bump");
    for (double n : {8.0, 64.0}) {
        for (double x : {-0.7, 0.0, 1.3}) {
            CHECK(convolve_line([](double z) { return 2.5 * z; }, n, x, phi) ==
                  doctest::Approx(2.5 * x).epsilon(1e-10));
            CHECK(convolve_line([](double z) { return 2.5 * z - 1.0; }, n, x, phi) ==
                  doctest::Approx(2.5 * x - 1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("line convolution of a step at the jump") {
    auto phi = make_mollifier("bump");
    std::vector<double> bp{0.0};
    const double v = convolve_line([](double z) { return z > 0.0 ? 1.0 : 0.0; }, 16.0, 0.0,
                                   phi, bp);
    CHECK(v == doctest::Approx(0.5).epsilon(1e-11));
}

TEST_CASE("odd radial convolution basics") {
    auto phi = make_mollifier("bump");
    // antisymmetry at the origin
    CHECK(convolve_radial_odd([](double R) { return R * R + 1.0; }, 8.0, 0.0, phi) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // affine branch beyond the layer
    CHECK(convolve_radial_odd([](double R) { return 3.0 * R; }, 8.0, 0.5, phi) ==
          doctest::Approx(1.5).epsilon(1e-10));
    // inside the layer the odd extension of lambda R is still exact
    CHECK(convolve_radial_odd([](double R) { return 3.0 * R; }, 8.0, 0.05, phi) ==
          doctest::Approx(0.15).epsilon(1e-10));
}

TEST_CASE("odd radial derivative: affine and boundary term") {
    auto phi = make_mollifier("bump");
    // w = 3R: w(0+) = 0, w_R = 3 everywhere
    for (double R : {0.02, 0.3})
        CHECK(convolve_radial_odd_deriv([](double) { return 3.0; }, 0.0, 8.0, R, phi) ==
              doctest::Approx(3.0).epsilon(1e-10));
    // w with w(0+) = 1 and w_R = 0: only the boundary term survives at R = 0
    CHECK(convolve_radial_odd_deriv([](double) { return 0.0; }, 1.0, 8.0, 0.0, phi) ==
          doctest::Approx(2.0 * phi.phi_n(8.0, 0.0)).epsilon(1e-12));
}

TEST_CASE("odd radial derivative matches finite differences of the convolution") {
    auto phi = make_mollifier("bump");
    auto w = [](double R) { return 2.0 * R + 0.3 * std::sin(R); };
    auto w_R = [](double R) { return 2.0 + 0.3 * std::cos(R); };
    const double n = 16.0;
    for (double R : {0.04, 0.2, 0.9}) {
        const double h = 1e-5;
        const double fd = (convolve_radial_odd(w, n, R + h, phi) -
                           convolve_radial_odd(w, n, R - h, phi)) /
                          (2.0 * h);
        const double an = convolve_radial_odd_deriv(w_R, 0.0, n, R, phi);
        CHECK(an == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("monotone data give nonnegative mollified derivative") {
    auto phi = make_mollifier("bump_zero_center");
    auto w_R = [](double R) { return R < 0.5 ? 0.2 : 1.0; };   // >= 0, jumps
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const double R = rng.uniform(0.0, 1.0);
        CHECK(convolve_radial_odd_deriv(w_R, 0.1, 32.0, R, phi) >= -1e-12);
    }
}

TEST_CASE("vacuum displacement: odd convolution vs direct full-line quadrature") {
    auto phi = make_mollifier("bump");
    auto fan = make_vacuum_fan(1.0, 4.0, 2.0);
    const double n = 64.0, xi = 0.5;
    auto r = [&](double z) { return fan.displacement(z); };
    const double via_odd = convolve_radial_odd(r, n, xi, phi, std::vector<double>{fan.xi_F});
    // independent route: mollify the odd-extended displacement on the full line
    auto r_ext = [&](double z) { return fan.displacement(z); };   // already odd
    const double direct = integrate(
        [&](double z) { return phi.phi_n(n, xi - z) * r_ext(z); }, xi - 1.0 / n, xi + 1.0 / n,
        std::vector<double>{0.0, fan.xi_F}, QuadratureOptions{1e-12, 1e-13});
    CHECK(via_odd == doctest::Approx(direct).epsilon(1e-9));
}
