#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sliclab/constitutive.hpp"
#include "sliclab/quadrature.hpp"
#include "sliclab/rng.hpp"

using namespace slic;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, i / (n - 1.0));
    return g;
}

} // namespace

TEST_CASE("shipped 1-d laws: closed forms") {
    auto sat = make_stress_law("saturating");
    CHECK(sat.tau(1.0) == doctest::Approx(0.0));
    CHECK(sat.tau(4.0) == doctest::Approx(0.75));
    CHECK(sat.W(4.0) == doctest::Approx(3.0 - std::log(4.0)).epsilon(1e-14));
    CHECK(sat.W(1.0) == doctest::Approx(0.0));
    CHECK(sat.tau_inf == doctest::Approx(1.0));
    CHECK(sat.L == 0.0);

    auto ns = make_stress_law("nonsaturating");
    CHECK(std::isinf(ns.tau_inf));
    CHECK(ns.L == doctest::Approx(1.0));
    CHECK_THROWS_AS(make_stress_law("cubic"), std::invalid_argument);
}

TEST_CASE("W is the antiderivative of tau (quadrature cross-check)") {
    for (const char* label : {"saturating", "nonsaturating"}) {
        auto law = make_stress_law(label);
        for (double u : {0.3, 1.0, 2.5, 40.0}) {
            const double q = integrate(law.tau, 1.0, u, QuadratureOptions{1e-12, 1e-13});
            CHECK(law.W(u) == doctest::Approx(q).epsilon(1e-10));
        }
    }
}

TEST_CASE("finite differences of W match tau on random grids") {
    Rng rng(42);
    for (const char* label : {"saturating", "nonsaturating"}) {
        auto law = make_stress_law(label);
        for (int i = 0; i < 100; ++i) {
            const double u = rng.uniform(0.1, 100.0);
            const double h = 1e-5 * u;
            const double fd = (law.W(u + h) - law.W(u - h)) / (2.0 * h);
            CHECK(fd == doctest::Approx(law.tau(u)).epsilon(1e-8));
        }
    }
}

TEST_CASE("hypothesis sign ledgers at 1000 log-spaced samples") {
    const auto grid = log_grid(1e-3, 1e3, 1000);
    for (const char* label : {"saturating", "nonsaturating"}) {
        auto rep = check_hypotheses_1d(make_stress_law(label), grid);
        CHECK(rep.all_increasing);
        CHECK(rep.all_concave);
        CHECK(rep.tau_near_zero < -100.0);   // divergence toward -inf
    }
}

TEST_CASE("L estimated by extrapolation") {
    auto sat = check_hypotheses_1d(make_stress_law("saturating"), {1.0, 2.0});
    CHECK(std::abs(sat.L_estimate - 0.0) < 1e-6);
    auto ns = check_hypotheses_1d(make_stress_law("nonsaturating"), {1.0, 2.0});
    CHECK(std::abs(ns.L_estimate - 1.0) < 1e-6);
}

TEST_CASE("hand-made violator fails the concavity ledger") {
    StressLaw1D linear;
    linear.label = "linear";
    linear.tau = [](double u) { return u; };
    linear.tau_prime = [](double) { return 1.0; };
    linear.W = [](double u) { return 0.5 * (u * u - 1.0); };
    linear.tau_inf = kInf;
    linear.L = 1.0;
    auto rep = check_hypotheses_1d(linear, log_grid(0.1, 10.0, 11));
    CHECK(rep.all_increasing);
    CHECK(!rep.all_concave);   // tau'' == 0 is not < 0
}

TEST_CASE("stored energies: roots, asymptotes, derivative ledgers") {
    auto rec = make_stored_energy("reciprocal", 3);
    CHECK(rec.H == doctest::Approx(1.0));
    CHECK(rec.L == doctest::Approx(1.0));
    CHECK(rec.sublinear_flag);
    CHECK(rec.h_prime(rec.H) == doctest::Approx(0.0));
    // h'(v^3)/v at v = 10
    CHECK(rec.h_prime(1000.0) / 10.0 == doctest::Approx((1.0 - 1e-6) / 10.0).epsilon(1e-12));

    auto sup = make_stored_energy("superlinear", 3);
    CHECK(std::isinf(sup.L));
    CHECK(!sup.sublinear_flag);
    CHECK(sup.h_prime(sup.H) == doctest::Approx(0.0).epsilon(1e-12));
    // superlinear growth of h'(v^d)/v
    CHECK(sup.h_prime(std::pow(50.0, 3)) / 50.0 > sup.h_prime(std::pow(10.0, 3)) / 10.0);

    CHECK_THROWS_AS(make_stored_energy("reciprocal", 2), std::invalid_argument);
    CHECK_THROWS_AS(make_stored_energy("exotic", 3), std::invalid_argument);

    // sign ledgers h'' > 0, h''' < 0 (h''' by finite difference)
    for (const char* label : {"reciprocal", "superlinear"}) {
        auto e = make_stored_energy(label, 3);
        for (double v : log_grid(1e-3, 1e3, 1000)) {
            CHECK(e.h_second(v) > 0.0);
            const double h = 1e-5 * v;
            const double d3 = (e.h_second(v + h) - e.h_second(v - h)) / (2.0 * h);
            CHECK(d3 < 0.0);
        }
        // h' negative left of H, positive right of H
        CHECK(e.h_prime(0.5 * e.H) < 0.0);
        CHECK(e.h_prime(2.0 * e.H) > 0.0);
    }
}

TEST_CASE("radial stress values and isotropy on the diagonal") {
    auto rec = make_stored_energy("reciprocal", 3);
    auto S = radial_stress(rec, 2.0, 1.0);
    CHECK(S.Phi1 == doctest::Approx(2.75));
    CHECK(S.Phi2 == doctest::Approx(2.5));
    auto Sd = radial_stress(rec, 1.0, 1.0);
    CHECK(Sd.Phi1 == doctest::Approx(1.0));
    CHECK(Sd.Phi2 == doctest::Approx(1.0));

    Rng rng(3);
    for (const char* label : {"reciprocal", "superlinear"}) {
        auto e = make_stored_energy(label, 3);
        for (int i = 0; i < 50; ++i) {
            const double lam = rng.uniform(0.2, 5.0);
            auto s = radial_stress(e, lam, lam);
            CHECK(s.Phi1 == doctest::Approx(s.Phi2).epsilon(1e-14));
        }
    }
    CHECK_THROWS_AS(radial_stress(rec, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("radial stress is the gradient of the radial energy density") {
    Rng rng(11);
    for (const char* label : {"reciprocal", "superlinear"}) {
        auto e = make_stored_energy(label, 3);
        for (int i = 0; i < 60; ++i) {
            const double l1 = rng.uniform(0.3, 4.0), l2 = rng.uniform(0.3, 4.0);
            const double h1 = 1e-5 * l1, h2 = 1e-5 * l2;
            auto S = radial_stress(e, l1, l2);
            const double fd1 = (radial_energy_density(e, l1 + h1, l2) -
                                radial_energy_density(e, l1 - h1, l2)) /
                               (2.0 * h1);
            const double fd2 = (radial_energy_density(e, l1, l2 + h2) -
                                radial_energy_density(e, l1, l2 - h2)) /
                               (2.0 * h2);
            CHECK(fd1 == doctest::Approx(S.Phi1).epsilon(1e-7));
            CHECK(fd2 == doctest::Approx((e.d - 1) * S.Phi2).epsilon(1e-7));
        }
    }
}

TEST_CASE("dPhi1 partials match finite differences") {
    auto e = make_stored_energy("reciprocal", 3);
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        const double l1 = rng.uniform(0.3, 4.0), l2 = rng.uniform(0.3, 4.0);
        const double h = 1e-6;
        const double fd1 = (radial_stress(e, l1 + h, l2).Phi1 -
                            radial_stress(e, l1 - h, l2).Phi1) /
                           (2.0 * h);
        const double fd2 = (radial_stress(e, l1, l2 + h).Phi1 -
                            radial_stress(e, l1, l2 - h).Phi1) /
                           (2.0 * h);
        CHECK(fd1 == doctest::Approx(dPhi1_dlam1(e, l1, l2)).epsilon(1e-6));
        CHECK(fd2 == doctest::Approx(dPhi1_dlam2(e, l1, l2)).epsilon(1e-6));
    }
}
