#pragma once

#include <functional>
#include <vector>

#include "sliclab/constitutive.hpp"
#include "sliclab/crack.hpp"
#include "sliclab/extrapolate.hpp"
#include "sliclab/mollifier.hpp"
#include "sliclab/test_function.hpp"

namespace slic {

/// A mollified 1-D motion at a fixed scale, as used by the weak pairing:
/// displacement and strain evaluators plus the kinks of the strain in x.
struct Motion1D {
    std::function<double(double, double)> y;   // (x,t)
    std::function<double(double, double)> u;   // dx y
    std::function<double(double)> tau;
    std::function<std::vector<double>(double)> x_breakpoints;   // per time
    std::vector<double> t_breakpoints;
};

Motion1D make_crack_motion(const CrackFan& fan, const Mollifier& phi, double n);

/// <f_n, psi> = int int y_n psi_tt + tau(u_n) psi_x dx dt over the support
/// box of psi (weak pairing; no second time-derivative quadrature).
double pair_residual_1d(const Motion1D& motion, const ScalarBumpTest& psi,
                        QuadratureOptions inner = {1e-12, 1e-13},
                        QuadratureOptions outer = {1e-11, 1e-12});

/// Radial mollified motion at fixed scale for dimension d.
struct RadialMotion {
    int d = 3;
    const StoredEnergy3D* energy = nullptr;
    std::function<double(double, double)> w;     // (R,t)
    std::function<double(double, double)> w_R;
    std::function<std::vector<double>(double)> R_breakpoints;   // per time
    std::vector<double> t_breakpoints;
};

/// Radial vector test field psi = g(R,t) x in evaluator form.
struct RadialTestField {
    std::function<double(double, double)> g, g_R, g_tt;
    double t_lo, t_hi;
    double R_hi;                  // support: g == 0 for R >= R_hi
    std::vector<double> R_marks;  // kinks/marks of g in R
};

RadialTestField as_field(const RadialVectorTest& psi);

/// Annular variant supported on R in (Rc - Ra, Rc + Ra), away from the origin.
RadialTestField make_annular_field(double t0, double b, double Rc, double Ra);

/// Weak pairing of the d-dimensional residual against psi = g(R,t) x,
/// reduced to a radial integral:
///   omega_d int int [ w R g_tt + Phi1 (g + R g_R) + (d-1) Phi2 g ] R^{d-1} dR dt.
double pair_residual_radial(const RadialMotion& motion, const RadialTestField& psi,
                            QuadratureOptions inner = {1e-11, 1e-12},
                            QuadratureOptions outer = {1e-10, 1e-11});

/// Self-similar p-system pairing: int (p(u_n)/1 - xi v_n) psi' - v_n psi dxi
/// with p(u) = u^{-gamma}/gamma.
struct SelfSimilarFields {
    double gamma = 2.0;
    std::function<double(double)> u;   // specific volume u_n(xi)
    std::function<double(double)> v;   // velocity v_n(xi)
    std::vector<double> xi_breakpoints;
};

double pair_residual_selfsim(const SelfSimilarFields& fields, const Bump1D& psi,
                             QuadratureOptions opts = {1e-12, 1e-13});

/// The reference pairing 2 Y0 L int_0^inf t psi_x(0,t) dt (the distribution
/// -2 Y0 L <dx delta_{x=0}, t psi>).
double delta_derivative_pairing(double Y0, double L, const ScalarBumpTest& psi);

/// Surface area of the unit sphere in R^d.
double unit_sphere_area(int d);

/// Runs a pairing over a scale sequence and assembles a report.
ResidualReport residual_study(const std::vector<int>& n_values,
                              const std::function<double(int)>& residual_at,
                              double target, double tolerance);

} // namespace slic
