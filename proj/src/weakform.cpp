#include "sliclab/weakform.hpp"

#include <cmath>

namespace slic {

Motion1D make_crack_motion(const CrackFan& fan, const Mollifier& phi, double n) {
    Motion1D m;
    m.y = [fan, phi, n](double x, double t) { return mollified_y(fan, phi, n, x, t); };
    m.u = [fan, phi, n](double x, double t) { return mollified_u(fan, phi, n, x, t); };
    m.tau = fan.law.tau;
    m.x_breakpoints = [fan, n](double t) {
        const double st = fan.sigma * std::max(t, 0.0);
        return std::vector<double>{-st - 1.0 / n, -st + 1.0 / n, -1.0 / n, 0.0,
                                   1.0 / n, st - 1.0 / n, st + 1.0 / n, -st, st};
    };
    m.t_breakpoints = {0.0, 2.0 / (n * fan.sigma)};
    return m;
}

double pair_residual_1d(const Motion1D& motion, const ScalarBumpTest& psi,
                        QuadratureOptions inner, QuadratureOptions outer) {
    auto inner_int = [&](double t) {
        auto f = [&](double x) {
            return motion.y(x, t) * psi.psi_tt(x, t) +
                   motion.tau(motion.u(x, t)) * psi.psi_x(x, t);
        };
        return integrate(f, psi.x_lo(), psi.x_hi(), motion.x_breakpoints(t), inner);
    };
    return integrate(inner_int, psi.t_lo(), psi.t_hi(), motion.t_breakpoints, outer);
}

RadialTestField as_field(const RadialVectorTest& psi) {
    RadialTestField f;
    f.g = [psi](double R, double t) { return psi.g(R, t); };
    f.g_R = [psi](double R, double t) { return psi.g_R(R, t); };
    f.g_tt = [psi](double R, double t) { return psi.g_tt(R, t); };
    f.t_lo = psi.t_lo();
    f.t_hi = psi.t_hi();
    f.R_hi = psi.R_cut;
    f.R_marks = {psi.R_plateau};
    return f;
}

RadialTestField make_annular_field(double t0, double b, double Rc, double Ra) {
    Bump1D zeta{t0, b}, rho{Rc, Ra};
    RadialTestField f;
    f.g = [zeta, rho](double R, double t) { return zeta(t) * rho(R); };
    f.g_R = [zeta, rho](double R, double t) { return zeta(t) * rho.d1(R); };
    f.g_tt = [zeta, rho](double R, double t) { return zeta.d2(t) * rho(R); };
    f.t_lo = t0 - b;
    f.t_hi = t0 + b;
    f.R_hi = Rc + Ra;
    f.R_marks = {std::max(0.0, Rc - Ra), Rc};
    return f;
}

double pair_residual_radial(const RadialMotion& motion, const RadialTestField& psi,
                            QuadratureOptions inner, QuadratureOptions outer) {
    if (motion.d < 3) throw std::invalid_argument("pair_residual_radial: d >= 3 required");
    const double omega = unit_sphere_area(motion.d);
    const auto& energy = *motion.energy;

    auto inner_int = [&](double t) {
        auto f = [&](double R) {
            const double w = motion.w(R, t);
            const double lam1 = motion.w_R(R, t);
            const double lam2 = w / R;
            const auto S = radial_stress(energy, lam1, lam2);
            const double val = w * R * psi.g_tt(R, t) +
                               S.Phi1 * (psi.g(R, t) + R * psi.g_R(R, t)) +
                               (motion.d - 1) * S.Phi2 * psi.g(R, t);
            return val * std::pow(R, motion.d - 1);
        };
        std::vector<double> bp = motion.R_breakpoints(t);
        for (double m : psi.R_marks) bp.push_back(m);
        return integrate(f, 0.0, psi.R_hi, bp, inner);
    };
    std::vector<double> tb = motion.t_breakpoints;
    return omega * integrate(inner_int, psi.t_lo, psi.t_hi, tb, outer);
}

double pair_residual_selfsim(const SelfSimilarFields& fields, const Bump1D& psi,
                             QuadratureOptions opts) {
    const double g = fields.gamma;
    auto f = [&](double xi) {
        const double u = fields.u(xi);
        const double v = fields.v(xi);
        const double p = std::pow(u, -g) / g;
        return (p - xi * v) * psi.d1(xi) - v * psi(xi);
    };
    return integrate(f, psi.center - psi.halfwidth, psi.center + psi.halfwidth,
                     fields.xi_breakpoints, opts);
}

double delta_derivative_pairing(double Y0, double L, const ScalarBumpTest& psi) {
    if (L == 0.0) return 0.0;
    auto f = [&](double t) { return t * psi.psi_x(0.0, t); };
    return 2.0 * Y0 * L *
           integrate(f, std::max(0.0, psi.t_lo()), psi.t_hi(), QuadratureOptions{1e-13, 1e-13});
}

double unit_sphere_area(int d) {
    return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

ResidualReport residual_study(const std::vector<int>& n_values,
                              const std::function<double(int)>& residual_at,
                              double target, double tolerance) {
    ResidualReport rep;
    for (int n : n_values) {
        rep.n_values.push_back(n);
        rep.residuals.push_back(residual_at(n));
    }
    rep.target = target;
    rep.tolerance = tolerance;
    rep.finalize();
    return rep;
}

} // namespace slic
