#include "sliclab/crack.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sliclab/quadrature.hpp"

namespace slic {

CrackFan solve_fan(const StressLaw1D& law, double lambda, double alpha) {
    if (!(0.0 < alpha && alpha < lambda))
        throw std::invalid_argument("solve_fan: need 0 < alpha < lambda");
    CrackFan fan;
    fan.law = law;
    fan.lambda = lambda;
    fan.alpha = alpha;
    fan.sigma = std::sqrt((law.tau(lambda) - law.tau(alpha)) / (lambda - alpha));
    fan.Y0 = (lambda - alpha) * fan.sigma;
    fan.lax_ok = std::sqrt(law.tau_prime(alpha)) > fan.sigma &&
                 fan.sigma > std::sqrt(law.tau_prime(lambda));
    if (!fan.lax_ok)
        throw std::runtime_error("solve_fan: Lax admissibility violated");
    return fan;
}

double motion(const CrackFan& fan, double x, double t) {
    if (t <= 0.0) return fan.lambda * x;
    const double st = fan.sigma * t;
    if (x < -st) return fan.lambda * x;
    if (x < 0.0) return -t * fan.Y0 + fan.alpha * x;
    if (x < st) return t * fan.Y0 + fan.alpha * x;
    return fan.lambda * x;
}

double mollified_u(const CrackFan& fan, const Mollifier& phi, double n, double x, double t) {
    if (t <= 0.0) return fan.lambda;
    const double st = fan.sigma * t;
    return 2.0 * phi.phi_n(n, x) * t * fan.Y0 + fan.lambda -
           (fan.lambda - fan.alpha) * (phi.Phi(n * (x + st)) - phi.Phi(n * (x - st)));
}

double mollified_v(const CrackFan& fan, const Mollifier& phi, double n, double x, double t) {
    if (t <= 0.0) return 0.0;
    const double st = fan.sigma * t;
    return fan.Y0 * (2.0 * phi.Phi(n * x) - phi.Phi(n * (x - st)) - phi.Phi(n * (x + st)));
}

double mollified_a(const CrackFan& fan, const Mollifier& phi, double n, double x, double t) {
    if (t <= 0.0) return 0.0;
    const double st = fan.sigma * t;
    return fan.Y0 * fan.sigma * (phi.phi_n(n, x - st) - phi.phi_n(n, x + st));
}

double mollified_u_t(const CrackFan& fan, const Mollifier& phi, double n, double x, double t) {
    if (t <= 0.0) return 0.0;
    const double st = fan.sigma * t;
    return 2.0 * phi.phi_n(n, x) * fan.Y0 -
           (fan.lambda - fan.alpha) * fan.sigma *
               (phi.phi_n(n, x + st) + phi.phi_n(n, x - st));
}

CrackFields mollified_fields(const CrackFan& fan, const Mollifier& phi, double n,
                             double x, double t) {
    return {mollified_u(fan, phi, n, x, t), mollified_v(fan, phi, n, x, t),
            mollified_a(fan, phi, n, x, t)};
}

double mollified_y(const CrackFan& fan, const Mollifier& phi, double n, double x, double t) {
    if (t <= 0.0) return fan.lambda * x;
    // y = lambda x + conv of g, g(z) = (alpha-lambda) z + t Y0 sign(z) on |z| < sigma t
    const double st = fan.sigma * t;
    const double c = fan.alpha - fan.lambda;
    auto piece = [&](double a, double b, double e) {
        // int_a^b phi_n(x - z) (c z + e) dz
        return (c * x + e) * (phi.Phi_n(n, x - a) - phi.Phi_n(n, x - b)) -
               c * (phi.M_n(n, x - a) - phi.M_n(n, x - b));
    };
    return fan.lambda * x + piece(-st, 0.0, -t * fan.Y0) + piece(0.0, st, t * fan.Y0);
}

namespace {

// integrate f(x,t) dx dt over [t0,t1] with per-time x-panels; x-breakpoints
// track the moving shocks and the kernel layer at the origin.
double space_time_integral(const CrackFan& fan, double n, double t0, double t1,
                           double x_lo, double x_hi,
                           const std::function<double(double, double)>& f) {
    if (t1 <= t0 || x_hi <= x_lo) return 0.0;
    QuadratureOptions inner{1e-12, 1e-13};
    QuadratureOptions outer{1e-11, 1e-12};
    auto inner_int = [&](double t) {
        std::vector<double> bp;
        const double st = fan.sigma * t;
        for (double b : {-st - 1.0 / n, -st + 1.0 / n, -1.0 / n, 1.0 / n, st - 1.0 / n,
                         st + 1.0 / n, -st, st, 0.0})
            bp.push_back(b);
        return integrate([&](double x) { return f(x, t); }, x_lo, x_hi, bp, inner);
    };
    std::vector<double> tb{0.0, 2.0 / (n * fan.sigma)};
    return integrate(inner_int, t0, t1, tb, outer);
}

} // namespace

ResidualTerms residual_terms(const CrackFan& fan, const Mollifier& phi, double n,
                             const ScalarBumpTest& psi) {
    ResidualTerms out{};
    const double ts = 2.0 / (n * fan.sigma);
    const double t_lo = std::max(psi.t_lo(), 0.0);
    const double t_hi = psi.t_hi();
    const double x_lo = psi.x_lo(), x_hi = psi.x_hi();

    auto accel = [&](double x, double t) {
        return mollified_a(fan, phi, n, x, t) * psi.psi(x, t);
    };
    auto stress = [&](double x, double t) {
        return fan.law.tau(mollified_u(fan, phi, n, x, t)) * psi.psi_x(x, t);
    };

    out.J = space_time_integral(fan, n, std::max(t_lo, ts), t_hi, x_lo, x_hi, accel);
    out.I1 = space_time_integral(fan, n, std::max(t_lo, ts), t_hi, x_lo, x_hi,
                                 [&](double x, double t) {
                                     return std::abs(x) > 1.0 / n ? stress(x, t) : 0.0;
                                 });
    out.I2 = space_time_integral(fan, n, std::max(t_lo, ts), t_hi,
                                 std::max(x_lo, -1.0 / n), std::min(x_hi, 1.0 / n), stress);
    out.E = space_time_integral(fan, n, t_lo, std::min(t_hi, ts), x_lo, x_hi,
                                [&](double x, double t) { return accel(x, t) + stress(x, t); });
    return out;
}

double J_limit(const CrackFan& fan, const ScalarBumpTest& psi) {
    auto f = [&](double t) {
        return fan.Y0 * fan.sigma *
               (psi.psi(fan.sigma * t, t) - psi.psi(-fan.sigma * t, t));
    };
    return integrate(f, std::max(0.0, psi.t_lo()), psi.t_hi(), QuadratureOptions{1e-12, 1e-12});
}

double I2_limit(const CrackFan& fan, const ScalarBumpTest& psi) {
    auto f = [&](double t) { return t * psi.psi_x(0.0, t); };
    return 2.0 * fan.law.L * fan.Y0 *
           integrate(f, std::max(0.0, psi.t_lo()), psi.t_hi(), QuadratureOptions{1e-12, 1e-12});
}

EnergyAudit1D energy_audit(const CrackFan& fan, const Mollifier& phi, double n, double t_ref) {
    EnergyAudit1D audit;
    audit.t_ref = t_ref;
    const auto& law = fan.law;
    const double Wl = law.W(fan.lambda), Wa = law.W(fan.alpha);
    audit.mu_plus = -fan.sigma * (-0.5 * fan.Y0 * fan.Y0 + Wl - Wa) + fan.Y0 * law.tau(fan.alpha);
    audit.mu_minus = fan.sigma * (0.5 * fan.Y0 * fan.Y0 + Wa - Wl) + fan.Y0 * law.tau(fan.alpha);

    auto pc_integrand = [&](double x) {
        return law.tau(fan.alpha + 2.0 * phi.phi_n(n, x) * t_ref * fan.Y0) * 2.0 * fan.Y0 *
               phi.phi_n(n, x);
    };
    audit.pc_n = integrate(pc_integrand, -1.0 / n, 1.0 / n, QuadratureOptions{1e-12, 1e-13}) -
                 2.0 * fan.Y0 * law.tau(fan.alpha);

    audit.finite_cost = std::isfinite(law.tau_inf);
    if (audit.finite_cost) {
        audit.pc_limit = 2.0 * (law.tau_inf - law.tau(fan.alpha)) * fan.Y0;
        audit.T = audit.mu_minus + audit.mu_plus + audit.pc_limit;
    } else {
        audit.pc_limit = kInf;
        audit.T = kInf;
    }

    // sampled sup of |e_n(t)| over the interaction window
    const double ts = 2.0 / (n * fan.sigma);
    double sup = 0.0;
    const int samples = 1000;
    for (int i = 1; i <= samples; ++i) {
        const double t = ts * i / (samples + 1.0);
        sup = std::max(sup, std::abs(energy_rate_numeric(fan, phi, n, t)));
    }
    audit.en_transient_bound = sup;
    return audit;
}

double energy_rate_numeric(const CrackFan& fan, const Mollifier& phi, double n, double t) {
    if (t <= 0.0) return 0.0;
    const double st = fan.sigma * t;
    const double r = st + 1.0 / n + 1.0;
    auto f = [&](double x) {
        const double v = mollified_v(fan, phi, n, x, t);
        const double a = mollified_a(fan, phi, n, x, t);
        const double u = mollified_u(fan, phi, n, x, t);
        const double ut = mollified_u_t(fan, phi, n, x, t);
        return v * a + fan.law.tau(u) * ut;
    };
    std::vector<double> bp{-st - 1.0 / n, -st + 1.0 / n, -1.0 / n, 1.0 / n,
                           st - 1.0 / n, st + 1.0 / n, -st, 0.0, st};
    return integrate(f, -r, r, bp, QuadratureOptions{1e-12, 1e-13});
}

double kernel_self_interaction(const CrackFan& fan, const Mollifier& phi, double n, double t) {
    const double st = fan.sigma * t;
    auto outer = [&](double x) {
        const double inner = phi.Phi_n(n, x) - phi.Phi_n(n, x - st);   // int_0^{st} phi_n(x-z) dz
        return inner * phi.phi_n(n, x - st);
    };
    return integrate(outer, st - 1.0 / n, st + 1.0 / n, QuadratureOptions{1e-13, 1e-14});
}

double shock_layer_energy(const CrackFan& fan, const Mollifier& phi, double n) {
    const double la = fan.lambda - fan.alpha;
    auto f = [&](double xb) {
        const double q = 0.5 + phi.Phi_n(n, xb);   // int_{-inf}^{xb} phi_n
        return fan.law.tau(fan.alpha + la * q) * (-la) * fan.sigma * phi.phi_n(n, xb);
    };
    return integrate(f, -1.0 / n, 1.0 / n, QuadratureOptions{1e-13, 1e-14});
}

double total_rate_closed_form(const CrackFan& fan) {
    if (!std::isfinite(fan.law.tau_inf)) return kInf;
    const double Wl = fan.law.W(fan.lambda), Wa = fan.law.W(fan.alpha);
    return fan.sigma * fan.Y0 * fan.Y0 +
           2.0 * fan.Y0 * (fan.law.tau_inf - (Wl - Wa) / (fan.lambda - fan.alpha));
}

} // namespace slic
