#include "sliclab/vacuum.hpp"

#include <cmath>
#include <stdexcept>

#include "sliclab/quadrature.hpp"

namespace slic {

VacuumFan make_vacuum_fan(double u_bar, double v_bar, double gamma) {
    if (!(u_bar > 0.0) || !(v_bar > 0.0) || !(gamma > 1.0))
        throw std::invalid_argument("vacuum fan: need u_bar, v_bar > 0 and gamma > 1");
    VacuumFan fan;
    fan.u_bar = u_bar;
    fan.v_bar = v_bar;
    fan.gamma = gamma;
    fan.w = std::pow(u_bar, 0.5 * (1.0 - gamma)) + 0.5 * (1.0 - gamma) * v_bar;
    if (fan.w >= 0.0)
        throw std::invalid_argument(
            "vacuum fan: w >= 0, a standard weak solution exists (no vacuum)");
    fan.xi_F = std::pow(u_bar, -0.5 * (gamma + 1.0));
    fan.delta_mass = -4.0 * fan.w / (gamma - 1.0);
    return fan;
}

double VacuumFan::displacement(double xi) const {
    if (xi < 0.0) return -displacement(-xi);
    if (xi == 0.0) return 0.0;
    if (xi > xi_F) return v_bar + u_bar * xi;
    const double g = gamma;
    return (g + 1.0) / (g - 1.0) * std::pow(xi, (g - 1.0) / (g + 1.0)) - 2.0 * w / (g - 1.0);
}

double VacuumFan::u_ac(double xi) const {
    const double a = std::abs(xi);
    if (a > xi_F) return u_bar;
    return std::pow(a, -2.0 / (gamma + 1.0));
}

double VacuumFan::v(double xi) const {
    if (std::abs(xi) > xi_F) return xi > 0.0 ? v_bar : -v_bar;
    const double g = gamma;
    const double sgn = xi > 0.0 ? 1.0 : (xi < 0.0 ? -1.0 : 0.0);
    return 2.0 / (g - 1.0) * sgn * (std::pow(std::abs(xi), (g - 1.0) / (g + 1.0)) - w);
}

namespace {

// int_a^b f(xi) xi^{-2/(gamma+1)} style integrals need a graded treatment at
// the origin; substitute xi = tau^m with m = (gamma+1)/(gamma-1) so that the
// integrand becomes bounded.
double convolve_uac(const VacuumFan& fan, const Mollifier& phi, double n, double xi) {
    const double lo = xi - 1.0 / n, hi = xi + 1.0 / n;
    QuadratureOptions opts{1e-12, 1e-13};
    auto f = [&](double z) { return phi.phi_n(n, xi - z) * fan.u_ac(z); };
    std::vector<double> bp{-fan.xi_F, 0.0, fan.xi_F};
    if (lo >= 0.0 || hi <= 0.0)
        return integrate(f, lo, hi, bp, opts);
    // split at 0 and regularize both sides
    const double m = (fan.gamma + 1.0) / (fan.gamma - 1.0);
    auto sub = [&](double b) {
        // int_0^b phi_n(xi - z) z^{-2/(g+1)} dz, z = tau^m
        if (b <= 0.0) return 0.0;
        const double tb = std::pow(b, 1.0 / m);
        auto g = [&](double tau) {
            const double z = std::pow(tau, m);
            return phi.phi_n(n, xi - z) * std::pow(z, -2.0 / (fan.gamma + 1.0)) * m *
                   std::pow(tau, m - 1.0);
        };
        return integrate(g, 0.0, tb, opts);
    };
    double val = sub(std::min(hi, fan.xi_F));
    if (hi > fan.xi_F)
        val += integrate(f, fan.xi_F, hi, opts);
    // negative side, z -> -z
    auto fneg = [&](double z) { return phi.phi_n(n, xi + z) * fan.u_ac(z); };
    const double hneg = -lo;
    const double m2 = std::min(hneg, fan.xi_F);
    auto subn = [&](double b) {
        if (b <= 0.0) return 0.0;
        const double tb = std::pow(b, 1.0 / m);
        auto g = [&](double tau) {
            const double z = std::pow(tau, m);
            return phi.phi_n(n, xi + z) * std::pow(z, -2.0 / (fan.gamma + 1.0)) * m *
                   std::pow(tau, m - 1.0);
        };
        return integrate(g, 0.0, tb, opts);
    };
    val += subn(m2);
    if (hneg > fan.xi_F)
        val += integrate(fneg, fan.xi_F, hneg, opts);
    return val;
}

} // namespace

double MollifiedFanFields::r_n(double xi) const {
    const auto& f = *fan;
    if (std::abs(xi) - 1.0 / n > f.xi_F)
        return f.displacement(xi);   // affine branch reproduced exactly
    auto y = [&](double z) { return f.displacement(z); };
    std::vector<double> bp{-f.xi_F, 0.0, f.xi_F};
    return convolve_line(y, n, xi, phi, bp, QuadratureOptions{1e-12, 1e-13});
}

double MollifiedFanFields::u_n(double xi) const {
    const auto& f = *fan;
    if (std::abs(xi) - 1.0 / n > f.xi_F) return f.u_bar;
    return convolve_uac(f, phi, n, xi) + f.delta_mass * phi.phi_n(n, xi);
}

double MollifiedFanFields::v_n(double xi) const { return r_n(xi) - xi * u_n(xi); }

SelfSimilarFields MollifiedFanFields::as_selfsim() const {
    SelfSimilarFields s;
    s.gamma = fan->gamma;
    s.u = [this](double xi) { return u_n(xi); };
    s.v = [this](double xi) { return v_n(xi); };
    s.xi_breakpoints = {-fan->xi_F, -1.0 / n, 0.0, 1.0 / n, fan->xi_F};
    return s;
}

MollifiedFanFields mollified_fan_fields(const VacuumFan& fan, const Mollifier& phi, double n) {
    return MollifiedFanFields{&fan, phi, n};
}

ResidualReport vacuum_residual(const VacuumFan& fan, const Mollifier& phi,
                               const std::vector<int>& n_seq, const Bump1D& psi,
                               double tolerance) {
    if (psi.center - psi.halfwidth < -fan.xi_F || psi.center + psi.halfwidth > fan.xi_F)
        throw std::invalid_argument("vacuum residual: supp psi must lie inside the fan");
    return residual_study(
        n_seq,
        [&](int n) {
            auto fields = mollified_fan_fields(fan, phi, n);
            return pair_residual_selfsim(fields.as_selfsim(), psi);
        },
        0.0, tolerance);
}

double first_equation_pairing(const MollifiedFanFields& fields, const Bump1D& psi) {
    // int (-xi u_n' - v_n') psi = int u_n (psi + xi psi') + v_n psi'
    auto f = [&](double xi) {
        return fields.u_n(xi) * (psi(xi) + xi * psi.d1(xi)) + fields.v_n(xi) * psi.d1(xi);
    };
    std::vector<double> bp{-fields.fan->xi_F, -1.0 / fields.n, 0.0, 1.0 / fields.n,
                           fields.fan->xi_F};
    return integrate(f, psi.center - psi.halfwidth, psi.center + psi.halfwidth, bp,
                     QuadratureOptions{1e-12, 1e-13});
}

VacuumEnergy vacuum_energy(const VacuumFan& fan, const Mollifier& phi, double xi_bar,
                           const std::vector<int>& n_seq) {
    if (!(0.0 < xi_bar && xi_bar <= fan.xi_F))
        throw std::invalid_argument("vacuum energy: need 0 < xi_bar <= xi_F");
    VacuumEnergy out;
    const double g = fan.gamma;
    std::vector<double> ns;
    for (int n : n_seq) {
        auto fields = mollified_fan_fields(fan, phi, n);
        auto f = [&](double xi) {
            const double u = fields.u_n(xi);
            const double v = fields.v_n(xi);
            return std::pow(u, 1.0 - g) / (g * (g - 1.0)) + 0.5 * v * v;
        };
        std::vector<double> bp{-1.0 / n, 0.0, 1.0 / n};
        ns.push_back(n);
        out.E_n.push_back(
            integrate(f, -xi_bar, xi_bar, bp, QuadratureOptions{1e-11, 1e-12}));
    }
    out.extrapolation = extrapolate_limit(ns, out.E_n);
    bool ratio2 = out.E_n.size() >= 4;
    for (std::size_t i = 0; i + 1 < n_seq.size(); ++i)
        ratio2 = ratio2 && n_seq[i + 1] == 2 * n_seq[i];
    if (ratio2) {
        // the kernel window at xi = 0 contributes a known asymptotic ladder
        // a n^{-1} + b n^{-1-q} + c n^{-1-2q} with q = (gamma-1)/(gamma+1);
        // peel it off by Richardson with these exponents
        const double q = (g - 1.0) / (g + 1.0);
        std::vector<double> seq = out.E_n;
        for (double pexp : {1.0, 1.0 + q, 1.0 + 2.0 * q}) {
            if (seq.size() < 2) break;
            const double fct = std::pow(2.0, pexp);
            std::vector<double> next;
            for (std::size_t i = 0; i + 1 < seq.size(); ++i)
                next.push_back((fct * seq[i + 1] - seq[i]) / (fct - 1.0));
            seq = next;
        }
        out.extrapolation.limit = seq.back();
        out.extrapolation.valid = true;
    }

    auto closed = [&](double xi) {
        const double a = std::pow(std::abs(xi), (g - 1.0) / (g + 1.0));
        return std::pow(std::abs(xi), 2.0 * (g - 1.0) / (g + 1.0)) / (g * (g - 1.0)) +
               2.0 / ((g - 1.0) * (g - 1.0)) * (a - fan.w) * (a - fan.w);
    };
    out.closed_form =
        integrate(closed, -xi_bar, xi_bar, std::vector<double>{0.0},
                  QuadratureOptions{1e-13, 1e-14});
    out.rel_error = std::abs(out.extrapolation.limit - out.closed_form) /
                    std::abs(out.closed_form);
    return out;
}

double vacuum_u_floor(const VacuumFan& fan) {
    return std::pow(fan.xi_F + 1.0, -2.0 / (fan.gamma + 1.0));
}

double vacuum_v_cap(const VacuumFan& fan, const Mollifier& phi) {
    const double g = fan.gamma;
    const double edge = std::pow(fan.xi_F + 1.0, (g - 1.0) / (g + 1.0));
    return 2.0 / (g - 1.0) * (edge - fan.w) +
           2.0 * phi.phi_max * (g + 1.0) / (g - 1.0) * edge -
           4.0 * fan.w * phi.phi_max / (g - 1.0);
}

} // namespace slic
