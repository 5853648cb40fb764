#include "sliclab/cavitation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sliclab/ode.hpp"
#include "sliclab/rng.hpp"

namespace slic {

double selfsim_ode_rhs(const StoredEnergy3D& e, double s, double r, double rp) {
    if (!(s > 0.0) || !(r > 0.0) || !(rp > 0.0))
        throw OdeGuardError("similarity ode: state left the admissible cone");
    const double lam2 = r / s;
    const double A = s * s - dPhi1_dlam1(e, rp, lam2);
    if (std::abs(A) < 1e-9 * std::max(s * s, std::abs(A) + 1.0))
        throw OdeGuardError("similarity ode: sonic degeneracy");
    const auto S = radial_stress(e, rp, lam2);
    const double rhs = dPhi1_dlam2(e, rp, lam2) * (rp * s - r) / (s * s) +
                       (e.d - 1) / s * (S.Phi1 - S.Phi2);
    return rhs / A;
}

namespace {

OdeRhs make_rhs(const StoredEnergy3D& e) {
    return [&e](double s, const OdeState& y) -> OdeState {
        return {y[1], selfsim_ode_rhs(e, s, y[0], y[1])};
    };
}

// inward integration runs in the flipped abscissa u = -s
OdeRhs make_rhs_inward(const StoredEnergy3D& e) {
    return [&e](double u, const OdeState& y) -> OdeState {
        return {-y[1], -selfsim_ode_rhs(e, -u, y[0], y[1])};
    };
}

double rh_defect(const StoredEnergy3D& e, double lambda, double sigma, double rp_minus) {
    const auto outer = radial_stress(e, lambda, lambda);
    const auto inner = radial_stress(e, rp_minus, lambda);
    return sigma * sigma * (lambda - rp_minus) - (outer.Phi1 - inner.Phi1);
}

// shock speed induced by the post-shock slope through the jump condition
double sigma_from_rh(const StoredEnergy3D& e, double lambda, double rp) {
    const auto outer = radial_stress(e, lambda, lambda);
    const auto inner = radial_stress(e, rp, lambda);
    const double s2 = (outer.Phi1 - inner.Phi1) / (lambda - rp);
    if (!(s2 > 0.0)) throw OdeGuardError("shoot: jump condition gives no real speed");
    return std::sqrt(s2);
}

struct CavityState {
    bool valid = false;
    double sigma = 0.0;
    double v0 = 0.0;       // extrapolated cavity specific volume
    double c1 = 0.0;       // linear coefficient of v(s) ~ v0 + c1 s
    double r_stop = 0.0;   // r at the deepest abscissa
};

// integrate inward from the shock to s = eps sigma and extrapolate v(0+)
CavityState cavity_state(const StoredEnergy3D& e, double lambda, int d, double rp) {
    CavityState out;
    try {
        const double sigma = sigma_from_rh(e, lambda, rp);
        const double s1 = 2e-6 * sigma, s2 = 1e-6 * sigma;
        OdeOptions opts;
        opts.rel_tol = 1e-13;
        opts.abs_tol = 1e-16;
        auto rec = rk45_integrate(make_rhs_inward(e), -sigma, -s2, {lambda * sigma, rp}, opts);
        auto v_of = [&](const OdeState& y, double s) {
            const double x = y[0] / s;
            return y[1] * std::pow(x, d - 1);
        };
        // locate the state at s1 on the dense output
        double v1 = 0.0;
        for (std::size_t i = 1; i < rec.size(); ++i) {
            if (rec[i].s >= -s1) {
                const OdeState y = hermite_state(rec[i - 1], rec[i], -s1);
                v1 = v_of(y, s1);
                break;
            }
        }
        const double v2 = v_of(rec.back().y, s2);
        out.sigma = sigma;
        out.v0 = 2.0 * v2 - v1;   // first-order Richardson in s
        out.c1 = (v1 - v2) / (s1 - s2);
        out.r_stop = rec.back().y[0];
        out.valid = true;
    } catch (const OdeGuardError&) {
        out.valid = false;
    }
    return out;
}

} // namespace

SimilarityProfile shoot_profile(const StoredEnergy3D& energy, double lambda, int d) {
    if (d < 3) throw std::invalid_argument("shoot_profile: d >= 3 required");

    // bracket v(0+) - H as a function of the post-shock slope
    const int n_scan = 80;
    double lo = 0.0, hi = 0.0, g_lo = 0.0;
    bool have_prev = false, have_bracket = false;
    double prev_rp = 0.0, prev_g = 0.0;
    for (int i = 0; i < n_scan && !have_bracket; ++i) {
        const double rp = lambda * (0.01 + 0.985 * i / (n_scan - 1.0));
        auto st = cavity_state(energy, lambda, d, rp);
        if (!st.valid) {
            have_prev = false;
            continue;
        }
        const double g = st.v0 - energy.H;
        if (have_prev && (prev_g > 0) != (g > 0)) {
            lo = prev_rp;
            g_lo = prev_g;
            hi = rp;
            have_bracket = true;
        } else {
            prev_rp = rp;
            prev_g = g;
            have_prev = true;
        }
    }
    if (!have_bracket)
        throw NoCavitationError("shoot_profile: traction-free cavity unreachable at lambda=" +
                                std::to_string(lambda));

    CavityState best;
    double rp_best = 0.0;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        auto st = cavity_state(energy, lambda, d, mid);
        if (!st.valid)
            throw NoCavitationError("shoot_profile: bisection left the admissible cone");
        const double g = st.v0 - energy.H;
        if ((g_lo > 0) != (g > 0))
            hi = mid;
        else {
            lo = mid;
            g_lo = g;
        }
        best = st;
        rp_best = mid;
        if (std::abs(g) < 1e-12 || (hi - lo) < 1e-16 * std::max(1.0, hi)) break;
    }

    SimilarityProfile p;
    p.energy = energy;
    p.d = d;
    p.lambda = lambda;
    p.sigma = best.sigma;
    p.rp_sigma = rp_best;
    p.rh_mismatch = std::abs(rh_defect(energy, lambda, best.sigma, rp_best));
    p.cavity_mismatch = std::abs(best.v0 - energy.H);
    p.v0_ = best.v0;

    // dense uniform tabulation, integrated inward (the stable direction)
    const int N = 16384, substeps = 4;
    p.s_min = 0.02 * p.sigma;
    p.ds_ = (p.sigma - p.s_min) / N;
    p.s_.resize(N + 1);
    p.r_.resize(N + 1);
    p.rp_.resize(N + 1);
    p.rpp_.resize(N + 1);
    auto rhs_in = make_rhs_inward(energy);
    OdeState y{lambda * p.sigma, rp_best};
    p.s_[N] = p.sigma;
    p.r_[N] = y[0];
    p.rp_[N] = y[1];
    for (int i = N - 1; i >= 0; --i) {
        const double a = p.s_min + (i + 1) * p.ds_, b = p.s_min + i * p.ds_;
        y = rk4_fixed(rhs_in, -a, -b, y, substeps);
        p.s_[i] = b;
        p.r_[i] = y[0];
        p.rp_[i] = y[1];
    }
    for (int i = 0; i <= N; ++i)
        p.rpp_[i] = selfsim_ode_rhs(energy, p.s_[i], p.r_[i], p.rp_[i]);

    // cavity asymptote v(s) ~ v0 + c1 s, matched to the table at the seam
    const double v_seam = p.rp_[0] * std::pow(p.r_[0] / p.s_min, d - 1);
    p.c1_ = (v_seam - p.v0_) / p.s_min;
    double r0 = best.r_stop;
    for (int it = 0; it < 4; ++it) {
        const double pw = std::pow(r0, d - 1);
        r0 = p.r_[0] - p.v0_ * std::pow(p.s_min, d) / (d * pw) -
             p.c1_ * std::pow(p.s_min, d + 1) / ((d + 1) * pw);
    }
    p.r0 = r0;

    // invariant sweep; a converged shot must still satisfy the fan structure
    bool ok = p.rp_sigma < lambda && p.r0 > 0.0;
    const double vmax = std::pow(lambda, d) + 1e-8;
    double v_prev = 0.0;
    for (int i = 0; i <= N; ++i) {
        const double v = p.rp_[i] * std::pow(p.r_[i] / p.s_[i], d - 1);
        ok = ok && p.rp_[i] > 0.0 && p.r_[i] > lambda * p.s_[i] - 1e-10;
        ok = ok && v > energy.H - 1e-7 && v < vmax;
        if (i > 0) ok = ok && v >= v_prev - 1e-9;
        v_prev = v;
    }
    if (!ok)
        throw std::runtime_error("shoot_profile: converged shot violates the fan invariants");
    return p;
}

double SimilarityProfile::r_at(double s) const {
    if (s >= sigma) return lambda * s;
    if (s <= s_min) {
        // near the cavity r' ~ (v0 + c1 s)(s/r0)^{d-1}
        const double pw = std::pow(r0, d - 1);
        return r0 + v0_ * std::pow(s, d) / (d * pw) +
               c1_ * std::pow(s, d + 1) / ((d + 1) * pw);
    }
    // quintic Hermite with ODE-exact node curvatures: C^2, error O(ds^6)
    const double g = (s - s_min) / ds_;
    const int i = std::min(static_cast<int>(g), static_cast<int>(s_.size()) - 2);
    const double u = g - i;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
    const double H0 = 1 - 10 * u3 + 15 * u4 - 6 * u5;
    const double H1 = u - 6 * u3 + 8 * u4 - 3 * u5;
    const double H2 = 0.5 * (u2 - 3 * u3 + 3 * u4 - u5);
    const double H3 = 10 * u3 - 15 * u4 + 6 * u5;
    const double H4 = -4 * u3 + 7 * u4 - 3 * u5;
    const double H5 = 0.5 * (u3 - 2 * u4 + u5);
    return H0 * r_[i] + H1 * ds_ * rp_[i] + H2 * ds_ * ds_ * rpp_[i] + H3 * r_[i + 1] +
           H4 * ds_ * rp_[i + 1] + H5 * ds_ * ds_ * rpp_[i + 1];
}

double SimilarityProfile::rp_at(double s) const {
    if (s >= sigma) return lambda;
    if (s <= s_min)
        return (v0_ + c1_ * s) * std::pow(s / r_at(s), d - 1);
    const double g = (s - s_min) / ds_;
    const int i = std::min(static_cast<int>(g), static_cast<int>(s_.size()) - 2);
    const double u = g - i;
    // cubic Hermite for r' with slopes from the ODE itself
    const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
    const double h10 = u * (1 - u) * (1 - u);
    const double h01 = u * u * (3 - 2 * u);
    const double h11 = u * u * (u - 1);
    return h00 * rp_[i] + h10 * ds_ * rpp_[i] + h01 * rp_[i + 1] + h11 * ds_ * rpp_[i + 1];
}

double SimilarityProfile::w(double R, double t) const {
    if (t <= 0.0) return lambda * R;
    return t * r_at(R / t);
}

double SimilarityProfile::w_R(double R, double t) const {
    if (t <= 0.0) return lambda;
    return rp_at(R / t);
}

double SimilarityProfile::w_t(double R, double t) const {
    if (t <= 0.0) return 0.0;
    const double s = R / t;
    return r_at(s) - s * rp_at(s);
}

double smallest_cavitating_lambda(const StoredEnergy3D& energy, int d,
                                  const std::vector<double>& candidates) {
    for (double lam : candidates) {
        try {
            shoot_profile(energy, lam, d);
            return lam;
        } catch (const NoCavitationError&) {
        }
    }
    throw NoCavitationError("no candidate stretch admits a cavitating profile");
}

double critical_lambda(const StoredEnergy3D& energy, int d, double lo, double hi,
                       int iterations) {
    auto works = [&](double lam) {
        try {
            shoot_profile(energy, lam, d);
            return true;
        } catch (const NoCavitationError&) {
            return false;
        }
    };
    if (works(lo)) return lo;
    if (!works(hi)) throw NoCavitationError("critical_lambda: no success at upper bound");
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        (works(mid) ? hi : lo) = mid;
    }
    return hi;
}

RadialFields mollified_radial_fields(const SimilarityProfile& p, const Mollifier& phi,
                                     double n, double R, double t) {
    RadialFields f{};
    const double st = t > 0.0 ? p.sigma * t : 0.0;
    if (R - 1.0 / n > st) {
        // kernel sees only the homogeneous branch
        f.w = p.lambda * R;
        f.lam1 = p.lambda;
        f.lam2 = p.lambda;
        f.v = std::pow(p.lambda, p.d);
        f.w_t = 0.0;
        return f;
    }
    std::vector<double> bp{st};
    f.w = convolve_radial_odd([&](double Rt) { return p.w(Rt, t); }, n, R, phi, bp);
    f.lam1 = convolve_radial_odd_deriv([&](double Rt) { return p.w_R(Rt, t); },
                                       t > 0.0 ? t * p.r0 : 0.0, n, R, phi, bp);
    f.lam2 = R > 1e-12 ? f.w / R : f.lam1;
    f.v = f.lam1 * std::pow(f.lam2, p.d - 1);
    f.w_t = convolve_radial_odd([&](double Rt) { return p.w_t(Rt, t); }, n, R, phi, bp);
    return f;
}

RadialMotion make_radial_motion(const SimilarityProfile& p, const Mollifier& phi, double n) {
    RadialMotion m;
    m.d = p.d;
    m.energy = &p.energy;
    m.w = [&p, phi, n](double R, double t) {
        const double st = t > 0.0 ? p.sigma * t : 0.0;
        if (R - 1.0 / n > st) return p.lambda * R;
        return convolve_radial_odd([&](double Rt) { return p.w(Rt, t); }, n, R, phi,
                                   std::vector<double>{st});
    };
    m.w_R = [&p, phi, n](double R, double t) {
        const double st = t > 0.0 ? p.sigma * t : 0.0;
        if (R - 1.0 / n > st) return p.lambda;
        return convolve_radial_odd_deriv([&](double Rt) { return p.w_R(Rt, t); },
                                         t > 0.0 ? t * p.r0 : 0.0, n, R, phi,
                                         std::vector<double>{st});
    };
    m.R_breakpoints = [&p, n](double t) {
        const double st = t > 0.0 ? p.sigma * t : 0.0;
        return std::vector<double>{1.0 / n, st - 1.0 / n, st, st + 1.0 / n};
    };
    m.t_breakpoints = {};
    return m;
}

double pde_residual_extrapolated(const SimilarityProfile& p, double R, double t,
                                 double step) {
    const double r1 = pde_residual_fd(p, R, t, step);
    const double r2 = pde_residual_fd(p, R, t, 0.5 * step);
    return (4.0 * r2 - r1) / 3.0;
}

double pde_residual_fd(const SimilarityProfile& p, double R, double t, double h) {
    auto w = [&](double RR, double tt) { return p.w(RR, tt); };
    const double w_tt = (w(R, t + h) - 2.0 * w(R, t) + w(R, t - h)) / (h * h);
    auto flux = [&](double RR) {
        const double lam1 = (w(RR + h, t) - w(RR - h, t)) / (2.0 * h);
        const double lam2 = w(RR, t) / RR;
        return std::pow(RR, p.d - 1) * radial_stress(p.energy, lam1, lam2).Phi1;
    };
    const double dflux = (flux(R + h) - flux(R - h)) / (2.0 * h);
    const double lam1 = (w(R + h, t) - w(R - h, t)) / (2.0 * h);
    const double lam2 = w(R, t) / R;
    const double source =
        (p.d - 1) / R * radial_stress(p.energy, lam1, lam2).Phi2;
    return w_tt - (dflux / std::pow(R, p.d - 1) - source);
}

LayerBoundReport verify_layer_bounds(const SimilarityProfile& p, const Mollifier& phi,
                                     const std::vector<int>& n_seq, int sample_budget,
                                     std::uint64_t seed) {
    LayerBoundReport rep;
    rep.phi0_positive = phi.phi0_positive;
    if (phi.phi0_positive) {
        // phi > delta on |x| < eps: take eps at half height
        double eps = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double x = i / 1000.0;
            if (phi.phi(x) >= 0.5 * phi.phi(0.0)) eps = x;
        }
        rep.eps = eps;
        rep.delta = phi.phi(eps);
        for (int i = 0; i <= 1000; ++i)
            rep.delta = std::min(rep.delta, phi.phi(rep.eps * i / 1000.0));
    }

    Rng rng(seed);
    const double slack = 1e-8;
    for (int n : n_seq) {
        LayerBoundLevel lvl;
        lvl.n = n;
        lvl.bulk_min = kInf;
        lvl.bulk_max = -kInf;
        lvl.near_min = kInf;
        const int per_region = sample_budget / 2;
        for (int i = 0; i < per_region; ++i) {
            const double t = rng.uniform(0.02, 1.5);
            const double R = rng.uniform(1.0 / n, p.sigma * 1.5 + 1.0);
            const double v = mollified_radial_fields(p, phi, n, R, t).v;
            lvl.bulk_min = std::min(lvl.bulk_min, v);
            lvl.bulk_max = std::max(lvl.bulk_max, v);
        }
        for (int i = 0; i < per_region; ++i) {
            const double t = rng.uniform(0.02, 1.5);
            const double R = rng.uniform(1e-6 / n, 1.0 / n);
            const auto f = mollified_radial_fields(p, phi, n, R, t);
            const double w0 = t * p.r0;
            lvl.near_min = std::min(lvl.near_min, f.v);
            lvl.near_ratio_max =
                std::max(lvl.near_ratio_max,
                         f.v / (1.0 + std::pow(t, p.d) * std::pow(double(n), p.d)));
            const double base = 2.0 * phi.phi_n(n, R) * w0;
            lvl.deriv_band_ok = lvl.deriv_band_ok && f.lam1 >= base - slack &&
                                f.lam1 <= base + p.lambda + slack;
            const double base2 = 2.0 * phi.Phi(n * R) * w0 / R;
            lvl.ratio_band_ok = lvl.ratio_band_ok && f.lam2 >= base2 - slack &&
                                f.lam2 <= base2 + p.lambda + slack;
            if (phi.phi0_positive && R < rep.eps / n) {
                const double core = std::pow(2.0 * n * rep.delta * w0, p.d);
                lvl.core_lower_ok = lvl.core_lower_ok && f.v >= core - slack;
            }
        }
        if (!phi.phi0_positive) {
            double sup = 0.0;
            for (int i = 0; i < per_region / 4; ++i) {
                const double t = rng.uniform(0.25, 1.5);
                const double R = rng.uniform(1e-8, 1.0 / (double(n) * n));
                sup = std::max(sup, mollified_radial_fields(p, phi, n, R, t).v);
            }
            lvl.degenerate_sup = sup;
        }
        rep.levels.push_back(lvl);
    }
    return rep;
}

std::string LayerBoundReport::to_csv() const {
    std::ostringstream os;
    os.precision(12);
    os << "n,bulk_min,bulk_max,near_min,near_ratio_max,deriv_band_ok,ratio_band_ok,"
          "core_lower_ok,degenerate_sup\n";
    for (const auto& l : levels)
        os << l.n << "," << l.bulk_min << "," << l.bulk_max << "," << l.near_min << ","
           << l.near_ratio_max << "," << l.deriv_band_ok << "," << l.ratio_band_ok << ","
           << l.core_lower_ok << "," << l.degenerate_sup << "\n";
    return os.str();
}

EnergyAudit3D energy_fan_3d(const SimilarityProfile& p, double t, double B_radius) {
    const auto& e = p.energy;
    if (!std::isfinite(e.L))
        throw InfiniteEnergyError("energy_fan_3d: lim h(v)/v = inf; the cavitating "
                                  "solution has infinite energy");
    if (B_radius <= p.sigma * t)
        throw std::invalid_argument("energy_fan_3d: ball must contain the wave fan");
    EnergyAudit3D a;
    a.t = t;
    a.B_radius = B_radius;
    const double omega = unit_sphere_area(p.d);
    const double rp = p.rp_sigma;
    const double lam = p.lambda;
    const double ld1 = std::pow(lam, p.d - 1);
    a.J = 0.5 * rp * rp + e.h(rp * ld1) - 0.5 * lam * lam - e.h(std::pow(lam, p.d)) +
          0.5 * (rp + e.h_prime(rp * ld1) * ld1 + lam + e.h_prime(std::pow(lam, p.d)) * ld1) *
              (lam - rp);
    a.cavity_term = std::pow(t, p.d) * omega / p.d * std::pow(p.r0, p.d) * e.L;
    a.D = std::pow(p.sigma, p.d) * a.J + std::pow(p.r0, p.d) * e.L;
    a.lemma_gap = std::pow(lam * p.sigma, p.d) * (1.0 - rp / lam) - std::pow(p.r0, p.d);
    a.E_homogeneous = omega * std::pow(B_radius, p.d) / p.d *
                      radial_energy_density(e, lam, lam);
    a.E_target = a.E_homogeneous +
                 std::pow(t, p.d) * std::pow(p.sigma, p.d) * omega / p.d * a.J + a.cavity_term;
    return a;
}

double mollified_energy(const SimilarityProfile& p, const Mollifier& phi, double n,
                        double t, double B_radius) {
    const double omega = unit_sphere_area(p.d);
    const double edge = p.sigma * t + 1.0 / n;
    auto f = [&](double R) {
        const auto fl = mollified_radial_fields(p, phi, n, R, t);
        const double W = 0.5 * fl.lam1 * fl.lam1 + 0.5 * (p.d - 1) * fl.lam2 * fl.lam2 +
                         p.energy.h(fl.v);
        return (0.5 * fl.w_t * fl.w_t + W) * std::pow(R, p.d - 1);
    };
    std::vector<double> bp{1.0 / n, p.sigma * t - 1.0 / n, p.sigma * t};
    double E = omega * integrate(f, 0.0, edge, bp, QuadratureOptions{1e-9, 1e-10});
    // homogeneous tail in closed form
    E += omega * (std::pow(B_radius, p.d) - std::pow(edge, p.d)) / p.d *
         radial_energy_density(p.energy, p.lambda, p.lambda);
    return E;
}

double cavity_ball_energy(const SimilarityProfile& p, const Mollifier& phi, double n,
                          double t) {
    const double omega = unit_sphere_area(p.d);
    auto f = [&](double R) {
        const auto fl = mollified_radial_fields(p, phi, n, R, t);
        return p.energy.h(fl.v) * std::pow(R, p.d - 1);
    };
    return omega * integrate(f, 0.0, 1.0 / n, QuadratureOptions{1e-9, 1e-10});
}

EnergyLimitResult energy_limit_numeric(const SimilarityProfile& p, const Mollifier& phi,
                                       double t, double B_radius,
                                       const std::vector<int>& n_seq) {
    if (!phi.phi0_positive)
        throw std::invalid_argument("energy_limit_numeric: kernel must have phi(0) > 0");
    EnergyLimitResult res;
    const auto audit = energy_fan_3d(p, t, B_radius);
    std::vector<double> ns;
    for (int n : n_seq) {
        ns.push_back(n);
        res.E_n.push_back(mollified_energy(p, phi, n, t, B_radius));
    }
    res.extrapolation = extrapolate_limit(ns, res.E_n);
    res.target = audit.E_target;
    res.rel_error = std::abs(res.extrapolation.limit - res.target) / std::abs(res.target);
    return res;
}

ResidualReport slic_residual_study(const SimilarityProfile& p, const Mollifier& phi,
                                   const std::vector<int>& n_seq, const RadialTestField& psi,
                                   double target, double tolerance) {
    if (!phi.phi0_positive)
        throw std::invalid_argument(
            "slic residual: kernels with phi(0) = 0 are rejected (cavity undetectable)");
    return residual_study(
        n_seq,
        [&](int n) {
            auto motion = make_radial_motion(p, phi, n);
            return pair_residual_radial(motion, psi);
        },
        target, tolerance);
}

} // namespace slic
