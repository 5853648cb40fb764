#include "sliclab/constitutive.hpp"

#include <cmath>
#include <stdexcept>

#include "sliclab/extrapolate.hpp"

namespace slic {

StressLaw1D make_stress_law(const std::string& label,
                            const std::map<std::string, double>& /*params*/) {
    StressLaw1D law;
    law.label = label;
    if (label == "saturating") {
        law.tau = [](double u) { return 1.0 - 1.0 / u; };
        law.tau_prime = [](double u) { return 1.0 / (u * u); };
        law.W = [](double u) { return (u - 1.0) - std::log(u); };
        law.tau_inf = 1.0;
        law.L = 0.0;
    } else if (label == "nonsaturating") {
        law.tau = [](double u) { return u - 1.0 / u; };
        law.tau_prime = [](double u) { return 1.0 + 1.0 / (u * u); };
        law.W = [](double u) { return 0.5 * (u * u - 1.0) - std::log(u); };
        law.tau_inf = kInf;
        law.L = 1.0;
    } else {
        throw std::invalid_argument("unknown stress law label: " + label);
    }
    return law;
}

HypothesisReport1D check_hypotheses_1d(const StressLaw1D& law,
                                       const std::vector<double>& grid) {
    HypothesisReport1D rep;
    for (double u : grid) {
        const double step = 1e-5 * u;
        const double tp = law.tau_prime(u);
        const double ts = (law.tau_prime(u + step) - law.tau_prime(u - step)) / (2.0 * step);
        HypothesisPoint p{u, tp, ts, tp > 0.0, ts < 0.0};
        rep.all_increasing = rep.all_increasing && p.increasing;
        rep.all_concave = rep.all_concave && p.concave;
        rep.points.push_back(p);
    }
    rep.tau_near_zero = law.tau(1e-3);

    // ratio sequence tau(2^k)/2^k, extrapolated
    std::vector<double> ns, vals;
    for (int k = 20; k <= 40; ++k) {
        const double u = std::ldexp(1.0, k);
        ns.push_back(u);
        vals.push_back(law.tau(u) / u);
    }
    auto ex = extrapolate_limit(ns, vals);
    rep.L_estimate = ex.limit;
    rep.L_error = std::abs(ex.limit - vals.back());
    return rep;
}

StoredEnergy3D make_stored_energy(const std::string& label, int d) {
    if (d < 3) throw std::invalid_argument("stored energy: dimension must be >= 3");
    StoredEnergy3D e;
    e.label = label;
    e.d = d;
    if (label == "reciprocal") {
        e.h = [](double v) { return v + 1.0 / v; };
        e.h_prime = [](double v) { return 1.0 - 1.0 / (v * v); };
        e.h_second = [](double v) { return 2.0 / (v * v * v); };
        e.H = 1.0;
        e.L = 1.0;
        e.sublinear_flag = true;   // h'(v^d)/v = (1 - v^{-2d})/v -> 0
    } else if (label == "superlinear") {
        e.h = [](double v) { return v * std::sqrt(v) + 1.0 / v; };
        e.h_prime = [](double v) { return 1.5 * std::sqrt(v) - 1.0 / (v * v); };
        e.h_second = [](double v) { return 0.75 / std::sqrt(v) + 2.0 / (v * v * v); };
        e.H = std::pow(2.0 / 3.0, 0.4);   // 1.5 sqrt(H) = H^{-2}
        e.L = kInf;
        e.sublinear_flag = false;  // h'(v^d)/v ~ 1.5 v^{d/2 - 1} -> inf for d >= 3
    } else {
        throw std::invalid_argument("unknown stored energy label: " + label);
    }
    return e;
}

RadialStress radial_stress(const StoredEnergy3D& e, double lam1, double lam2) {
    if (lam1 <= 0.0 || lam2 <= 0.0)
        throw std::invalid_argument("radial_stress: eigenvalues must be positive");
    const double v = lam1 * std::pow(lam2, e.d - 1);
    const double hp = e.h_prime(v);
    return {lam1 + std::pow(lam2, e.d - 1) * hp,
            lam2 + lam1 * std::pow(lam2, e.d - 2) * hp};
}

double dPhi1_dlam1(const StoredEnergy3D& e, double lam1, double lam2) {
    const double p = std::pow(lam2, e.d - 1);
    return 1.0 + e.h_second(lam1 * p) * p * p;
}

double dPhi1_dlam2(const StoredEnergy3D& e, double lam1, double lam2) {
    const double v = lam1 * std::pow(lam2, e.d - 1);
    return (e.d - 1) * std::pow(lam2, e.d - 2) * (e.h_second(v) * v + e.h_prime(v));
}

double radial_energy_density(const StoredEnergy3D& e, double lam1, double lam2) {
    const double v = lam1 * std::pow(lam2, e.d - 1);
    return 0.5 * lam1 * lam1 + 0.5 * (e.d - 1) * lam2 * lam2 + e.h(v);
}

} // namespace slic
