#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace slic {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// One-dimensional stress/stored-energy pair.  tau must be increasing and
/// concave on (0,inf); W(1) = 0 and W' = tau.
struct StressLaw1D {
    std::string label;
    std::function<double(double)> tau;
    std::function<double(double)> tau_prime;
    std::function<double(double)> W;
    double tau_inf = kInf;   // lim tau(u), u -> inf (finite or +inf)
    double L = 0.0;          // lim tau(u)/u, u -> inf
};

/// Shipped laws:
///   "saturating"     tau(u) = 1 - 1/u   (tau_inf = 1,  L = 0)
///   "nonsaturating"  tau(u) = u - 1/u   (tau_inf = inf, L = 1)
/// `params` is accepted for forward compatibility; the shipped laws take none.
StressLaw1D make_stress_law(const std::string& label,
                            const std::map<std::string, double>& params = {});

struct HypothesisPoint {
    double u;
    double tau_prime;
    double tau_second;   // central finite difference of tau_prime
    bool increasing;     // tau' > 0
    bool concave;        // tau'' < 0
};

struct HypothesisReport1D {
    std::vector<HypothesisPoint> points;
    bool all_increasing = true;
    bool all_concave = true;
    double tau_near_zero = 0.0;    // divergence sample tau(1e-3)
    double L_estimate = 0.0;       // extrapolated lim tau(u)/u
    double L_error = 0.0;          // extrapolation error estimate
};

/// Samples the monotonicity/concavity hypotheses of a 1-D law on `grid`
/// (sorted, positive) and estimates the linear-growth limit L by Richardson
/// extrapolation over u = 2^k, k <= 40.
HypothesisReport1D check_hypotheses_1d(const StressLaw1D& law,
                                       const std::vector<double>& grid);

/// Isotropic stored energy W(F) = 1/2 sum lambda_i^2 + h(prod lambda_i).
struct StoredEnergy3D {
    std::string label;
    int d = 3;
    std::function<double(double)> h;
    std::function<double(double)> h_prime;
    std::function<double(double)> h_second;
    double H = 1.0;          // root of h'
    double L = kInf;         // lim h(v)/v (finite or +inf)
    bool sublinear_flag = true;   // lim h'(v^d)/v == 0
};

/// Shipped energies (d >= 3):
///   "reciprocal"  h(v) = v + 1/v          (H = 1, L = 1, sublinear)
///   "superlinear" h(v) = v^{3/2} + 1/v    (L = inf, h'(v^d)/v -> inf)
StoredEnergy3D make_stored_energy(const std::string& label, int d);

/// Principal Piola-Kirchhoff stresses of the radial motion: Phi1 acts on the
/// radial dyad, Phi2 on its orthogonal complement.
struct RadialStress {
    double Phi1;
    double Phi2;
};

RadialStress radial_stress(const StoredEnergy3D& energy, double lam1, double lam2);

/// Partial derivatives of Phi1, needed by the similarity ODE.
double dPhi1_dlam1(const StoredEnergy3D& energy, double lam1, double lam2);
double dPhi1_dlam2(const StoredEnergy3D& energy, double lam1, double lam2);

/// Full stored energy at a radial deformation (lam1, lam2 = ... = lam_d).
double radial_energy_density(const StoredEnergy3D& energy, double lam1, double lam2);

} // namespace slic
