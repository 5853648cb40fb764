#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sliclab/constitutive.hpp"
#include "sliclab/extrapolate.hpp"
#include "sliclab/mollifier.hpp"
#include "sliclab/weakform.hpp"

namespace slic {

/// Similarity profile r(s) of the radial cavitating motion w(R,t) = t r(R/t):
/// traction-free cavity at s = 0+ (specific volume -> H), precompression
/// shock at s = sigma matching the homogeneous state r = lambda s through the
/// Rankine-Hugoniot condition.
class SimilarityProfile {
public:
    StoredEnergy3D energy;
    int d = 3;
    double lambda = 0.0;
    double sigma = 0.0;     // shock location/speed
    double r0 = 0.0;        // cavity speed r(0+)
    double s_min = 0.0;     // seam between the table and the cavity asymptote
    double rp_sigma = 0.0;  // r'(sigma-)
    double rh_mismatch = 0.0;       // jump-condition defect at (sigma, rp_sigma)
    double cavity_mismatch = 0.0;   // |v(0+) - H| after convergence

    double r_at(double s) const;
    double rp_at(double s) const;
    double v_at(double s) const { return rp_at(s) * std::pow(r_at(s) / s, d - 1); }

    /// motion amplitude and derivatives; extended by lambda R for t <= 0
    double w(double R, double t) const;
    double w_R(double R, double t) const;
    double w_t(double R, double t) const;

    const std::vector<double>& grid_s() const { return s_; }
    const std::vector<double>& grid_r() const { return r_; }
    const std::vector<double>& grid_rp() const { return rp_; }

    friend SimilarityProfile shoot_profile(const StoredEnergy3D&, double, int);

private:
    std::vector<double> s_, r_, rp_, rpp_;   // uniform on [s_min, sigma]
    double ds_ = 0.0;
    double v0_ = 0.0;   // cavity specific volume, v(s) ~ v0 + c1 s near 0
    double c1_ = 0.0;
};

/// Explicit second derivative of the similarity ODE
///   (s^2 - dPhi1/dlam1) r'' = dPhi1/dlam2 (r' s - r)/s^2 + (d-1)/s (Phi1 - Phi2)
/// evaluated at (s, r, r').  Throws OdeGuardError at sonic degeneracy.
double selfsim_ode_rhs(const StoredEnergy3D& energy, double s, double r, double rp);

/// Thrown when no cavitating profile exists for the requested stretch.
class NoCavitationError : public std::runtime_error {
public:
    explicit NoCavitationError(const std::string& what) : std::runtime_error(what) {}
};

/// One-parameter shoot on the post-shock slope rp = r'(sigma-): the shock
/// data (sigma, r(sigma) = lambda sigma) follow from the Rankine-Hugoniot
/// condition
///   sigma^2 (lambda - rp) = Phi1(lambda,lambda) - Phi1(rp,lambda),
/// the profile is integrated inward from the shock, and rp is bisected until
/// the cavity is traction-free: v(0+) = H.  (Shooting outward from the cavity
/// is ill-posed: trajectories collapse onto an attracting branch and forget
/// the launch data, leaving nothing to tune.)
SimilarityProfile shoot_profile(const StoredEnergy3D& energy, double lambda, int d);

/// Smallest stretch among `candidates` for which shooting succeeds.
double smallest_cavitating_lambda(const StoredEnergy3D& energy, int d,
                                  const std::vector<double>& candidates);

/// Critical stretch located by bisection on shooting success in [lo, hi].
double critical_lambda(const StoredEnergy3D& energy, int d, double lo, double hi,
                       int iterations = 24);

/// Mollified radial fields at scale n.
struct RadialFields {
    double w;
    double lam1;   // w^n_R
    double lam2;   // w^n / R
    double v;      // lam1 lam2^{d-1}
    double w_t;
};

RadialFields mollified_radial_fields(const SimilarityProfile& profile, const Mollifier& phi,
                                     double n, double R, double t);

RadialMotion make_radial_motion(const SimilarityProfile& profile, const Mollifier& phi, double n);

/// Finite-difference residual of the radial elastodynamics equation on the
/// reconstructed w(R,t) = t r(R/t); independent of the ODE derivation.
/// Converges at O(step^2); the extrapolated variant removes that term.
double pde_residual_fd(const SimilarityProfile& profile, double R, double t, double step);
double pde_residual_extrapolated(const SimilarityProfile& profile, double R, double t,
                                 double step);

/// Per-scale envelopes and layer checks for the mollified specific volume.
struct LayerBoundLevel {
    int n;
    double bulk_min = 0.0, bulk_max = 0.0;          // v^n on R > 1/n
    double near_min = 0.0;                          // v^n on R < 1/n
    double near_ratio_max = 0.0;                    // v^n / (1 + t^d n^d) on R < 1/n
    bool deriv_band_ok = true;   // 2 phi_n(R) w(0,t) <= w^n_R <= ... + lambda
    bool ratio_band_ok = true;   // 2 Phi(nR) w(0,t)/R <= w^n/R <= ... + lambda
    bool core_lower_ok = true;   // v^n >= 2^d n^d delta^d w(0,t)^d on R < eps/n
    double degenerate_sup = 0.0; // sup v^n on R < 1/n^2 (phi(0) = 0 study)
};

struct LayerBoundReport {
    std::vector<LayerBoundLevel> levels;
    double eps = 0.0, delta = 0.0;   // phi > delta on |x| < eps (phi(0) > 0 case)
    bool phi0_positive = true;
    std::string to_csv() const;
};

LayerBoundReport verify_layer_bounds(const SimilarityProfile& profile, const Mollifier& phi,
                                     const std::vector<int>& n_seq, int sample_budget,
                                     std::uint64_t seed = 12345);

/// Closed-form energy audit (finite-asymptote energies).
struct EnergyAudit3D {
    double J = 0.0;            // shock dissipation coefficient (negative)
    double cavity_term = 0.0;  // (t^d omega_d / d) r0^d L
    double D = 0.0;            // sigma^d J + r0^d L, total excess coefficient
    double lemma_gap = 0.0;    // r(sigma)^d (1 - r'(sigma-)/lambda) - r0^d  (<= 0)
    double E_homogeneous = 0.0;
    double E_target = 0.0;     // E_homogeneous + (t^d sigma^d omega_d/d) J + cavity_term
    double t = 1.0;
    double B_radius = 0.0;
};

class InfiniteEnergyError : public std::runtime_error {
public:
    explicit InfiniteEnergyError(const std::string& what) : std::runtime_error(what) {}
};

EnergyAudit3D energy_fan_3d(const SimilarityProfile& profile, double t, double B_radius);

/// Mollified total energy on the ball of radius B_radius at time t, scale n.
double mollified_energy(const SimilarityProfile& profile, const Mollifier& phi, double n,
                        double t, double B_radius);

/// h-part of the energy over the cavity ball R < 1/n (the cavity-cost layer;
/// diverges along n when L = inf, converges to the cavity term when finite).
double cavity_ball_energy(const SimilarityProfile& profile, const Mollifier& phi, double n,
                          double t);

struct EnergyLimitResult {
    std::vector<double> E_n;
    Extrapolation extrapolation;
    double target = 0.0;
    double rel_error = 0.0;
};

EnergyLimitResult energy_limit_numeric(const SimilarityProfile& profile, const Mollifier& phi,
                                       double t, double B_radius, const std::vector<int>& n_seq);

/// Residual study of the slic property; requires phi(0) > 0 (kernels that
/// vanish at the origin cannot detect the cavity and are rejected).
ResidualReport slic_residual_study(const SimilarityProfile& profile, const Mollifier& phi,
                                   const std::vector<int>& n_seq, const RadialTestField& psi,
                                   double target, double tolerance);

} // namespace slic
