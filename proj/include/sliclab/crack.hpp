#pragma once

#include <string>

#include "sliclab/constitutive.hpp"
#include "sliclab/mollifier.hpp"
#include "sliclab/test_function.hpp"

namespace slic {

/// Self-similar crack fan: two Lax shocks at xi = +-sigma and a displacement
/// jump growing linearly in time at x = 0.  Parameters are tied together by
/// the kinematic relation Y0 = (lambda - alpha) sigma and the jump condition
/// sigma^2 (lambda - alpha) = tau(lambda) - tau(alpha).
struct CrackFan {
    StressLaw1D law;
    double lambda = 0.0;   // far-field stretch
    double alpha = 0.0;    // inner strain
    double sigma = 0.0;    // shock speed
    double Y0 = 0.0;       // crack half-speed
    bool lax_ok = false;   // sqrt(tau'(alpha)) > sigma > sqrt(tau'(lambda))
};

CrackFan solve_fan(const StressLaw1D& law, double lambda, double alpha);

/// Exact displacement, extended by lambda x for t <= 0.
double motion(const CrackFan& fan, double x, double t);

/// Closed-form mollified fields at scale n: strain u_n, velocity v_n,
/// acceleration a_n, displacement y_n, and the time derivative of u_n.
struct CrackFields {
    double u;
    double v;
    double a;
};

CrackFields mollified_fields(const CrackFan& fan, const Mollifier& phi, double n,
                             double x, double t);

double mollified_u(const CrackFan& fan, const Mollifier& phi, double n, double x, double t);
double mollified_v(const CrackFan& fan, const Mollifier& phi, double n, double x, double t);
double mollified_a(const CrackFan& fan, const Mollifier& phi, double n, double x, double t);
double mollified_y(const CrackFan& fan, const Mollifier& phi, double n, double x, double t);
double mollified_u_t(const CrackFan& fan, const Mollifier& phi, double n, double x, double t);

/// The four-part split of the weak residual <f_n, psi>: acceleration term
/// J_n for t > 2/(n sigma), the stress terms I1_n (|x| > 1/n) and I2_n
/// (|x| < 1/n), and the early-time term E_n on 0 < t < 2/(n sigma).
struct ResidualTerms {
    double J;
    double I1;
    double I2;
    double E;
    double sum() const { return J + I1 + I2 + E; }
};

ResidualTerms residual_terms(const CrackFan& fan, const Mollifier& phi, double n,
                             const ScalarBumpTest& psi);

/// Limits of the individual terms as n -> inf (for convergence checks):
double J_limit(const CrackFan& fan, const ScalarBumpTest& psi);
double I2_limit(const CrackFan& fan, const ScalarBumpTest& psi);   // 2 L Y0 int t psi_x(0,t) dt

/// Energy audit of the fan on B = (-r, r): shock dissipation rates, the
/// cavity-opening work p_c at scale n, its limit, and the total rate.
struct EnergyAudit1D {
    double mu_minus = 0.0;   // dissipation rate of the left shock
    double mu_plus = 0.0;    // dissipation rate of the right shock
    double pc_n = 0.0;       // crack-opening work at scale n (reference time t_ref)
    double pc_limit = 0.0;   // 2 (tau_inf - tau(alpha)) Y0, or +inf
    double T = 0.0;          // mu_minus + mu_plus + pc_limit, or +inf
    double en_transient_bound = 0.0;   // sampled sup of |e_n| on (0, 2/(n sigma))
    double t_ref = 1.0;
    bool finite_cost = true;
};

EnergyAudit1D energy_audit(const CrackFan& fan, const Mollifier& phi, double n,
                           double t_ref = 1.0);

/// d/dt of the total energy on B = (-r,r) at time t, computed by quadrature
/// of v_n a_n + tau(u_n) d_t u_n.  Must match mu_minus + mu_plus + pc_n(t).
double energy_rate_numeric(const CrackFan& fan, const Mollifier& phi, double n, double t);

/// Kernel identities from the shock-layer bookkeeping: A_n (self-interaction
/// integral, always 1/2) and B_n (stored-energy telescope, sigma (W(alpha) -
/// W(lambda)) for every kernel and scale).
double kernel_self_interaction(const CrackFan& fan, const Mollifier& phi, double n, double t);
double shock_layer_energy(const CrackFan& fan, const Mollifier& phi, double n);

/// Closed form of the total rate: sigma Y0^2 + 2 Y0 (tau_inf - (W(lambda)-W(alpha))/(lambda-alpha)).
double total_rate_closed_form(const CrackFan& fan);

} // namespace slic
