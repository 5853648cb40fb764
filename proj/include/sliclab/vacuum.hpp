#pragma once

#include <vector>

#include "sliclab/extrapolate.hpp"
#include "sliclab/mollifier.hpp"
#include "sliclab/test_function.hpp"
#include "sliclab/weakform.hpp"

namespace slic {

/// Riemann fan of the polytropic p-system with outward velocity data large
/// enough to open a vacuum: a rarefaction pair around a delta measure in the
/// specific volume at xi = 0.
struct VacuumFan {
    double u_bar = 1.0;    // ambient specific volume
    double v_bar = 0.0;    // outflow speed
    double gamma = 2.0;
    double w = 0.0;        // u_bar^{(1-gamma)/2} + (1-gamma)/2 v_bar  (< 0)
    double xi_F = 1.0;     // fan edge u_bar^{-(gamma+1)/2}
    double delta_mass = 0.0;   // -4w/(gamma-1), mass of the delta in u at 0

    /// self-similar displacement r(xi); affine matching states outside the fan
    double displacement(double xi) const;
    /// absolutely continuous part of u(xi) (the delta at 0 excluded)
    double u_ac(double xi) const;
    double v(double xi) const;
};

/// Validates the data and computes the fan; rejects w >= 0 (a standard weak
/// solution exists there and no vacuum forms).
VacuumFan make_vacuum_fan(double u_bar, double v_bar, double gamma);

/// Mollified fan fields at scale n:
///   r_n = phi_n * r,  u_n = r_n',  v_n = r_n - xi r_n'.
/// u_n carries the delta explicitly: u_n = phi_n * u_ac + delta_mass phi_n(xi).
struct MollifiedFanFields {
    const VacuumFan* fan = nullptr;
    Mollifier phi;
    double n = 8;

    double r_n(double xi) const;
    double u_n(double xi) const;
    double v_n(double xi) const;

    SelfSimilarFields as_selfsim() const;
};

MollifiedFanFields mollified_fan_fields(const VacuumFan& fan, const Mollifier& phi, double n);

/// Residual study of the self-similar weak form over a scale sequence.
ResidualReport vacuum_residual(const VacuumFan& fan, const Mollifier& phi,
                               const std::vector<int>& n_seq, const Bump1D& psi,
                               double tolerance);

/// First-equation pairing int (-xi u_n' - v_n') psi dxi, integrated by parts;
/// vanishes identically since u_n and v_n stem from one displacement.
double first_equation_pairing(const MollifiedFanFields& fields, const Bump1D& psi);

/// Numeric n-limit of int_{-xi_bar}^{xi_bar} W(u_n) + v_n^2/2 dxi and its
/// closed-form value (no vacuum contribution).
struct VacuumEnergy {
    std::vector<double> E_n;
    Extrapolation extrapolation;
    double closed_form = 0.0;
    double rel_error = 0.0;
};

VacuumEnergy vacuum_energy(const VacuumFan& fan, const Mollifier& phi, double xi_bar,
                           const std::vector<int>& n_seq);

/// Explicit constants of the fan-field bounds: u_n >= u_floor inside the fan
/// and |v_n| <= v_cap everywhere in [-xi_F, xi_F].
double vacuum_u_floor(const VacuumFan& fan);
double vacuum_v_cap(const VacuumFan& fan, const Mollifier& phi);

} // namespace slic
