#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

namespace slic {

using OdeState = std::array<double, 2>;
using OdeRhs = std::function<OdeState(double, const OdeState&)>;

/// Thrown by an ODE right-hand side when the evaluation point degenerates
/// (e.g. the similarity equation turns sonic).
class OdeGuardError : public std::runtime_error {
public:
    explicit OdeGuardError(const std::string& what) : std::runtime_error(what) {}
};

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    double h_init = 0.0;       // 0: pick automatically
    double h_min_factor = 1e-14;
    std::size_t max_steps = 2000000;
};

struct OdeStepRecord {
    double s;
    OdeState y;
    OdeState f;   // derivative at s, for dense (Hermite) interpolation
};

/// Embedded Dormand-Prince 5(4) integrator with step-size control.
/// Integrates from s0 to s1 (s0 < s1), recording every accepted step.
std::vector<OdeStepRecord> rk45_integrate(const OdeRhs& rhs, double s0, double s1,
                                          const OdeState& y0, OdeOptions opts = {});

/// Variant that stops early when event(s, y) changes sign; the trailing
/// record is placed at the located crossing (cubic Hermite refinement).
/// Returns records and sets *event_hit accordingly.
std::vector<OdeStepRecord> rk45_integrate_until(
    const OdeRhs& rhs, double s0, double s_max, const OdeState& y0,
    const std::function<double(double, const OdeState&)>& event, bool* event_hit,
    OdeOptions opts = {});

/// Classic fixed-step RK4 over [s0,s1] with n steps; returns the final state.
OdeState rk4_fixed(const OdeRhs& rhs, double s0, double s1, const OdeState& y0,
                   std::size_t n_steps);

/// Cubic Hermite interpolation between two step records.
OdeState hermite_state(const OdeStepRecord& l, const OdeStepRecord& r, double s);

} // namespace slic
