#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sliclab/quadrature.hpp"

namespace slic {

/// Symmetric compactly supported averaging kernel on [-1,1] with unit mass,
/// together with its primitive Phi(R) = int_0^R phi and first moment
/// M(R) = int_0^R x phi(x) dx.  Phi and M are tabulated once at construction
/// (cubic Hermite on a fine uniform grid, node derivatives exact) so that
/// closed-form mollified fields are cheap to evaluate.
class Mollifier {
public:
    std::string label;
    bool phi0_positive = true;
    double phi_max = 0.0;   // sup |phi|

    double phi(double x) const;
    double phi_prime(double x) const;
    double Phi(double x) const;   // odd, clamps to +-1/2 outside [-1,1]
    double M(double x) const;     // even, constant outside [-1,1]

    /// scaled kernel phi_n(x) = n phi(n x)
    double phi_n(double n, double x) const { return n * phi(n * x); }
    double Phi_n(double n, double x) const { return Phi(n * x); }
    /// int_0^x u phi_n(u) du = M(n x)/n
    double M_n(double n, double x) const { return M(n * x) / n; }
    double mass() const;   // int phi, re-evaluated by quadrature (test hook)

    static Mollifier make(const std::string& label);

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

/// Kernel factory; labels: "bump" (c exp(-1/(1-x^2))) and
/// "bump_zero_center" (c x^2 exp(-1/(1-x^2)), vanishing at the origin).
Mollifier make_mollifier(const std::string& label);

/// Strictly increasing scale sequence, each n >= 2.
struct ScaleSequence {
    std::vector<int> n_values;

    explicit ScaleSequence(std::vector<int> ns);
    /// default n = 8 * 2^k, k = 0..6
    static ScaleSequence geometric(int base = 8, int levels = 7, int ratio = 2);
};

/// int phi_n(x - z) y(z) dz by panel quadrature; `breakpoints` lists z-values
/// where y has kinks.  The kernel support [x-1/n, x+1/n] bounds the domain.
double convolve_line(const std::function<double(double)>& y, double n, double x,
                     const Mollifier& phi, std::span<const double> breakpoints = {},
                     QuadratureOptions opts = {});

/// Odd-extension radial convolution
///   int_0^inf phi_n(R-Rt) w(Rt) dRt - int_0^inf phi_n(R+Rt) w(Rt) dRt,
/// which is the full-line mollification of the odd extension of w.
double convolve_radial_odd(const std::function<double(double)>& w, double n, double R,
                           const Mollifier& phi, std::span<const double> breakpoints = {},
                           QuadratureOptions opts = {});

/// d/dR of the odd-extension convolution:
///   2 phi_n(R) w(0+) + int_0^inf [phi_n(R-Rt) + phi_n(R+Rt)] w_R(Rt) dRt
double convolve_radial_odd_deriv(const std::function<double(double)>& w_R, double w0_plus,
                                 double n, double R, const Mollifier& phi,
                                 std::span<const double> breakpoints = {},
                                 QuadratureOptions opts = {});

} // namespace slic
