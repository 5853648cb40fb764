#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace slic {

/// Thrown when an adaptive integral cannot meet its tolerance within the
/// subdivision budget.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;   // relative to the first full estimate
    int max_intervals = 20000;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f on [a,b].
/// Interior breakpoints mark known kinks of the integrand; each initial
/// panel lies between consecutive breakpoints.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints, QuadratureOptions opts = {});

double integrate(const std::function<double(double)>& f, double a, double b,
                 QuadratureOptions opts = {});

/// Non-adaptive 15-point Kronrod rule on [a,b]; exact enough for smooth
/// integrands on short panels (used for kernel-primitive tabulation).
double kronrod15(const std::function<double(double)>& f, double a, double b);

} // namespace slic
