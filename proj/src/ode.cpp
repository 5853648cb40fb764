#include "sliclab/ode.hpp"

#include <algorithm>
#include <cmath>

namespace slic {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0, e3 = 500.0 / 1113.0 - 7571.0 / 16695.0,
                 e4 = 125.0 / 192.0 - 393.0 / 640.0, e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0,
                 e6 = 11.0 / 84.0 - 187.0 / 2100.0, e7 = -1.0 / 40.0;

OdeState axpy(const OdeState& y, double h, std::initializer_list<std::pair<double, const OdeState*>> terms) {
    OdeState out = y;
    for (auto& [c, k] : terms) {
        out[0] += h * c * (*k)[0];
        out[1] += h * c * (*k)[1];
    }
    return out;
}

} // namespace

OdeState hermite_state(const OdeStepRecord& l, const OdeStepRecord& r, double s) {
    const double h = r.s - l.s;
    if (h == 0.0) return l.y;
    const double u = (s - l.s) / h;
    const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
    const double h10 = u * (1 - u) * (1 - u);
    const double h01 = u * u * (3 - 2 * u);
    const double h11 = u * u * (u - 1);
    OdeState out;
    for (int i = 0; i < 2; ++i)
        out[i] = h00 * l.y[i] + h10 * h * l.f[i] + h01 * r.y[i] + h11 * h * r.f[i];
    return out;
}

namespace {

std::vector<OdeStepRecord> integrate_impl(
    const OdeRhs& rhs, double s0, double s_end, const OdeState& y0,
    const std::function<double(double, const OdeState&)>* event, bool* event_hit,
    const OdeOptions& opts) {
    if (event_hit) *event_hit = false;
    std::vector<OdeStepRecord> rec;
    double s = s0;
    OdeState y = y0;
    OdeState f = rhs(s, y);
    rec.push_back({s, y, f});
    double ev_prev = event ? (*event)(s, y) : 0.0;

    const double span = s_end - s0;
    double h = opts.h_init > 0 ? opts.h_init : span * 1e-4;
    const double h_min = span * opts.h_min_factor;

    for (std::size_t step = 0; step < opts.max_steps && s < s_end; ++step) {
        h = std::min(h, s_end - s);
        OdeState k1 = f;
        OdeState k2 = rhs(s + h / 5.0, axpy(y, h, {{a21, &k1}}));
        OdeState k3 = rhs(s + 3.0 * h / 10.0, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
        OdeState k4 = rhs(s + 4.0 * h / 5.0, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        OdeState k5 = rhs(s + 8.0 * h / 9.0,
                          axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        OdeState k6 = rhs(s + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        OdeState y_new = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        OdeState k7 = rhs(s + h, y_new);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double scale = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            err = std::max(err, std::abs(ei) / scale);
        }

        if (err <= 1.0) {
            s += h;
            y = y_new;
            f = k7;   // FSAL
            rec.push_back({s, y, f});
            if (event) {
                const double ev = (*event)(s, y);
                if (ev_prev > 0.0 && ev <= 0.0) {
                    // refine the crossing on the dense (Hermite) solution
                    const OdeStepRecord& l = rec[rec.size() - 2];
                    const OdeStepRecord& r = rec.back();
                    double lo = l.s, hi = r.s;
                    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++it) {
                        const double mid = 0.5 * (lo + hi);
                        if ((*event)(mid, hermite_state(l, r, mid)) > 0.0)
                            lo = mid;
                        else
                            hi = mid;
                    }
                    const double sc = 0.5 * (lo + hi);
                    OdeState yc = hermite_state(l, r, sc);
                    rec.back() = {sc, yc, rhs(sc, yc)};
                    if (event_hit) *event_hit = true;
                    return rec;
                }
                ev_prev = ev;
            }
        }
        const double factor = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
        if (h < h_min)
            throw OdeGuardError("rk45: step size underflow");
    }
    return rec;
}

} // namespace

std::vector<OdeStepRecord> rk45_integrate(const OdeRhs& rhs, double s0, double s1,
                                          const OdeState& y0, OdeOptions opts) {
    return integrate_impl(rhs, s0, s1, y0, nullptr, nullptr, opts);
}

std::vector<OdeStepRecord> rk45_integrate_until(
    const OdeRhs& rhs, double s0, double s_max, const OdeState& y0,
    const std::function<double(double, const OdeState&)>& event, bool* event_hit,
    OdeOptions opts) {
    return integrate_impl(rhs, s0, s_max, y0, &event, event_hit, opts);
}

OdeState rk4_fixed(const OdeRhs& rhs, double s0, double s1, const OdeState& y0,
                   std::size_t n_steps) {
    OdeState y = y0;
    const double h = (s1 - s0) / static_cast<double>(n_steps);
    double s = s0;
    for (std::size_t i = 0; i < n_steps; ++i) {
        OdeState k1 = rhs(s, y);
        OdeState k2 = rhs(s + 0.5 * h, axpy(y, 0.5 * h, {{1.0, &k1}}));
        OdeState k3 = rhs(s + 0.5 * h, axpy(y, 0.5 * h, {{1.0, &k2}}));
        OdeState k4 = rhs(s + h, axpy(y, h, {{1.0, &k3}}));
        for (int j = 0; j < 2; ++j)
            y[j] += h / 6.0 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
        s += h;
    }
    return y;
}

} // namespace slic
