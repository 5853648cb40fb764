#include "sliclab/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slic {

namespace {

double bump_raw(double x) {
    const double s = 1.0 - x * x;
    return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}

double bump_raw_prime(double x) {
    const double s = 1.0 - x * x;
    if (s <= 0.0) return 0.0;
    return bump_raw(x) * (-2.0 * x / (s * s));
}

} // namespace

struct Mollifier::Data {
    std::function<double(double)> raw;
    std::function<double(double)> raw_prime;
    double norm = 1.0;

    // tables on [0,1]: values of Phi and M at uniform nodes; node derivatives
    // (phi(x), x phi(x)) are exact, so cubic Hermite is accurate to ~1e-14.
    int n_cells = 4096;
    std::vector<double> Phi_tab, M_tab;

    double phi(double x) const {
        return (x < -1.0 || x > 1.0) ? 0.0 : norm * raw(x);
    }

    double hermite(const std::vector<double>& tab, bool moment, double x) const {
        // x in [0,1]
        const double g = x * n_cells;
        int cell = std::min(static_cast<int>(g), n_cells - 1);
        const double h = 1.0 / n_cells;
        const double u = g - cell;
        const double x0 = cell * h, x1 = (cell + 1) * h;
        const double d0 = moment ? x0 * phi(x0) : phi(x0);
        const double d1 = moment ? x1 * phi(x1) : phi(x1);
        const double y0 = tab[cell], y1 = tab[cell + 1];
        const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
        const double h10 = u * (1 - u) * (1 - u);
        const double h01 = u * u * (3 - 2 * u);
        const double h11 = u * u * (u - 1);
        return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
    }
};

double Mollifier::phi(double x) const { return data_->phi(x); }

double Mollifier::phi_prime(double x) const {
    if (x < -1.0 || x > 1.0) return 0.0;
    return data_->norm * data_->raw_prime(x);
}

double Mollifier::Phi(double x) const {
    const double ax = std::abs(x);
    const double v = ax >= 1.0 ? data_->Phi_tab.back() : data_->hermite(data_->Phi_tab, false, ax);
    return x >= 0.0 ? v : -v;
}

double Mollifier::M(double x) const {
    const double ax = std::abs(x);
    if (ax >= 1.0) return data_->M_tab.back();
    return data_->hermite(data_->M_tab, true, ax);
}

double Mollifier::mass() const {
    auto f = [this](double x) { return phi(x); };
    return integrate(f, -1.0, 1.0, QuadratureOptions{1e-14, 1e-14});
}

Mollifier Mollifier::make(const std::string& label) {
    auto data = std::make_shared<Data>();
    if (label == "bump") {
        data->raw = bump_raw;
        data->raw_prime = bump_raw_prime;
    } else if (label == "bump_zero_center") {
        data->raw = [](double x) { return x * x * bump_raw(x); };
        data->raw_prime = [](double x) {
            return 2.0 * x * bump_raw(x) + x * x * bump_raw_prime(x);
        };
    } else {
        throw std::invalid_argument("unknown mollifier label: " + label);
    }

    const double half_mass =
        integrate([&](double x) { return data->raw(x); }, 0.0, 1.0, QuadratureOptions{1e-15, 1e-15});
    data->norm = 1.0 / (2.0 * half_mass);

    const int N = data->n_cells;
    data->Phi_tab.assign(N + 1, 0.0);
    data->M_tab.assign(N + 1, 0.0);
    const double h = 1.0 / N;
    for (int i = 0; i < N; ++i) {
        const double a = i * h, b = (i + 1) * h;
        data->Phi_tab[i + 1] = data->Phi_tab[i] + kronrod15([&](double x) { return data->phi(x); }, a, b);
        data->M_tab[i + 1] = data->M_tab[i] + kronrod15([&](double x) { return x * data->phi(x); }, a, b);
    }

    Mollifier m;
    m.label = label;
    m.data_ = std::move(data);
    m.phi0_positive = m.phi(0.0) > 0.0;
    double mx = 0.0;
    for (int i = 0; i <= 4096; ++i) mx = std::max(mx, m.phi(i / 4096.0));
    m.phi_max = mx;
    return m;
}

Mollifier make_mollifier(const std::string& label) { return Mollifier::make(label); }

ScaleSequence::ScaleSequence(std::vector<int> ns) : n_values(std::move(ns)) {
    if (n_values.empty()) throw std::invalid_argument("scale sequence: empty");
    int prev = 1;
    for (int n : n_values) {
        if (n < 2 || n <= prev)
            throw std::invalid_argument("scale sequence: must be strictly increasing with n >= 2");
        prev = n;
    }
}

ScaleSequence ScaleSequence::geometric(int base, int levels, int ratio) {
    std::vector<int> ns;
    int n = base;
    for (int k = 0; k < levels; ++k, n *= ratio) ns.push_back(n);
    return ScaleSequence(ns);
}

namespace {

std::vector<double> clip_breaks(std::span<const double> breakpoints, double lo, double hi) {
    std::vector<double> b;
    for (double p : breakpoints)
        if (p > lo && p < hi) b.push_back(p);
    std::sort(b.begin(), b.end());
    return b;
}

} // namespace

double convolve_line(const std::function<double(double)>& y, double n, double x,
                     const Mollifier& phi, std::span<const double> breakpoints,
                     QuadratureOptions opts) {
    const double lo = x - 1.0 / n, hi = x + 1.0 / n;
    auto b = clip_breaks(breakpoints, lo, hi);
    auto f = [&](double z) { return phi.phi_n(n, x - z) * y(z); };
    return integrate(f, lo, hi, b, opts);
}

double convolve_radial_odd(const std::function<double(double)>& w, double n, double R,
                           const Mollifier& phi, std::span<const double> breakpoints,
                           QuadratureOptions opts) {
    const double lo = std::max(0.0, R - 1.0 / n), hi = R + 1.0 / n;
    auto b = clip_breaks(breakpoints, lo, hi);
    auto f = [&](double Rt) { return phi.phi_n(n, R - Rt) * w(Rt); };
    double val = integrate(f, lo, hi, b, opts);
    if (R < 1.0 / n) {
        // reflected term; support [0, 1/n - R]
        const double hi2 = 1.0 / n - R;
        auto b2 = clip_breaks(breakpoints, 0.0, hi2);
        auto g = [&](double Rt) { return phi.phi_n(n, R + Rt) * w(Rt); };
        val -= integrate(g, 0.0, hi2, b2, opts);
    }
    return val;
}

double convolve_radial_odd_deriv(const std::function<double(double)>& w_R, double w0_plus,
                                 double n, double R, const Mollifier& phi,
                                 std::span<const double> breakpoints,
                                 QuadratureOptions opts) {
    const double lo = std::max(0.0, R - 1.0 / n), hi = R + 1.0 / n;
    auto b = clip_breaks(breakpoints, lo, hi);
    auto f = [&](double Rt) { return phi.phi_n(n, R - Rt) * w_R(Rt); };
    double val = 2.0 * phi.phi_n(n, R) * w0_plus + integrate(f, lo, hi, b, opts);
    if (R < 1.0 / n) {
        const double hi2 = 1.0 / n - R;
        auto b2 = clip_breaks(breakpoints, 0.0, hi2);
        auto g = [&](double Rt) { return phi.phi_n(n, R + Rt) * w_R(Rt); };
        val += integrate(g, 0.0, hi2, b2, opts);
    }
    return val;
}

} // namespace slic
