#include "sliclab/extrapolate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace slic {

Extrapolation extrapolate_limit(const std::vector<double>& n_values,
                                const std::vector<double>& values) {
    if (n_values.size() != values.size() || n_values.size() < 3)
        throw std::invalid_argument("extrapolate_limit: need >= 3 (n, value) pairs");
    Extrapolation ex;
    const std::size_t m = values.size();
    const double v0 = values[m - 3], v1 = values[m - 2], v2 = values[m - 1];
    const double rho = n_values[m - 1] / n_values[m - 2];
    const double d0 = v1 - v0, d1 = v2 - v1;

    ex.monotone_tail = (d0 > 0 && d1 > 0) || (d0 < 0 && d1 < 0);
    if (!ex.monotone_tail || d1 == d0) {
        ex.limit = v2;
        ex.valid = false;
        return ex;
    }
    ex.rate = std::log(d0 / d1) / std::log(rho);
    ex.limit = v2 - d1 * d1 / (d1 - d0);   // Aitken
    if (m >= 4) {
        // predict the last value from the previous window as a fit diagnostic
        const double dm = values[m - 2] - values[m - 3];
        const double dmm = values[m - 3] - values[m - 4];
        if ((dm > 0) == (dmm > 0) && dm != dmm) {
            const double lim_prev = values[m - 2] - dm * dm / (dm - dmm);
            ex.fit_residual = std::abs(lim_prev - ex.limit);
        }
    }
    ex.valid = true;
    return ex;
}

void ResidualReport::finalize() {
    extrapolation = extrapolate_limit(n_values, residuals);
    pass = std::abs(extrapolation.limit - target) <= tolerance;
}

std::string ResidualReport::to_csv() const {
    std::ostringstream os;
    os.precision(15);
    os << "n,residual,est_limit,est_rate\n";
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        os << n_values[i] << "," << residuals[i] << ",";
        if (i + 1 == n_values.size() && extrapolation.valid)
            os << extrapolation.limit << "," << extrapolation.rate;
        else
            os << "nan,nan";
        os << "\n";
    }
    return os.str();
}

std::string ResidualReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "residual-report/1";
    j["n"] = n_values;
    j["residual"] = residuals;
    j["limit"] = extrapolation.limit;
    j["rate"] = extrapolation.rate;
    j["monotone_tail"] = extrapolation.monotone_tail;
    j["target"] = target;
    j["tolerance"] = tolerance;
    j["verdict"] = pass ? "pass" : "fail";
    return j.dump(2) + "\n";
}

} // namespace slic
