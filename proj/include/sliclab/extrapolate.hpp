#pragma once

#include <string>
#include <vector>

namespace slic {

struct Extrapolation {
    double limit = 0.0;
    double rate = 0.0;       // algebraic rate in value ~ limit + C n^{-rate}
    double fit_residual = 0.0;   // |predicted - actual| at the last level
    bool monotone_tail = true;   // last three levels had consistently signed steps
    bool valid = false;          // extrapolation performed
};

/// Fits value ~ limit + C n^{-rate} on the last three levels of a geometric
/// scale sequence (log-difference for the rate, Aitken for the limit).  With
/// a non-monotone tail no extrapolation is performed (valid = false) and the
/// last value is reported as the limit.
Extrapolation extrapolate_limit(const std::vector<double>& n_values,
                                const std::vector<double>& values);

/// Residual values over a scale sequence, their extrapolated limit and the
/// observed algebraic rate, plus the target verdict.
struct ResidualReport {
    std::vector<double> n_values;
    std::vector<double> residuals;
    Extrapolation extrapolation;
    double target = 0.0;       // expected limit
    double tolerance = 0.0;    // |limit - target| threshold used for the verdict
    bool pass = false;

    void finalize();           // extrapolate and set the verdict
    std::string to_csv() const;    // columns: n,residual,est_limit,est_rate
    std::string to_json() const;   // summary with verdict
};

} // namespace slic
