#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "sdw/regression.hpp"
#include "sdw/weights.hpp"

namespace sdw {

// All serial-correlation statistics of one residual series.
struct TestReport {
    double dw = 0.0;       // Durbin-Watson, order-dependent
    double rho = 0.0;      // lag-1 autocorrelation of the series as ordered
    double sai = 0.0;      // spatial autocorrelation index I = e'We
    double rci = 0.0;      // S = 2(1 - I)
    double geary_c = 0.0;  // pairwise-squared-difference coefficient C
    double arci = 0.0;     // S_a = 2C
    double decomposition_check = 0.0;  // exact-identity residual, ~0
    Mode mode = Mode::sample;
    WeightSpec weight_spec;
    // For general unit-sum symmetric W the index can leave [-1, 1]; that is
    // reported, not clamped, and flagged here.
    std::vector<std::string> warnings;
};

// Residual autocorrelation scatterplot: points (e_i, m*(We)_i) and the trend
// line through the origin with slope I, where m is n or n-1 per mode.
struct ScatterSeries {
    Eigen::VectorXd x;
    Eigen::VectorXd y_observed;
    Eigen::VectorXd y_trend;
    double slope = 0.0;
};

// sum of squared successive differences over sum of squares. Order-dependent
// by construction.
double durbin_watson(const Eigen::VectorXd& residuals);

// lag-1 autocorrelation coefficient: sum eps_i*eps_{i-1} / sum eps^2.
double lag1_rho(const Eigen::VectorXd& residuals);

// I = e'We. Population-standardized input gives the population index I_p;
// sample-standardized input gives I_s.
double sai(const StandardizedResiduals& e, const WeightMatrix& w);

// S = 2(1 - I).
double rci(double sai_value);

// C = (n-1) * sum_ij w_ij (eps_i - eps_j)^2 / (2 sum eps^2). Scale-invariant;
// input must be (near) zero-mean.
double geary_c(const Eigen::VectorXd& residuals, const WeightMatrix& w);

// S_a = 2C.
double arci(double c_value);

// Residual of the exact identity S_a = 2*(m * sum_i rowsum_i e_i^2 / sum e^2 - I_m),
// with m and I_m in the mode of e. Zero up to rounding; stored in reports as
// a self-check. The approximate claim S_a ~ 2(1 - I) holds when rowsum_i ~ 1/n.
double decomposition_residual(const StandardizedResiduals& e, const WeightMatrix& w);

// Classic double-summation form of Moran's index computed straight from a
// contiguity matrix, with its own mean/variance code. Serves as an oracle for
// sai(); shares no intermediate code with the matrix path.
double moran_oracle(const Eigen::VectorXd& values, const ContiguityMatrix& v, Mode mode);

// Summation form of Geary's coefficient; oracle for geary_c().
double geary_oracle(const Eigen::VectorXd& values, const ContiguityMatrix& v);

// Product-moment correlation.
double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

ScatterSeries scatter_series(const StandardizedResiduals& e, const WeightMatrix& w);

// Assembles every statistic for one residual series. The raw residuals carry
// the DW/rho/Geary side; the standardized vector carries the SAI side.
TestReport compute_test_report(const Eigen::VectorXd& residuals, const StandardizedResiduals& e,
                               const WeightMatrix& w, const WeightSpec& spec);

}  // namespace sdw
