#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "sdw/dataset.hpp"

namespace sdw {

enum class Mode { population, sample };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& s);

enum class ModelKind { linear, logistic_linearized };

std::string to_string(ModelKind kind);

// Least-squares fit with intercept. Residuals sum to zero and are orthogonal
// to every explanatory column.
struct FitResult {
    double intercept = 0.0;
    std::vector<std::string> x_names;
    Eigen::VectorXd slopes;     // one per explanatory column
    Eigen::VectorXd residuals;  // y - yhat, in row order
    double sigma_population = 0.0;  // sqrt(sum(eps^2)/n)
    double sigma_sample = 0.0;      // sqrt(sum(eps^2)/(n-1))
    double r_squared = 0.0;
    ModelKind model_kind = ModelKind::linear;
    std::optional<double> lmax;  // capacity parameter, logistic model only

    int n() const { return static_cast<int>(residuals.size()); }
};

// e_i = eps_i / sigma, with sigma chosen by mode. In population mode
// sum(e^2) = n; in sample mode sum(e^2) = n - 1.
struct StandardizedResiduals {
    Eigen::VectorXd values;
    Mode mode = Mode::sample;

    int n() const { return static_cast<int>(values.size()); }
    // n (population) or n-1 (sample); the multiplier the statistics use.
    double dof() const { return mode == Mode::population ? n() : n() - 1; }
};

// Fits y = a + sum_j b_j x_j + eps. x_cols may be empty (intercept-only
// model; residuals are the deviations from the mean).
FitResult fit_ols(const Dataset& dataset, const std::string& y_col,
                  const std::vector<std::string>& x_cols);

// Same fit on bare vectors. Empty x_names get synthesized as x1, x2, ...
FitResult fit_ols(const Eigen::VectorXd& y, const std::vector<Eigen::VectorXd>& xs,
                  std::vector<std::string> x_names = {});

StandardizedResiduals standardize(const FitResult& fit, Mode mode);

// Standardizes an arbitrary vector by sigma of the declared mode without
// centering it. Intended for residual-like (zero-mean) input.
StandardizedResiduals standardize_values(const Eigen::VectorXd& values, Mode mode);

// ln(lmax/L - 1), elementwise. Fitting the result against the explanatory
// variable turns the logistic law into a straight line whose intercept is
// ln A and whose slope is -k.
Eigen::VectorXd logistic_linearize(const Eigen::VectorXd& levels, double lmax,
                                   const std::vector<std::string>& labels = {});

// fit_ols on the logistic-linearized response column.
FitResult fit_logistic_linearized(const Dataset& dataset, const std::string& y_col,
                                  const std::vector<std::string>& x_cols, double lmax);

}  // namespace sdw
