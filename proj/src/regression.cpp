#include "sdw/regression.hpp"

#include <cmath>

namespace sdw {

std::string to_string(Mode mode) {
    return mode == Mode::population ? "population" : "sample";
}

Mode parse_mode(const std::string& s) {
    if (s == "population") return Mode::population;
    if (s == "sample") return Mode::sample;
    throw ValidationError("unknown mode \"" + s + "\" (expected population or sample)");
}

std::string to_string(ModelKind kind) {
    return kind == ModelKind::linear ? "linear" : "logistic-linearized";
}

namespace {

Eigen::VectorXd to_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

FitResult fit_vectors(const Eigen::VectorXd& y, const std::vector<std::string>& x_names,
                      const std::vector<Eigen::VectorXd>& xs) {
    const Eigen::Index n = y.size();
    const Eigen::Index k = static_cast<Eigen::Index>(xs.size());
    if (n <= k + 1) {
        throw ValidationError("fit: needs more rows than coefficients (n = " + std::to_string(n) +
                              ", coefficients = " + std::to_string(k + 1) + ")");
    }

    // Solve on mean-centered columns; the intercept falls out afterwards.
    // This keeps the QR well conditioned even when explanatory magnitudes
    // are ~1e5.
    const double y_mean = y.mean();
    const Eigen::VectorXd yc = y.array() - y_mean;
    const double sst = yc.squaredNorm();
    if (sst <= 0.0) throw ValidationError("fit: zero variance in response column");

    Eigen::VectorXd slopes(k);
    Eigen::VectorXd yhat_centered = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd x_means(k);
    if (k > 0) {
        Eigen::MatrixXd xc(n, k);
        for (Eigen::Index j = 0; j < k; ++j) {
            x_means(j) = xs[static_cast<std::size_t>(j)].mean();
            xc.col(j) = xs[static_cast<std::size_t>(j)].array() - x_means(j);
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xc);
        if (qr.rank() < k) {
            throw ValidationError("fit: design matrix is rank deficient (collinear or constant "
                                  "explanatory columns)");
        }
        slopes = qr.solve(yc);
        yhat_centered = xc * slopes;
    }

    FitResult fit;
    fit.x_names = x_names;
    fit.slopes = slopes;
    fit.intercept = y_mean - (k > 0 ? slopes.dot(x_means) : 0.0);
    fit.residuals = yc - yhat_centered;
    const double sse = fit.residuals.squaredNorm();
    fit.r_squared = 1.0 - sse / sst;
    fit.sigma_population = std::sqrt(sse / static_cast<double>(n));
    fit.sigma_sample = std::sqrt(sse / static_cast<double>(n - 1));
    return fit;
}

}  // namespace

FitResult fit_ols(const Dataset& dataset, const std::string& y_col,
                  const std::vector<std::string>& x_cols) {
    const Eigen::VectorXd y = to_vector(dataset.column(y_col));
    std::vector<Eigen::VectorXd> xs;
    xs.reserve(x_cols.size());
    for (const auto& name : x_cols) xs.push_back(to_vector(dataset.column(name)));
    return fit_vectors(y, x_cols, xs);
}

FitResult fit_ols(const Eigen::VectorXd& y, const std::vector<Eigen::VectorXd>& xs,
                  std::vector<std::string> x_names) {
    for (const auto& x : xs) {
        if (x.size() != y.size()) {
            throw ValidationError("fit: explanatory column length does not match response");
        }
    }
    if (x_names.empty()) {
        for (std::size_t j = 0; j < xs.size(); ++j) x_names.push_back("x" + std::to_string(j + 1));
    }
    if (x_names.size() != xs.size()) {
        throw ValidationError("fit: got " + std::to_string(x_names.size()) + " names for " +
                              std::to_string(xs.size()) + " columns");
    }
    return fit_vectors(y, x_names, xs);
}

StandardizedResiduals standardize(const FitResult& fit, Mode mode) {
    // Exact fits leave only rounding noise behind; standardizing that noise
    // would produce meaningless +-O(1) values.
    if (!(fit.sigma_population > 0.0) || 1.0 - fit.r_squared <= 1e-24) {
        throw ValidationError("standardize: zero residual variance (perfect fit, nothing to test)");
    }
    return standardize_values(fit.residuals, mode);
}

StandardizedResiduals standardize_values(const Eigen::VectorXd& values, Mode mode) {
    const Eigen::Index n = values.size();
    if (n < 2) throw ValidationError("standardize: needs at least 2 residuals");
    const double denom = mode == Mode::population ? static_cast<double>(n)
                                                  : static_cast<double>(n - 1);
    const double sigma = std::sqrt(values.squaredNorm() / denom);
    if (sigma <= 0.0) {
        throw ValidationError("standardize: zero residual variance (perfect fit, nothing to test)");
    }
    return {values / sigma, mode};
}

Eigen::VectorXd logistic_linearize(const Eigen::VectorXd& levels, double lmax,
                                   const std::vector<std::string>& labels) {
    if (!(lmax > 0.0)) throw ValidationError("logistic transform: lmax must be positive");
    Eigen::VectorXd out(levels.size());
    for (Eigen::Index i = 0; i < levels.size(); ++i) {
        const double level = levels(i);
        if (!(level > 0.0) || !(level < lmax)) {
            const std::string who = static_cast<std::size_t>(i) < labels.size()
                                        ? "\"" + labels[static_cast<std::size_t>(i)] + "\""
                                        : "row " + std::to_string(i + 1);
            throw ValidationError("logistic transform: level " + std::to_string(level) + " at " +
                                  who + " is outside (0, lmax=" + std::to_string(lmax) + ")");
        }
        out(i) = std::log(lmax / level - 1.0);
    }
    return out;
}

FitResult fit_logistic_linearized(const Dataset& dataset, const std::string& y_col,
                                  const std::vector<std::string>& x_cols, double lmax) {
    const Eigen::VectorXd transformed =
        logistic_linearize(to_vector(dataset.column(y_col)), lmax, dataset.labels());
    std::vector<Eigen::VectorXd> xs;
    xs.reserve(x_cols.size());
    for (const auto& name : x_cols) xs.push_back(to_vector(dataset.column(name)));
    FitResult fit = fit_vectors(transformed, x_cols, xs);
    fit.model_kind = ModelKind::logistic_linearized;
    fit.lmax = lmax;
    return fit;
}

}  // namespace sdw
