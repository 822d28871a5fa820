#include "sdw/autocorr.hpp"

#include <cmath>
#include <string>

namespace sdw {

namespace {

double sum_of_squares(const Eigen::VectorXd& v) { return v.squaredNorm(); }

void require_nondegenerate(const Eigen::VectorXd& residuals, const char* who) {
    if (residuals.size() < 2) {
        throw ValidationError(std::string(who) + ": needs at least 2 residuals");
    }
    if (!(sum_of_squares(residuals) > 0.0)) {
        throw ValidationError(std::string(who) + ": zero residual variance");
    }
}

void require_matching(const StandardizedResiduals& e, const WeightMatrix& w, const char* who) {
    if (e.n() != w.n()) {
        throw ValidationError(std::string(who) + ": residual length " + std::to_string(e.n()) +
                              " does not match weight matrix size " + std::to_string(w.n()));
    }
    // A standardized vector satisfies sum(e^2) = n (population) or n-1 (sample).
    const double ss = sum_of_squares(e.values);
    if (std::abs(ss - e.dof()) > 1e-9 * e.n()) {
        throw ValidationError(std::string(who) + ": input is not standardized in " +
                              to_string(e.mode) + " mode (sum of squares " + std::to_string(ss) +
                              ", expected " + std::to_string(e.dof()) + ")");
    }
}

}  // namespace

double durbin_watson(const Eigen::VectorXd& residuals) {
    require_nondegenerate(residuals, "durbin_watson");
    double diff_sq = 0.0;
    for (Eigen::Index i = 1; i < residuals.size(); ++i) {
        const double d = residuals(i) - residuals(i - 1);
        diff_sq += d * d;
    }
    return diff_sq / sum_of_squares(residuals);
}

double lag1_rho(const Eigen::VectorXd& residuals) {
    require_nondegenerate(residuals, "lag1_rho");
    double cross = 0.0;
    for (Eigen::Index i = 1; i < residuals.size(); ++i) {
        cross += residuals(i) * residuals(i - 1);
    }
    return cross / sum_of_squares(residuals);
}

double sai(const StandardizedResiduals& e, const WeightMatrix& w) {
    require_matching(e, w, "sai");
    return e.values.dot(w.values * e.values);
}

double rci(double sai_value) { return 2.0 * (1.0 - sai_value); }

double geary_c(const Eigen::VectorXd& residuals, const WeightMatrix& w) {
    require_nondegenerate(residuals, "geary_c");
    const Eigen::Index n = residuals.size();
    if (static_cast<int>(n) != w.n()) {
        throw ValidationError("geary_c: residual length " + std::to_string(n) +
                              " does not match weight matrix size " + std::to_string(w.n()));
    }
    const double scale = residuals.cwiseAbs().maxCoeff();
    if (std::abs(residuals.sum()) > 1e-9 * static_cast<double>(n) * std::max(1.0, scale)) {
        throw ValidationError("geary_c: input mean is not zero; this statistic is defined for "
                              "regression residuals");
    }
    double num = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double d = residuals(i) - residuals(j);
            num += w.values(i, j) * d * d;
        }
    }
    return (static_cast<double>(n) - 1.0) * num / (2.0 * sum_of_squares(residuals));
}

double arci(double c_value) {
    if (c_value < 0.0) {
        throw ValidationError("arci: negative coefficient " + std::to_string(c_value) +
                              " signals corrupted upstream input");
    }
    return 2.0 * c_value;
}

double decomposition_residual(const StandardizedResiduals& e, const WeightMatrix& w) {
    require_matching(e, w, "decomposition_residual");
    const Eigen::Index n = e.values.size();
    const double m = e.dof();
    const double ss = sum_of_squares(e.values);

    double pair_sq = 0.0;  // sum_ij w_ij (e_i - e_j)^2
    double own_sq = 0.0;   // sum_i rowsum_i e_i^2
    for (Eigen::Index i = 0; i < n; ++i) {
        own_sq += w.row_sums(i) * e.values(i) * e.values(i);
        for (Eigen::Index j = 0; j < n; ++j) {
            const double d = e.values(i) - e.values(j);
            pair_sq += w.values(i, j) * d * d;
        }
    }
    const double sa = m * pair_sq / ss;  // 2C computed in the mode of e
    const double i_m = e.values.dot(w.values * e.values);
    return sa - 2.0 * (m * own_sq / ss - i_m);
}

double moran_oracle(const Eigen::VectorXd& values, const ContiguityMatrix& v, Mode mode) {
    const int n = static_cast<int>(values.size());
    if (n != v.n()) {
        throw ValidationError("moran_oracle: value length does not match matrix size");
    }
    // Everything below is deliberately written as plain summations over the
    // contiguity matrix; it must stay independent of the matrix-form path.
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += values(i);
    mean /= n;
    double var = 0.0;
    for (int i = 0; i < n; ++i) var += (values(i) - mean) * (values(i) - mean);
    if (!(var > 0.0)) throw ValidationError("moran_oracle: zero variance");

    double total = 0.0;
    double cross = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            total += v.values(i, j);
            cross += v.values(i, j) * (values(i) - mean) * (values(j) - mean);
        }
    }
    const double m = mode == Mode::population ? n : n - 1;
    return m * cross / (total * var);
}

double geary_oracle(const Eigen::VectorXd& values, const ContiguityMatrix& v) {
    const int n = static_cast<int>(values.size());
    if (n != v.n()) {
        throw ValidationError("geary_oracle: value length does not match matrix size");
    }
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += values(i);
    mean /= n;
    double var = 0.0;
    for (int i = 0; i < n; ++i) var += (values(i) - mean) * (values(i) - mean);
    if (!(var > 0.0)) throw ValidationError("geary_oracle: zero variance");

    double total = 0.0;
    double diff_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            total += v.values(i, j);
            diff_sq += v.values(i, j) * (values(i) - values(j)) * (values(i) - values(j));
        }
    }
    return (n - 1.0) * diff_sq / (2.0 * total * var);
}

double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size()) throw ValidationError("pearson: input lengths differ");
    const Eigen::Index n = x.size();
    if (n < 2) throw ValidationError("pearson: needs at least 2 points");
    const double mx = x.mean();
    const double my = y.mean();
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        sxy += (x(i) - mx) * (y(i) - my);
        sxx += (x(i) - mx) * (x(i) - mx);
        syy += (y(i) - my) * (y(i) - my);
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) throw ValidationError("pearson: zero variance");
    return sxy / std::sqrt(sxx * syy);
}

ScatterSeries scatter_series(const StandardizedResiduals& e, const WeightMatrix& w) {
    require_matching(e, w, "scatter_series");
    ScatterSeries s;
    s.x = e.values;
    s.y_observed = e.dof() * (w.values * e.values);
    s.slope = e.values.dot(w.values * e.values);
    s.y_trend = s.slope * e.values;
    return s;
}

TestReport compute_test_report(const Eigen::VectorXd& residuals, const StandardizedResiduals& e,
                               const WeightMatrix& w, const WeightSpec& spec) {
    TestReport report;
    report.dw = durbin_watson(residuals);
    report.rho = lag1_rho(residuals);
    report.sai = sai(e, w);
    report.rci = rci(report.sai);
    report.geary_c = geary_c(residuals, w);
    report.arci = arci(report.geary_c);
    report.decomposition_check = decomposition_residual(e, w);
    report.mode = e.mode;
    report.weight_spec = spec;
    if (std::abs(report.sai) > 1.0) {
        report.warnings.push_back("sai magnitude exceeds 1 (" + std::to_string(report.sai) +
                                  "); the index is reported unclamped");
    }
    return report;
}

}  // namespace sdw
