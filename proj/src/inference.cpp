#include "sdw/inference.hpp"

#include <cmath>

#include "sdw/digest.hpp"
#include "sdw/rng.hpp"
#include "sdw/version.hpp"

namespace sdw {

PermutationReport permutation_test(const StandardizedResiduals& e, const WeightMatrix& w, int m,
                                   std::uint64_t seed) {
    if (m < 1) throw ValidationError("permutation test: m must be at least 1");
    const double observed = sai(e, w);

    const int n = e.n();
    int at_least_as_extreme = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    Eigen::VectorXd shuffled(n);
    for (int k = 0; k < m; ++k) {
        Rng rng = substream(seed, static_cast<std::uint64_t>(k));
        const std::vector<int> idx = random_indices(n, rng);
        for (int i = 0; i < n; ++i) shuffled(i) = e.values(idx[static_cast<std::size_t>(i)]);
        // Relabeling preserves sum(e^2), so this is still a standardized vector.
        const double i_k = shuffled.dot(w.values * shuffled);
        if (std::abs(i_k) >= std::abs(observed)) ++at_least_as_extreme;
        sum += i_k;
        sum_sq += i_k * i_k;
    }

    PermutationReport report;
    report.observed_i = observed;
    report.m = m;
    report.seed = seed;
    report.p_two_sided = (1.0 + at_least_as_extreme) / (m + 1.0);
    report.null_mean = sum / m;
    const double var = sum_sq / m - report.null_mean * report.null_mean;
    report.null_sd = std::sqrt(std::max(0.0, var));
    return report;
}

namespace {

FitResult fit_for(const Dataset& dataset, const ReportOptions& options) {
    if (options.model_kind == ModelKind::logistic_linearized) {
        return fit_logistic_linearized(dataset, options.y_col, options.x_cols, options.lmax);
    }
    return fit_ols(dataset, options.y_col, options.x_cols);
}

}  // namespace

FullReport run_report(const Dataset& dataset, const DistanceMatrix& dm,
                      const ReportOptions& options) {
    const auto [data, dist] = align(dataset, dm);

    FullReport report;
    report.fit = fit_for(data, options);
    const StandardizedResiduals e = standardize(report.fit, options.mode);
    const ContiguityMatrix v = contiguity_from_distances(dist, options.weight_spec);
    const WeightMatrix w = normalize(v);
    report.test = compute_test_report(report.fit.residuals, e, w, options.weight_spec);
    if (options.permutations) {
        report.permutation = permutation_test(e, w, *options.permutations, options.seed);
    }

    report.provenance.dataset_digest = fnv1a64_hex(data.to_csv());
    report.provenance.distances_digest = fnv1a64_hex(dist.to_csv());
    report.provenance.mode = to_string(options.mode);
    report.provenance.model = to_string(options.model_kind);
    report.provenance.tool_version = kVersion;
    report.provenance.weight = options.weight_spec.to_string();
    report.provenance.x = options.x_cols;
    report.provenance.y = options.y_col;
    return report;
}

DwEnumeration enumerate_dw(const Dataset& dataset, const DistanceMatrix& dm,
                           const ReportOptions& options, int k, std::uint64_t seed) {
    if (k < 1) throw ValidationError("enumerate_dw: k must be at least 1");
    const auto [data, dist] = align(dataset, dm);

    DwEnumeration out;
    out.k = k;
    out.seed = seed;
    out.dw_values.reserve(static_cast<std::size_t>(k));
    out.sai_values.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        Rng rng = substream(seed, static_cast<std::uint64_t>(i));
        const Permutation p{random_indices(data.n(), rng)};
        const auto [pd, pm] = apply_permutation(data, dist, p);
        const FitResult fit = fit_for(pd, options);
        const StandardizedResiduals e = standardize(fit, options.mode);
        const WeightMatrix w = normalize(contiguity_from_distances(pm, options.weight_spec));
        out.dw_values.push_back(durbin_watson(fit.residuals));
        out.sai_values.push_back(sai(e, w));
    }

    double mean = 0.0;
    for (double d : out.dw_values) mean += d;
    mean /= k;
    double ss = 0.0;
    for (double d : out.dw_values) ss += (d - mean) * (d - mean);
    out.dw_sd = k > 1 ? std::sqrt(ss / (k - 1)) : 0.0;

    double lo = out.sai_values[0], hi = out.sai_values[0];
    for (double s : out.sai_values) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    out.sai_spread = hi - lo;
    return out;
}

}  // namespace sdw
