#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdw/autocorr.hpp"
#include "sdw/dataset.hpp"

namespace sdw {

// Randomization-null significance for the spatial autocorrelation index:
// residuals are relabeled over fixed locations, W stays put.
struct PermutationReport {
    double observed_i = 0.0;
    int m = 0;              // number of random relabelings
    std::uint64_t seed = 0;
    double p_two_sided = 1.0;  // (1 + #{|I_k| >= |I_obs|}) / (m + 1)
    double null_mean = 0.0;
    double null_sd = 0.0;
};

struct Provenance {
    std::string dataset_digest;
    std::string distances_digest;
    std::string mode;
    std::string model;
    std::string tool_version;
    std::string weight;
    std::vector<std::string> x;
    std::string y;
};

struct FullReport {
    FitResult fit;
    TestReport test;
    std::optional<PermutationReport> permutation;
    Provenance provenance;
};

struct ReportOptions {
    std::string y_col;
    std::vector<std::string> x_cols;
    WeightSpec weight_spec;
    Mode mode = Mode::sample;
    ModelKind model_kind = ModelKind::linear;
    double lmax = 100.0;                    // logistic model only
    std::optional<int> permutations;        // run the significance stage when set
    std::uint64_t seed = 0;
};

// Relabeling k is drawn from substream (seed, k), so the null statistics form
// the same multiset no matter the evaluation order.
PermutationReport permutation_test(const StandardizedResiduals& e, const WeightMatrix& w, int m,
                                   std::uint64_t seed);

// The two-stage workflow: fit, standardize, build weights, compute every
// statistic, optionally attach permutation significance. Inputs are aligned
// internally; the dataset's row order rules (DW depends on it).
FullReport run_report(const Dataset& dataset, const DistanceMatrix& dm,
                      const ReportOptions& options);

// DW under k random consistent row orders of the same instance, with the SAI
// recomputed per order. DW scatters; SAI stays fixed to rounding.
struct DwEnumeration {
    std::vector<double> dw_values;
    double dw_sd = 0.0;   // sample standard deviation of dw_values
    std::vector<double> sai_values;
    double sai_spread = 0.0;  // max - min
    int k = 0;
    std::uint64_t seed = 0;
};

DwEnumeration enumerate_dw(const Dataset& dataset, const DistanceMatrix& dm,
                           const ReportOptions& options, int k, std::uint64_t seed);

}  // namespace sdw
