#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdw/fixtures.hpp"
#include "sdw/inference.hpp"
#include "sdw/report_json.hpp"
#include "sdw/scatter_out.hpp"
#include "sdw/version.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

sdw::ReportOptions make_options(const std::string& y, const std::vector<std::string>& x,
                                const std::string& weight, const std::string& mode,
                                const std::string& model, double lmax,
                                std::optional<int> permutations, std::uint64_t seed) {
    sdw::ReportOptions opt;
    opt.y_col = y;
    opt.x_cols = x;
    opt.weight_spec = sdw::WeightSpec::parse(weight);
    opt.mode = sdw::parse_mode(mode);
    if (model == "linear") {
        opt.model_kind = sdw::ModelKind::linear;
    } else if (model == "logistic") {
        opt.model_kind = sdw::ModelKind::logistic_linearized;
    } else {
        throw sdw::ValidationError("unknown model \"" + model + "\" (expected linear or logistic)");
    }
    opt.lmax = lmax;
    opt.permutations = permutations;
    opt.seed = seed;
    return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Serial-correlation tests for least-squares residuals on spatial samples";
    m.attr("__version__") = sdw::kVersion;

    py::register_exception<sdw::ValidationError>(m, "SdwValidationError", PyExc_ValueError);
    py::register_exception<sdw::IoError>(m, "SdwIoError", PyExc_IOError);

    py::class_<sdw::Dataset>(m, "Dataset")
        .def(py::init<std::vector<std::string>,
                      std::vector<std::pair<std::string, std::vector<double>>>>(),
             "labels"_a, "columns"_a)
        .def_property_readonly("n", &sdw::Dataset::n)
        .def_property_readonly("labels", &sdw::Dataset::labels)
        .def_property_readonly("column_names", &sdw::Dataset::column_names)
        .def("column", &sdw::Dataset::column, "name"_a)
        .def("to_csv", &sdw::Dataset::to_csv);

    py::class_<sdw::DistanceMatrix>(m, "DistanceMatrix")
        .def(py::init<std::vector<std::string>, Eigen::MatrixXd>(), "labels"_a, "values"_a)
        .def_property_readonly("n", &sdw::DistanceMatrix::n)
        .def_property_readonly("labels", &sdw::DistanceMatrix::labels)
        .def_property_readonly("values", &sdw::DistanceMatrix::values)
        .def("to_csv", &sdw::DistanceMatrix::to_csv);

    py::class_<sdw::Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), "mapping"_a)
        .def_static("identity", &sdw::Permutation::identity, "n"_a)
        .def_static("random", &sdw::Permutation::random, "n"_a, "seed"_a)
        .def_static("sorting", &sdw::Permutation::sorting, "labels"_a)
        .def_property_readonly("mapping", &sdw::Permutation::map)
        .def("inverse", &sdw::Permutation::inverse);

    m.def("load_dataset", &sdw::load_dataset, "path"_a,
          "required_columns"_a = std::vector<std::string>{});
    m.def("load_distance_matrix", &sdw::load_distance_matrix, "path"_a);
    m.def("align", &sdw::align, "dataset"_a, "distances"_a);
    m.def("apply_permutation",
          py::overload_cast<const sdw::Dataset&, const sdw::DistanceMatrix&,
                            const sdw::Permutation&>(&sdw::apply_permutation),
          "dataset"_a, "distances"_a, "p"_a);

    m.def("table2_conventional", &sdw::fixtures::table2_conventional,
          py::return_value_policy::reference);
    m.def("table2_alphabetical", &sdw::fixtures::table2_alphabetical,
          py::return_value_policy::reference);

    py::class_<sdw::FitResult>(m, "FitResult")
        .def_readonly("intercept", &sdw::FitResult::intercept)
        .def_readonly("x_names", &sdw::FitResult::x_names)
        .def_readonly("slopes", &sdw::FitResult::slopes)
        .def_readonly("residuals", &sdw::FitResult::residuals)
        .def_readonly("sigma_population", &sdw::FitResult::sigma_population)
        .def_readonly("sigma_sample", &sdw::FitResult::sigma_sample)
        .def_readonly("r_squared", &sdw::FitResult::r_squared)
        .def_readonly("lmax", &sdw::FitResult::lmax)
        .def_property_readonly("model_kind",
                               [](const sdw::FitResult& f) { return to_string(f.model_kind); })
        .def_property_readonly("n", &sdw::FitResult::n);

    py::class_<sdw::StandardizedResiduals>(m, "StandardizedResiduals")
        .def(py::init([](const Eigen::VectorXd& values, const std::string& mode) {
                 return sdw::StandardizedResiduals{values, sdw::parse_mode(mode)};
             }),
             "values"_a, "mode"_a = "sample")
        .def_readonly("values", &sdw::StandardizedResiduals::values)
        .def_property_readonly("mode", [](const sdw::StandardizedResiduals& e) {
            return to_string(e.mode);
        });

    m.def(
        "fit_ols",
        [](const Eigen::VectorXd& y, const std::vector<Eigen::VectorXd>& xs,
           const std::vector<std::string>& names) { return sdw::fit_ols(y, xs, names); },
        "y"_a, "xs"_a = std::vector<Eigen::VectorXd>{}, "x_names"_a = std::vector<std::string>{});
    m.def(
        "fit_dataset",
        [](const sdw::Dataset& ds, const std::string& y, const std::vector<std::string>& x) {
            return sdw::fit_ols(ds, y, x);
        },
        "dataset"_a, "y"_a, "x"_a);
    m.def(
        "standardize",
        [](const sdw::FitResult& fit, const std::string& mode) {
            return sdw::standardize(fit, sdw::parse_mode(mode));
        },
        "fit"_a, "mode"_a = "sample");
    m.def(
        "standardize_values",
        [](const Eigen::VectorXd& values, const std::string& mode) {
            return sdw::standardize_values(values, sdw::parse_mode(mode));
        },
        "values"_a, "mode"_a = "sample");
    m.def(
        "logistic_linearize",
        [](const Eigen::VectorXd& levels, double lmax) {
            return sdw::logistic_linearize(levels, lmax);
        },
        "levels"_a, "lmax"_a = 100.0);
    m.def("fit_logistic_linearized", &sdw::fit_logistic_linearized, "dataset"_a, "y"_a, "x"_a,
          "lmax"_a = 100.0);

    py::class_<sdw::ContiguityMatrix>(m, "ContiguityMatrix")
        .def_readonly("values", &sdw::ContiguityMatrix::values)
        .def_readonly("total", &sdw::ContiguityMatrix::total);

    py::class_<sdw::WeightMatrix>(m, "WeightMatrix")
        .def_readonly("values", &sdw::WeightMatrix::values)
        .def_readonly("row_sums", &sdw::WeightMatrix::row_sums);

    m.def(
        "contiguity_from_distances",
        [](const sdw::DistanceMatrix& dm, const std::string& spec) {
            return sdw::contiguity_from_distances(dm, sdw::WeightSpec::parse(spec));
        },
        "distances"_a, "weight"_a = "power:1");
    m.def("normalize", &sdw::normalize, "contiguity"_a);
    m.def("even_weights", &sdw::even_weights, "n"_a);

    m.def("durbin_watson", &sdw::durbin_watson, "residuals"_a);
    m.def("lag1_rho", &sdw::lag1_rho, "residuals"_a);
    m.def("sai", &sdw::sai, "e"_a, "w"_a);
    m.def("rci", &sdw::rci, "sai_value"_a);
    m.def("geary_c", &sdw::geary_c, "residuals"_a, "w"_a);
    m.def("arci", &sdw::arci, "c_value"_a);
    m.def("decomposition_residual", &sdw::decomposition_residual, "e"_a, "w"_a);
    m.def(
        "moran_oracle",
        [](const Eigen::VectorXd& values, const sdw::ContiguityMatrix& v, const std::string& mode) {
            return sdw::moran_oracle(values, v, sdw::parse_mode(mode));
        },
        "values"_a, "v"_a, "mode"_a = "sample");
    m.def("geary_oracle", &sdw::geary_oracle, "values"_a, "v"_a);
    m.def("pearson", &sdw::pearson, "x"_a, "y"_a);

    py::class_<sdw::ScatterSeries>(m, "ScatterSeries")
        .def_readonly("x", &sdw::ScatterSeries::x)
        .def_readonly("y_observed", &sdw::ScatterSeries::y_observed)
        .def_readonly("y_trend", &sdw::ScatterSeries::y_trend)
        .def_readonly("slope", &sdw::ScatterSeries::slope);

    m.def("scatter_series", &sdw::scatter_series, "e"_a, "w"_a);
    m.def("scatter_to_csv", &sdw::scatter_to_csv, "series"_a,
          "labels"_a = std::vector<std::string>{});
    m.def("scatter_to_svg", &sdw::scatter_to_svg, "series"_a);

    py::class_<sdw::PermutationReport>(m, "PermutationReport")
        .def_readonly("observed_i", &sdw::PermutationReport::observed_i)
        .def_readonly("m", &sdw::PermutationReport::m)
        .def_readonly("seed", &sdw::PermutationReport::seed)
        .def_readonly("p_two_sided", &sdw::PermutationReport::p_two_sided)
        .def_readonly("null_mean", &sdw::PermutationReport::null_mean)
        .def_readonly("null_sd", &sdw::PermutationReport::null_sd)
        .def("to_json", &sdw::permutation_to_json);

    py::class_<sdw::TestReport>(m, "TestReport")
        .def_readonly("dw", &sdw::TestReport::dw)
        .def_readonly("rho", &sdw::TestReport::rho)
        .def_readonly("sai", &sdw::TestReport::sai)
        .def_readonly("rci", &sdw::TestReport::rci)
        .def_readonly("geary_c", &sdw::TestReport::geary_c)
        .def_readonly("arci", &sdw::TestReport::arci)
        .def_readonly("decomposition_check", &sdw::TestReport::decomposition_check)
        .def_readonly("warnings", &sdw::TestReport::warnings)
        .def_property_readonly("mode",
                               [](const sdw::TestReport& t) { return to_string(t.mode); })
        .def_property_readonly("weight", [](const sdw::TestReport& t) {
            return t.weight_spec.to_string();
        });

    py::class_<sdw::FullReport>(m, "FullReport")
        .def_readonly("fit", &sdw::FullReport::fit)
        .def_readonly("test", &sdw::FullReport::test)
        .def_readonly("permutation", &sdw::FullReport::permutation)
        .def("to_json", &sdw::full_report_to_json);

    m.def("permutation_test", &sdw::permutation_test, "e"_a, "w"_a, "m"_a = 999, "seed"_a = 0);
    m.def(
        "run_report",
        [](const sdw::Dataset& dataset, const sdw::DistanceMatrix& dm, const std::string& y,
           const std::vector<std::string>& x, const std::string& weight, const std::string& mode,
           const std::string& model, double lmax, std::optional<int> permutations,
           std::uint64_t seed) {
            return sdw::run_report(
                dataset, dm,
                make_options(y, x, weight, mode, model, lmax, permutations, seed));
        },
        "dataset"_a, "distances"_a, "y"_a, "x"_a = std::vector<std::string>{},
        "weight"_a = "power:1", "mode"_a = "sample", "model"_a = "linear", "lmax"_a = 100.0,
        "permutations"_a = std::nullopt, "seed"_a = 0);
}
