#include "sdw/report_json.hpp"

#include <algorithm>

#include "sdw/jsonw.hpp"

namespace sdw {

namespace {

void write_slopes(JsonWriter& w, const FitResult& fit) {
    // object keyed by column name, keys sorted
    std::vector<std::pair<std::string, double>> slopes;
    for (Eigen::Index j = 0; j < fit.slopes.size(); ++j) {
        slopes.emplace_back(fit.x_names[static_cast<std::size_t>(j)], fit.slopes(j));
    }
    std::sort(slopes.begin(), slopes.end());
    w.begin_object();
    for (const auto& [name, value] : slopes) w.key(name).value(value);
    w.end_object();
}

void write_fit_fields(JsonWriter& w, const FitResult& fit, bool with_residuals) {
    w.key("intercept").value(fit.intercept);
    if (fit.lmax) w.key("lmax").value(*fit.lmax);
    w.key("model_kind").value(to_string(fit.model_kind));
    w.key("n").value(static_cast<std::int64_t>(fit.n()));
    w.key("r_squared").value(fit.r_squared);
    if (with_residuals) {
        w.key("residuals").begin_array();
        for (Eigen::Index i = 0; i < fit.residuals.size(); ++i) w.value(fit.residuals(i));
        w.end_array();
    }
    w.key("sigma_population").value(fit.sigma_population);
    w.key("sigma_sample").value(fit.sigma_sample);
    w.key("slopes");
    write_slopes(w, fit);
}

void write_permutation_fields(JsonWriter& w, const PermutationReport& report) {
    w.key("m").value(static_cast<std::int64_t>(report.m));
    w.key("null_mean").value(report.null_mean);
    w.key("null_sd").value(report.null_sd);
    w.key("observed_i").value(report.observed_i);
    w.key("p_two_sided").value(report.p_two_sided);
    w.key("seed").value(static_cast<std::int64_t>(report.seed));
}

}  // namespace

std::string fit_to_json(const FitResult& fit) {
    JsonWriter w;
    w.begin_object();
    write_fit_fields(w, fit, /*with_residuals=*/true);
    w.end_object();
    return w.str();
}

std::string permutation_to_json(const PermutationReport& report) {
    JsonWriter w;
    w.begin_object();
    write_permutation_fields(w, report);
    w.end_object();
    return w.str();
}

std::string full_report_to_json(const FullReport& report) {
    JsonWriter w;
    w.begin_object();

    w.key("fit").begin_object();
    write_fit_fields(w, report.fit, /*with_residuals=*/false);
    w.end_object();

    if (report.permutation) {
        w.key("permutation").begin_object();
        write_permutation_fields(w, *report.permutation);
        w.end_object();
    }

    w.key("provenance").begin_object();
    w.key("dataset_digest").value(report.provenance.dataset_digest);
    w.key("distances_digest").value(report.provenance.distances_digest);
    w.key("mode").value(report.provenance.mode);
    w.key("model").value(report.provenance.model);
    w.key("tool_version").value(report.provenance.tool_version);
    w.key("weight").value(report.provenance.weight);
    w.key("x").begin_array();
    for (const auto& name : report.provenance.x) w.value(name);
    w.end_array();
    w.key("y").value(report.provenance.y);
    w.end_object();

    const TestReport& t = report.test;
    w.key("test").begin_object();
    w.key("arci").value(t.arci);
    w.key("decomposition_check").value(t.decomposition_check);
    w.key("dw").value(t.dw);
    w.key("geary_c").value(t.geary_c);
    w.key("mode").value(to_string(t.mode));
    w.key("rci").value(t.rci);
    w.key("rho").value(t.rho);
    w.key("sai").value(t.sai);
    w.key("warnings").begin_array();
    for (const auto& msg : t.warnings) w.value(msg);
    w.end_array();
    w.key("weight").value(t.weight_spec.to_string());
    w.end_object();

    w.end_object();
    return w.str();
}

std::string dw_enumeration_to_json(const DwEnumeration& e) {
    JsonWriter w;
    w.begin_object();
    w.key("dw_sd").value(e.dw_sd);
    w.key("dw_values").begin_array();
    for (double d : e.dw_values) w.value(d);
    w.end_array();
    w.key("k").value(static_cast<std::int64_t>(e.k));
    w.key("sai_spread").value(e.sai_spread);
    w.key("sai_values").begin_array();
    for (double s : e.sai_values) w.value(s);
    w.end_array();
    w.key("seed").value(static_cast<std::int64_t>(e.seed));
    w.end_object();
    return w.str();
}

}  // namespace sdw
