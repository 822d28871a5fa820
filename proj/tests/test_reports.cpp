#include <doctest.h>

#include <nlohmann/json.hpp>

#include "approx.hpp"
#include "sdw/digest.hpp"
#include "sdw/fixtures.hpp"
#include "sdw/inference.hpp"
#include "sdw/jsonw.hpp"
#include "sdw/report_json.hpp"
#include "sdw/scatter_out.hpp"

using namespace sdw;
using nlohmann::json;

TEST_CASE("json writer formats and escapes") {
    JsonWriter w;
    w.begin_object();
    w.key("a").value(1.0 / 3.0);
    w.key("b").value(static_cast<std::int64_t>(999));
    w.key("c").value("line\nbreak \"q\"");
    w.key("d").begin_array().value(2.2463).value(-0.0915).end_array();
    w.key("e").value_bool(true);
    w.end_object();
    CHECK(w.str() ==
          "{\"a\":0.333333333333,\"b\":999,\"c\":\"line\\nbreak \\\"q\\\"\","
          "\"d\":[2.2463,-0.0915],\"e\":true}\n");
}

TEST_CASE("json writer separates nested containers correctly") {
    JsonWriter w;
    w.begin_object();
    w.key("rows").begin_array();
    w.begin_object().key("id").value(static_cast<std::int64_t>(1)).end_object();
    w.begin_object().key("id").value(static_cast<std::int64_t>(2)).end_object();
    w.end_array();
    w.key("tail").value("x");
    w.end_object();
    CHECK(w.str() == "{\"rows\":[{\"id\":1},{\"id\":2}],\"tail\":\"x\"}\n");
}

TEST_CASE("json writer uses 12 significant digits") {
    CHECK(JsonWriter::format_double(0.1) == "0.1");
    CHECK(JsonWriter::format_double(2.0) == "2");
    CHECK(JsonWriter::format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(JsonWriter::format_double(6.3884e-4) == "0.00063884");
    CHECK(JsonWriter::format_double(1234567890123456.0) == "1.23456789012e+15");
}

TEST_CASE("fnv digest is stable") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("hello") != fnv1a64_hex("hellp"));
}

namespace {

FullReport sample_report(std::optional<int> permutations = {}) {
    const Dataset& ds = fixtures::table2_conventional();
    Rng rng(3);
    const int n = ds.n();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = 10.0 + 90.0 * rng.uniform01();
    }
    const DistanceMatrix dm(ds.labels(), std::move(d));
    ReportOptions opt;
    opt.y_col = "urb";
    opt.x_cols = {"grp"};
    opt.weight_spec = WeightSpec::parse("power:1");
    opt.permutations = permutations;
    opt.seed = 11;
    return run_report(ds, dm, opt);
}

}  // namespace

TEST_CASE("full report json parses with sorted keys and expected fields") {
    const std::string text = full_report_to_json(sample_report(49));
    CHECK(text.back() == '\n');
    const json doc = json::parse(text);

    CHECK(doc.contains("fit"));
    CHECK(doc.contains("test"));
    CHECK(doc.contains("permutation"));
    CHECK(doc.contains("provenance"));
    CHECK_FALSE(doc["fit"].contains("residuals"));
    CHECK(doc["fit"]["slopes"].contains("grp"));
    CHECK(doc["test"]["mode"] == "sample");
    CHECK(doc["test"]["weight"] == "power:1");
    CHECK(doc["provenance"]["y"] == "urb");
    CHECK(doc["permutation"]["m"] == 49);

    // keys are emitted in sorted order at every level
    const std::string raw = text;
    CHECK(raw.find("\"fit\"") < raw.find("\"permutation\""));
    CHECK(raw.find("\"permutation\"") < raw.find("\"provenance\""));
    CHECK(raw.find("\"provenance\"") < raw.find("\"test\""));
    CHECK(raw.find("\"arci\"") < raw.find("\"decomposition_check\""));
    CHECK(raw.find("\"dw\"") < raw.find("\"geary_c\""));
}

TEST_CASE("fit json carries the residual vector") {
    const FitResult fit = fit_ols(fixtures::table2_conventional(), "urb", {"grp"});
    const json doc = json::parse(fit_to_json(fit));
    CHECK(doc["residuals"].size() == 29);
    CHECK(doc["model_kind"] == "linear");
    CHECK(doc["n"] == 29);
    CHECK_FALSE(doc.contains("lmax"));

    const FitResult lfit =
        fit_logistic_linearized(fixtures::table2_conventional(), "urb", {"grp"}, 100.0);
    const json ldoc = json::parse(fit_to_json(lfit));
    CHECK(ldoc["lmax"] == 100.0);
    CHECK(ldoc["model_kind"] == "logistic-linearized");
}

TEST_CASE("report json is byte stable") {
    CHECK(full_report_to_json(sample_report(49)) == full_report_to_json(sample_report(49)));
    CHECK(fit_to_json(fit_ols(fixtures::table2_conventional(), "urb", {"grp"})) ==
          fit_to_json(fit_ols(fixtures::table2_conventional(), "urb", {"grp"})));
}

TEST_CASE("scatter csv lists one row per point") {
    Eigen::VectorXd eps(2);
    eps << 1, -1;
    const ScatterSeries s = scatter_series(standardize_values(eps, Mode::sample), even_weights(2));
    const std::string csv = scatter_to_csv(s, {"A", "B"});
    CHECK(csv.find("label,e,y_obs,y_trend\n") == 0);
    CHECK(csv.find("A,0.707106781187,-0.353553390593,-0.353553390593\n") != std::string::npos);
    CHECK(csv.find("B,-0.707106781187,0.353553390593,0.353553390593\n") != std::string::npos);
}

TEST_CASE("scatter svg is deterministic with n marks and one trend line") {
    Eigen::VectorXd eps(2);
    eps << 1, -1;
    const ScatterSeries s = scatter_series(standardize_values(eps, Mode::sample), even_weights(2));
    const std::string svg = scatter_to_svg(s);
    CHECK(svg == scatter_to_svg(s));
    CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(svg.find("slope=-0.5") != std::string::npos);

    std::size_t circles = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        pos += 7;
    }
    CHECK(circles == 2);
    // one trend line in red, on top of optional gray zero lines
    std::size_t red_lines = 0;
    pos = 0;
    while ((pos = svg.find("stroke=\"#d62728\"", pos)) != std::string::npos) {
        ++red_lines;
        pos += 10;
    }
    CHECK(red_lines == 1);
}

TEST_CASE("zero-slope scatter draws a horizontal trend line at y = 0") {
    Eigen::VectorXd eps(3);
    eps << 1, 0, -1;
    ContiguityMatrix chain;
    chain.values = (Eigen::MatrixXd(3, 3) << 0, 1, 0, 1, 0, 1, 0, 1, 0).finished();
    chain.total = 4.0;
    const ScatterSeries s =
        scatter_series(standardize_values(eps, Mode::population), normalize(chain));
    REQUIRE(s.slope == 0.0);
    const std::string svg = scatter_to_svg(s);
    // trend endpoints share one y pixel: the data y = 0 line
    const std::size_t line = svg.find("stroke=\"#d62728\"");
    REQUIRE(line != std::string::npos);
    const std::size_t start = svg.rfind("<line", line);
    const std::string trend = svg.substr(start, svg.find("/>", start) - start);
    const std::size_t y1 = trend.find("y1=\"");
    const std::size_t y2 = trend.find("y2=\"");
    REQUIRE(y1 != std::string::npos);
    REQUIRE(y2 != std::string::npos);
    CHECK(trend.substr(y1 + 4, trend.find('"', y1 + 4) - y1 - 4) ==
          trend.substr(y2 + 4, trend.find('"', y2 + 4) - y2 - 4));
}
