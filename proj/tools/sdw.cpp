#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sdw/fixtures.hpp"
#include "sdw/inference.hpp"
#include "sdw/report_json.hpp"
#include "sdw/scatter_out.hpp"
#include "sdw/version.hpp"

namespace {

struct CliConfig {
    std::string data_path;
    std::string dist_path;
    std::string y_col;
    std::vector<std::string> x_cols;
    std::string weight = "power:1";
    std::string mode = "sample";
    bool logistic = false;
    double lmax = 100.0;
    std::optional<int> m;
    int permute_m = 999;
    std::uint64_t seed = 0;
    std::optional<int> enumerate_dw;
    std::string out_csv = "scatter.csv";
    std::string out_svg = "scatter.svg";
    std::string fixtures_dir = ".";
};

sdw::ReportOptions report_options(const CliConfig& cfg) {
    sdw::ReportOptions opt;
    opt.y_col = cfg.y_col;
    opt.x_cols = cfg.x_cols;
    opt.weight_spec = sdw::WeightSpec::parse(cfg.weight);
    opt.mode = sdw::parse_mode(cfg.mode);
    opt.model_kind = cfg.logistic ? sdw::ModelKind::logistic_linearized : sdw::ModelKind::linear;
    opt.lmax = cfg.lmax;
    opt.seed = cfg.seed;
    return opt;
}

std::vector<std::string> required_columns(const CliConfig& cfg) {
    std::vector<std::string> cols = {cfg.y_col};
    cols.insert(cols.end(), cfg.x_cols.begin(), cfg.x_cols.end());
    return cols;
}

int cmd_fit(const CliConfig& cfg) {
    const sdw::Dataset dataset = sdw::load_dataset(cfg.data_path, required_columns(cfg));
    const sdw::FitResult fit =
        cfg.logistic ? sdw::fit_logistic_linearized(dataset, cfg.y_col, cfg.x_cols, cfg.lmax)
                     : sdw::fit_ols(dataset, cfg.y_col, cfg.x_cols);
    std::fputs(sdw::fit_to_json(fit).c_str(), stdout);
    return 0;
}

int cmd_test(const CliConfig& cfg) {
    const sdw::Dataset dataset = sdw::load_dataset(cfg.data_path, required_columns(cfg));
    const sdw::DistanceMatrix dm = sdw::load_distance_matrix(cfg.dist_path);
    sdw::ReportOptions opt = report_options(cfg);
    opt.permutations = cfg.m;
    const sdw::FullReport report = sdw::run_report(dataset, dm, opt);
    for (const auto& warning : report.test.warnings) {
        std::fprintf(stderr, "warning: %s\n", warning.c_str());
    }
    std::fputs(sdw::full_report_to_json(report).c_str(), stdout);
    return 0;
}

int cmd_scatter(const CliConfig& cfg) {
    const sdw::Dataset dataset = sdw::load_dataset(cfg.data_path, required_columns(cfg));
    const sdw::DistanceMatrix dm = sdw::load_distance_matrix(cfg.dist_path);
    const auto [data, dist] = sdw::align(dataset, dm);
    const sdw::ReportOptions opt = report_options(cfg);

    const sdw::FitResult fit =
        cfg.logistic ? sdw::fit_logistic_linearized(data, cfg.y_col, cfg.x_cols, cfg.lmax)
                     : sdw::fit_ols(data, cfg.y_col, cfg.x_cols);
    const sdw::StandardizedResiduals e = sdw::standardize(fit, opt.mode);
    const sdw::WeightMatrix w =
        sdw::normalize(sdw::contiguity_from_distances(dist, opt.weight_spec));
    const sdw::ScatterSeries series = sdw::scatter_series(e, w);

    sdw::write_file(cfg.out_csv, sdw::scatter_to_csv(series, data.labels()));
    sdw::write_file(cfg.out_svg, sdw::scatter_to_svg(series));
    return 0;
}

int cmd_permute(const CliConfig& cfg) {
    const sdw::Dataset dataset = sdw::load_dataset(cfg.data_path, required_columns(cfg));
    const sdw::DistanceMatrix dm = sdw::load_distance_matrix(cfg.dist_path);
    const sdw::ReportOptions opt = report_options(cfg);

    if (cfg.enumerate_dw) {
        const sdw::DwEnumeration e =
            sdw::enumerate_dw(dataset, dm, opt, *cfg.enumerate_dw, cfg.seed);
        std::fputs(sdw::dw_enumeration_to_json(e).c_str(), stdout);
        return 0;
    }

    const auto [data, dist] = sdw::align(dataset, dm);
    const sdw::FitResult fit =
        cfg.logistic ? sdw::fit_logistic_linearized(data, cfg.y_col, cfg.x_cols, cfg.lmax)
                     : sdw::fit_ols(data, cfg.y_col, cfg.x_cols);
    const sdw::StandardizedResiduals e = sdw::standardize(fit, opt.mode);
    const sdw::WeightMatrix w =
        sdw::normalize(sdw::contiguity_from_distances(dist, opt.weight_spec));
    const sdw::PermutationReport report = sdw::permutation_test(e, w, cfg.permute_m, cfg.seed);
    std::fputs(sdw::permutation_to_json(report).c_str(), stdout);
    return 0;
}

int cmd_fixtures(const CliConfig& cfg) {
    const std::string conv = cfg.fixtures_dir + "/table2_conventional.csv";
    const std::string alpha = cfg.fixtures_dir + "/table2_alphabetical.csv";
    sdw::save_dataset(sdw::fixtures::table2_conventional(), conv);
    sdw::save_dataset(sdw::fixtures::table2_alphabetical(), alpha);
    std::printf("%s\n%s\n", conv.c_str(), alpha.c_str());
    return 0;
}

void add_model_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--data", cfg.data_path, "dataset CSV (label,<col>,...)")->required();
    cmd->add_option("--y", cfg.y_col, "response column")->required();
    cmd->add_option("--x", cfg.x_cols, "explanatory columns (may repeat; empty = intercept only)");
    cmd->add_flag("--logistic", cfg.logistic, "fit ln(lmax/y - 1) instead of y");
    cmd->add_option("--lmax", cfg.lmax, "capacity for the logistic transform (default 100)");
}

void add_spatial_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--dist", cfg.dist_path, "distance matrix CSV")->required();
    cmd->add_option("--weight", cfg.weight, "weight kernel: power[:gamma], exp, step:d0");
    cmd->add_option("--mode", cfg.mode, "population or sample (default sample)");
}

}  // namespace

static int run(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"serial-correlation tests for least-squares residuals on spatial samples"};
    app.set_version_flag("--version", std::string("sdw ") + sdw::kVersion);
    app.require_subcommand(1);

    CLI::App* fit = app.add_subcommand("fit", "least-squares fit, FitResult JSON on stdout");
    add_model_options(fit, cfg);

    CLI::App* test = app.add_subcommand("test", "full residual test, FullReport JSON on stdout");
    add_model_options(test, cfg);
    add_spatial_options(test, cfg);
    test->add_option("--m", cfg.m, "also run a permutation test with this many relabelings");
    test->add_option("--seed", cfg.seed, "RNG seed (default 0)");

    CLI::App* scatter =
        app.add_subcommand("scatter", "residual autocorrelation scatterplot (CSV + SVG)");
    add_model_options(scatter, cfg);
    add_spatial_options(scatter, cfg);
    scatter->add_option("--out", cfg.out_csv, "point series CSV path (default scatter.csv)");
    scatter->add_option("--svg", cfg.out_svg, "SVG path (default scatter.svg)");

    CLI::App* permute =
        app.add_subcommand("permute", "permutation significance, PermutationReport JSON on stdout");
    add_model_options(permute, cfg);
    add_spatial_options(permute, cfg);
    permute->add_option("--m", cfg.permute_m, "number of relabelings (default 999)");
    permute->add_option("--seed", cfg.seed, "RNG seed (default 0)");
    permute->add_option("--enumerate-dw", cfg.enumerate_dw,
                        "instead: report DW under this many random row orders");

    CLI::App* fixtures = app.add_subcommand("fixtures", "write the bundled 2012 fixture CSVs");
    fixtures->add_option("--out", cfg.fixtures_dir, "target directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fit->parsed()) return cmd_fit(cfg);
        if (test->parsed()) return cmd_test(cfg);
        if (scatter->parsed()) return cmd_scatter(cfg);
        if (permute->parsed()) return cmd_permute(cfg);
        if (fixtures->parsed()) return cmd_fixtures(cfg);
    } catch (const sdw::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const sdw::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
