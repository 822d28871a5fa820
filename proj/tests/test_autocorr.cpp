#include <doctest.h>

#include <cmath>

#include "approx.hpp"
#include "sdw/autocorr.hpp"
#include "sdw/fixtures.hpp"
#include "sdw/rng.hpp"

using namespace sdw;

namespace {

Eigen::VectorXd zero_mean_random(int n, Rng& rng) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = 2.0 * rng.uniform01() - 1.0;
    v.array() -= v.mean();
    return v;
}

ContiguityMatrix random_contiguity(int n, Rng& rng) {
    ContiguityMatrix v;
    v.values = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            v.values(i, j) = v.values(j, i) = 0.05 + rng.uniform01();
        }
    }
    v.total = v.values.sum();
    return v;
}

Eigen::VectorXd table2_residuals(const Dataset& ds) {
    const auto& col = ds.column("resid");
    return Eigen::Map<const Eigen::VectorXd>(col.data(), static_cast<Eigen::Index>(col.size()));
}

// chain contiguity: links (0,1) and (1,2)
ContiguityMatrix chain3() {
    ContiguityMatrix v;
    v.values = (Eigen::MatrixXd(3, 3) << 0, 1, 0, 1, 0, 1, 0, 1, 0).finished();
    v.total = 4.0;
    return v;
}

}  // namespace

TEST_CASE("durbin-watson on the printed table2 residuals") {
    CHECK_ABS(durbin_watson(table2_residuals(fixtures::table2_conventional())), 2.2463, 0.005);
    CHECK_ABS(durbin_watson(table2_residuals(fixtures::table2_alphabetical())), 1.9071, 0.005);
}

TEST_CASE("durbin-watson closed cases") {
    Eigen::VectorXd alternating(4);
    alternating << 1, -1, 1, -1;
    CHECK(durbin_watson(alternating) == 3.0);
    Eigen::VectorXd constant = Eigen::VectorXd::Constant(4, 2.5);
    CHECK(durbin_watson(constant) == 0.0);
    CHECK_THROWS_WITH_AS(durbin_watson(Eigen::VectorXd::Zero(4)),
                         doctest::Contains("zero residual variance"), ValidationError);
    Eigen::VectorXd one(1);
    one << 1.0;
    CHECK_THROWS_AS(durbin_watson(one), ValidationError);
}

TEST_CASE("lag-1 rho closed cases") {
    Eigen::VectorXd alternating(4);
    alternating << 1, -1, 1, -1;
    CHECK(lag1_rho(alternating) == -0.75);
    Eigen::VectorXd constant = Eigen::VectorXd::Constant(4, 3.0);
    CHECK(lag1_rho(constant) == 0.75);
}

TEST_CASE("dw is close to 2(1-rho) on table2") {
    const Eigen::VectorXd resid = table2_residuals(fixtures::table2_conventional());
    CHECK(std::abs(2.0 * (1.0 - lag1_rho(resid)) - durbin_watson(resid)) <= 0.15);
}

TEST_CASE("sai two-point antithesis") {
    Eigen::VectorXd eps(2);
    eps << 1, -1;
    const WeightMatrix w = even_weights(2);
    CHECK_ABS(sai(standardize_values(eps, Mode::population), w), -1.0, 1e-15);
    CHECK_ABS(sai(standardize_values(eps, Mode::sample), w), -0.5, 1e-15);
}

TEST_CASE("sai validates its input") {
    const WeightMatrix w = even_weights(3);
    StandardizedResiduals not_standardized{Eigen::Vector3d(1.0, 2.0, -3.0), Mode::sample};
    CHECK_THROWS_WITH_AS(sai(not_standardized, w), doctest::Contains("not standardized"),
                         ValidationError);
    StandardizedResiduals wrong_size{Eigen::Vector2d(1.0, -1.0), Mode::population};
    CHECK_THROWS_AS(sai(wrong_size, w), ValidationError);
    // declared mode must match the standardization actually applied
    Eigen::VectorXd eps(3);
    eps << 1, 0, -1;
    StandardizedResiduals mislabeled{standardize_values(eps, Mode::population).values, Mode::sample};
    CHECK_THROWS_AS(sai(mislabeled, w), ValidationError);
}

TEST_CASE("rci closed cases") {
    CHECK_ABS(rci(-0.0915), 2.1830, 1e-12);
    CHECK(rci(0.0) == 2.0);
    CHECK(rci(1.0) == 0.0);
}

TEST_CASE("geary two-point and chain hand cases") {
    Eigen::VectorXd eps2(2);
    eps2 << 1, -1;
    CHECK_ABS(geary_c(eps2, even_weights(2)), 1.0, 1e-15);

    Eigen::VectorXd eps3(3);
    eps3 << 1, 0, -1;
    const WeightMatrix chain_w = normalize(chain3());
    CHECK_ABS(geary_c(eps3, chain_w), 0.5, 1e-15);
    CHECK_ABS(arci(geary_c(eps3, chain_w)), 1.0, 1e-15);
}

TEST_CASE("geary rejects biased or degenerate input") {
    Eigen::VectorXd biased(3);
    biased << 1, 1, 1;
    CHECK_THROWS_WITH_AS(geary_c(biased, even_weights(3)), doctest::Contains("mean"),
                         ValidationError);
    CHECK_THROWS_AS(geary_c(Eigen::VectorXd::Zero(3), even_weights(3)), ValidationError);
    Eigen::VectorXd eps2(2);
    eps2 << 1, -1;
    CHECK_THROWS_AS(geary_c(eps2, even_weights(3)), ValidationError);
}

TEST_CASE("arci guards its domain") {
    CHECK(arci(1.0) == 2.0);
    CHECK(arci(0.5) == 1.0);
    CHECK_THROWS_AS(arci(-0.1), ValidationError);
}

TEST_CASE("even-weight closed forms over zero-mean residuals") {
    Rng rng(4242);
    for (int n : {3, 10, 100}) {
        CAPTURE(n);
        const Eigen::VectorXd eps = zero_mean_random(n, rng);
        const WeightMatrix w = even_weights(n);
        CHECK_ABS(sai(standardize_values(eps, Mode::population), w), -1.0 / (n - 1), 1e-10);
        CHECK_ABS(sai(standardize_values(eps, Mode::sample), w), -1.0 / n, 1e-10);
        CHECK_ABS(geary_c(eps, w), 1.0, 1e-10);
        CHECK_ABS(arci(geary_c(eps, w)), 2.0, 1e-10);
    }
}

TEST_CASE("decomposition identity is exact") {
    Rng rng(777);
    SUBCASE("random instances, both modes") {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 3 + static_cast<int>(rng.bounded(10));
            const Eigen::VectorXd eps = zero_mean_random(n, rng);
            const WeightMatrix w = normalize(random_contiguity(n, rng));
            for (Mode mode : {Mode::population, Mode::sample}) {
                CHECK_ABS(decomposition_residual(standardize_values(eps, mode), w), 0.0, 1e-12);
            }
        }
    }
    SUBCASE("even weights put arci exactly 2/n away from rci") {
        for (int n : {3, 10, 100}) {
            const Eigen::VectorXd eps = zero_mean_random(n, rng);
            const WeightMatrix w = even_weights(n);
            const auto e = standardize_values(eps, Mode::sample);
            const double s_s = rci(sai(e, w));
            const double s_a = arci(geary_c(eps, w));
            CHECK_ABS(std::abs(s_a - s_s), 2.0 / n, 1e-10);
        }
    }
    SUBCASE("two-point case") {
        Eigen::VectorXd eps(2);
        eps << 1, -1;
        const WeightMatrix w = even_weights(2);
        const auto e = standardize_values(eps, Mode::sample);
        CHECK_ABS(arci(geary_c(eps, w)), 2.0, 1e-15);
        CHECK_ABS(rci(sai(e, w)), 3.0, 1e-15);
        CHECK_ABS(decomposition_residual(e, w), 0.0, 1e-15);
    }
}

TEST_CASE("oracle hand cases") {
    Eigen::VectorXd eps2(2);
    eps2 << 1, -1;
    ContiguityMatrix v2;
    v2.values = (Eigen::MatrixXd(2, 2) << 0, 3, 3, 0).finished();
    v2.total = 6.0;
    CHECK_ABS(moran_oracle(eps2, v2, Mode::population), -1.0, 1e-15);
    CHECK_ABS(geary_oracle(eps2, v2), 1.0, 1e-15);

    Eigen::VectorXd eps3(3);
    eps3 << 1, 0, -1;
    CHECK_ABS(moran_oracle(eps3, chain3(), Mode::population), 0.0, 1e-15);
    CHECK_ABS(geary_oracle(eps3, chain3()), 0.5, 1e-15);
}

TEST_CASE("matrix forms agree with the summation oracles") {
    Rng rng(90210);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng.bounded(10));  // n <= 12
        const Eigen::VectorXd eps = zero_mean_random(n, rng);
        const ContiguityMatrix v = random_contiguity(n, rng);
        const WeightMatrix w = normalize(v);
        CHECK_ABS(sai(standardize_values(eps, Mode::population), w),
                  moran_oracle(eps, v, Mode::population), 1e-12);
        CHECK_ABS(sai(standardize_values(eps, Mode::sample), w),
                  moran_oracle(eps, v, Mode::sample), 1e-12);
        CHECK_ABS(geary_c(eps, w), geary_oracle(eps, v), 1e-12);
    }
}

TEST_CASE("pearson basics") {
    Eigen::VectorXd x(3), y(3);
    x << 1, 2, 3;
    CHECK_ABS(pearson(x, x), 1.0, 1e-15);
    CHECK_ABS(pearson(x, Eigen::VectorXd(-x)), -1.0, 1e-15);
    y << 1, 2, 4;
    CHECK_ABS(pearson(x, y), std::sqrt(27.0 / 28.0), 1e-12);
    CHECK_THROWS_AS(pearson(x, Eigen::VectorXd::Constant(3, 1.0)), ValidationError);
}

TEST_CASE("appendix lag-1 deviations form equals lag1_rho on zero-mean input") {
    Rng rng(11);
    const Eigen::VectorXd x = zero_mean_random(12, rng);
    const double mean = x.mean();
    double cross = 0.0, denom = 0.0;
    for (int t = 0; t < 12; ++t) {
        if (t > 0) cross += (x(t) - mean) * (x(t - 1) - mean);
        denom += (x(t) - mean) * (x(t) - mean);
    }
    CHECK_ABS(cross / denom, lag1_rho(x), 1e-12);
}

TEST_CASE("two-point scatter series in sample mode") {
    Eigen::VectorXd eps(2);
    eps << 1, -1;
    const ScatterSeries s = scatter_series(standardize_values(eps, Mode::sample), even_weights(2));
    CHECK_ABS(s.x(0), 0.70711, 1e-5);
    CHECK_ABS(s.y_observed(0), -0.35355, 1e-5);
    CHECK_ABS(s.x(1), -0.70711, 1e-5);
    CHECK_ABS(s.y_observed(1), 0.35355, 1e-5);
    CHECK_ABS(s.slope, -0.5, 1e-12);
}

TEST_CASE("zero-index input yields a flat trend line") {
    // e = (a, 0, -a) on the chain has I = 0 exactly
    Eigen::VectorXd eps(3);
    eps << 1, 0, -1;
    const auto e = standardize_values(eps, Mode::population);
    const ScatterSeries s = scatter_series(e, normalize(chain3()));
    CHECK(s.slope == 0.0);
    CHECK(s.y_trend.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("scatter slope equals the through-origin least-squares slope") {
    Rng rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng.bounded(20));
        const Eigen::VectorXd eps = zero_mean_random(n, rng);
        const WeightMatrix w = normalize(random_contiguity(n, rng));
        for (Mode mode : {Mode::population, Mode::sample}) {
            const auto e = standardize_values(eps, mode);
            const ScatterSeries s = scatter_series(e, w);
            const double ls_slope = s.x.dot(s.y_observed) / s.x.squaredNorm();
            CHECK_ABS(s.slope, ls_slope, 1e-12);
            CHECK((s.y_trend - s.slope * s.x).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("spatial statistics are permutation invariant while dw is not") {
    Rng rng(2029);
    const int n = 29;
    const Eigen::VectorXd eps = zero_mean_random(n, rng);
    const ContiguityMatrix v = random_contiguity(n, rng);
    const WeightMatrix w = normalize(v);
    const auto e = standardize_values(eps, Mode::sample);
    const double base_sai = sai(e, w);
    const double base_arci = arci(geary_c(eps, w));

    double dw_min = 1e300, dw_max = -1e300;
    double sai_spread = 0.0, arci_spread = 0.0;
    for (int k = 0; k < 50; ++k) {
        Rng sub = substream(555, static_cast<std::uint64_t>(k));
        const auto idx = random_indices(n, sub);
        Eigen::VectorXd peps(n);
        Eigen::MatrixXd pv(n, n);
        for (int i = 0; i < n; ++i) {
            peps(i) = eps(idx[static_cast<std::size_t>(i)]);
            for (int j = 0; j < n; ++j) {
                pv(i, j) = v.values(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
            }
        }
        ContiguityMatrix pvm{pv, pv.sum()};
        const WeightMatrix pw = normalize(pvm);
        const auto pe = standardize_values(peps, Mode::sample);
        sai_spread = std::max(sai_spread, std::abs(sai(pe, pw) - base_sai));
        arci_spread = std::max(arci_spread, std::abs(arci(geary_c(peps, pw)) - base_arci));
        const double dw = durbin_watson(peps);
        dw_min = std::min(dw_min, dw);
        dw_max = std::max(dw_max, dw);
    }
    CHECK(sai_spread < 1e-12);
    CHECK(arci_spread < 1e-12);
    CHECK(dw_max - dw_min > 0.05);
}

TEST_CASE("dw and geary are scale invariant") {
    Rng rng(606);
    const Eigen::VectorXd eps = zero_mean_random(12, rng);
    const WeightMatrix w = normalize(random_contiguity(12, rng));
    for (double c : {2.0, -3.5, 1e-6}) {
        CAPTURE(c);
        CHECK_ABS(durbin_watson(c * eps), durbin_watson(eps), 1e-12);
        CHECK_ABS(geary_c(c * eps, w), geary_c(eps, w), 1e-12);
    }
}

TEST_CASE("compute_test_report ties the statistics together") {
    Rng rng(321);
    const Eigen::VectorXd eps = zero_mean_random(10, rng);
    const ContiguityMatrix v = random_contiguity(10, rng);
    const WeightMatrix w = normalize(v);
    const WeightSpec spec = WeightSpec::parse("power:1");
    const auto e = standardize_values(eps, Mode::sample);
    const TestReport t = compute_test_report(eps, e, w, spec);
    CHECK(t.rci == 2.0 * (1.0 - t.sai));
    CHECK(t.arci == 2.0 * t.geary_c);
    CHECK_ABS(t.decomposition_check, 0.0, 1e-12);
    CHECK(t.dw >= 0.0);
    CHECK(t.dw <= 4.0);
    CHECK(t.mode == Mode::sample);
    CHECK(t.warnings.empty());
}
