#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ftr/mc.hpp"
#include "ftr/stats.hpp"

using namespace ftr;

namespace {
const quad::QuadSpec kSpec;
}

TEST_CASE("derive_amplitudes special cases") {
    // Delta = 1: equal rays
    auto a1 = mc::derive_amplitudes(FtrParams(2.0, 1.5, 6.0, 1.0));
    CHECK(a1.v1 == doctest::Approx(a1.v2).epsilon(1e-12));
    // Delta = 0: one ray vanishes
    auto a0 = mc::derive_amplitudes(FtrParams(2.0, 1.5, 6.0, 0.0));
    CHECK(a0.v2 == doctest::Approx(0.0));
    CHECK(a0.v1 * a0.v1 == doctest::Approx(2.0 * a0.sigma2 * 6.0).epsilon(1e-12));
    // K = 0: no specular power at all
    auto ak = mc::derive_amplitudes(FtrParams(2.0, 1.5, 0.0, 0.5));
    CHECK(ak.v1 == doctest::Approx(0.0));
    CHECK(ak.v2 == doctest::Approx(0.0));
}

TEST_CASE("derive_amplitudes roundtrip") {
    for (double k : {0.5, 3.0, 20.0}) {
        for (double d : {0.0, 0.2, 0.8, 1.0}) {
            FtrParams p(1.7, 2.0, k, d);
            auto a = mc::derive_amplitudes(p);
            double s2 = a.v1 * a.v1 + a.v2 * a.v2;
            CHECK(s2 / (2.0 * a.sigma2) == doctest::Approx(k).epsilon(1e-12));
            if (k > 0.0)
                CHECK(2.0 * a.v1 * a.v2 / s2 == doctest::Approx(d).epsilon(1e-12));
            CHECK(a.sigma2 == doctest::Approx(p.sigma2()).epsilon(1e-14));
        }
    }
}

TEST_CASE("sampling is deterministic and batch independent") {
    FtrParams p(1.0, 1.8, 5.0, 0.5);
    mc::McConfig a{10000, 42, 1u << 16};
    mc::McConfig b{10000, 42, 123};  // odd batch size, same stream expected
    auto va = mc::sample_snr_vec(p, a);
    auto vb = mc::sample_snr_vec(p, b);
    REQUIRE(va.size() == 10000);
    CHECK(va == vb);

    mc::McConfig c{10000, 43, 1u << 16};
    CHECK(mc::sample_snr_vec(p, c) != va);
}

TEST_CASE("mc_mean_snr recovers gamma_bar") {
    for (double m : {0.8, 1.0, 3.0}) {
        FtrParams p(2.5, m, 8.0, 0.6);
        auto est = mc::mc_mean_snr(p, {200000, 7});
        CHECK(std::fabs(est.estimate - 2.5) < 4.0 * est.stderr_);
        CHECK(est.stderr_ > 0.0);
        CHECK(est.stderr_ < 0.05);
    }
}

TEST_CASE("K = 0 samples follow the exponential law") {
    FtrParams p(2.0, 1.5, 0.0, 0.3);
    auto v = mc::sample_snr_vec(p, {100000, 11});
    std::vector<double> grid{0.2, 0.5, 1.0, 2.0, 4.0, 8.0};
    auto emp = mc::empirical_cdf(v, grid);
    // DKW bound at alpha ~ 1e-6: eps = sqrt(ln(2/alpha) / (2n))
    double eps = std::sqrt(std::log(2.0 / 1e-6) / (2.0 * v.size()));
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(std::fabs(emp[i] - (-std::expm1(-grid[i] / 2.0))) < eps);
}

TEST_CASE("empirical CDF matches the analytic CDF") {
    FtrParams p(1.0, 2.0, 10.0, 0.7);
    auto v = mc::sample_snr_vec(p, {200000, 3});
    std::vector<double> grid{0.05, 0.2, 0.5, 1.0, 2.0};
    auto emp = mc::empirical_cdf(v, grid);
    double eps = std::sqrt(std::log(2.0 / 1e-6) / (2.0 * v.size()));
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(std::fabs(emp[i] - ftr_cdf(grid[i], p, kSpec)) < eps);
}

TEST_CASE("empirical_cdf basics") {
    std::vector<double> s{1.0, 2.0, 3.0, 4.0};
    auto e = mc::empirical_cdf(s, {0.5, 1.0, 2.5, 4.0, 9.0});
    CHECK(e[0] == 0.0);
    CHECK(e[1] == doctest::Approx(0.25));
    CHECK(e[2] == doctest::Approx(0.5));
    CHECK(e[3] == doctest::Approx(1.0));
    CHECK(e[4] == 1.0);
}

TEST_CASE("mc_functional estimates the MGF") {
    FtrParams p(1.0, 1.6, 4.0, 0.4);
    double s = -0.8;
    auto est = mc::mc_functional(p, {200000, 17}, [&](double x) { return std::exp(s * x); });
    CHECK(std::fabs(est.estimate - ftr_mgf(s, p)) < 4.0 * est.stderr_);
}

TEST_CASE("mc_outage_a agrees with the analytic expression") {
    FtrParams ch(8.0, 2.0, 4.0, 0.6);
    ScenarioA sc(ch, 2, 0.7, 1.0, 1.0);
    auto est = mc::mc_outage_a(sc, {400000, 5});
    double want = outage_a(sc, kSpec);
    CHECK(std::fabs(est.estimate - want) < 4.0 * est.stderr_);
    CHECK(est.stderr_ < 0.01);
}

TEST_CASE("mc_outage_b agrees with the analytic expression") {
    FtrParams ch(10.0, 1.3, 4.0, 0.5);
    ScenarioB sc(ch, 2, 2, 1.0, 0.8);
    auto est = mc::mc_outage_b(sc, {400000, 9});
    double want = outage_b(sc);
    CHECK(std::fabs(est.estimate - want) < 4.0 * est.stderr_);
}
