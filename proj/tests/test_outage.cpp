#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ftr/outage.hpp"
#include "ftr/quad.hpp"
#include "ftr/stats.hpp"

using namespace ftr;

namespace {
const quad::QuadSpec kSpec;

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(1e-300, std::fabs(want));
}
}  // namespace

TEST_CASE("interference_cdf") {
    // l = 1 is plain exponential
    for (double y : {0.0, 0.5, 3.0})
        CHECK(interference_cdf(y, 1, 2.0) == doctest::Approx(-std::expm1(-y / 2.0)).epsilon(1e-14));
    // l = 2, unit power: 1 - e^-y (1 + y)
    double y = 5.0;
    CHECK(interference_cdf(y, 2, 1.0) ==
          doctest::Approx(1.0 - std::exp(-5.0) * 6.0).epsilon(1e-13));
    CHECK(rel_err(interference_cdf(2.0, 2, 1.0), 1.0 - 3.0 * std::exp(-2.0)) < 1e-13);
    // frozen reference: l = 3, u = 2 -> 1 - 5 e^-2
    CHECK(rel_err(interference_cdf(2.0, 3, 1.0), 0.32332358381693654053) < 1e-13);
    CHECK(interference_cdf(0.0, 4, 1.0) == 0.0);
    CHECK_THROWS_AS(interference_cdf(1.0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(interference_cdf(1.0, 1, 0.0), std::domain_error);
}

TEST_CASE("compositions") {
    auto c03 = compositions(0, 3);
    REQUIRE(c03.size() == 1);
    CHECK(c03[0] == std::vector<int>{0, 0, 0});

    auto c22 = compositions(2, 2);
    REQUIRE(c22.size() == 3);
    CHECK(c22[0] == std::vector<int>{0, 2});
    CHECK(c22[1] == std::vector<int>{1, 1});
    CHECK(c22[2] == std::vector<int>{2, 0});

    // count is binom(k + n - 1, n - 1) = binom(8, 3) = 56
    CHECK(compositions(5, 4).size() == 56);
    for (const auto& t : compositions(3, 3)) {
        int s = 0;
        for (int u : t) s += u;
        CHECK(s == 3);
    }
}

TEST_CASE("outage_a limits") {
    FtrParams ch(10.0, 2.0, 5.0, 0.5);
    // interference power negligible: outage -> F_gamma(R_th N0)
    ScenarioA weak(ch, 1, 1e-4, 1.0, 1.5);
    CHECK(rel_err(outage_a(weak, kSpec), ftr_cdf(1.5 * 1.0, ch, kSpec)) < 1e-3);
    // threshold -> 0 means no outage
    ScenarioA easy(ch, 2, 1.0, 1.0, 1e-9);
    CHECK(outage_a(easy, kSpec) < 1e-6);
    // enormous threshold means certain outage
    ScenarioA hard(ch, 2, 1.0, 1.0, 1e6);
    CHECK(outage_a(hard, kSpec) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(ScenarioA(FtrParams(1.0, 1.5, 1.0, 0.5), 1, 1.0, 1.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(ScenarioA(ch, 0, 1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("outage_a against direct SINR quadrature") {
    // P(W < R (N0 + Y)) with Y the Erlang interference sum, by integrating
    // the desired-power CDF against the interference density.
    FtrParams ch(8.0, 2.0, 4.0, 0.6);
    for (int l : {1, 2}) {
        for (double r_th : {0.5, 2.0}) {
            ScenarioA sc(ch, l, 0.7, 1.0, r_th);
            double decay = 1.0 / sc.p_i;
            double want = quad::integrate_semi_infinite(
                [&](double yv) {
                    double dens = std::pow(yv, l - 1) * std::exp(-yv / sc.p_i) /
                                  (std::tgamma(l) * std::pow(sc.p_i, l));
                    return dens * ftr_cdf(r_th * (sc.n0 + yv), ch, kSpec);
                },
                0.0, kSpec, decay);
            CHECK(rel_err(outage_a(sc, kSpec), want) < 1e-6);
        }
    }
}

TEST_CASE("outage_a monotone trends") {
    FtrParams ch(10.0, 3.0, 5.0, 0.5);
    double prev = 0.0;
    for (double r : {0.3, 1.0, 3.0, 10.0}) {
        double p = outage_a(ScenarioA(ch, 2, 0.5, 1.0, r), kSpec);
        CHECK(p > prev);
        CHECK(p <= 1.0);
        prev = p;
    }
    // more interferers, more outage
    CHECK(outage_a(ScenarioA(ch, 3, 0.5, 1.0, 1.0), kSpec) >
          outage_a(ScenarioA(ch, 1, 0.5, 1.0, 1.0), kSpec));
}

TEST_CASE("outage_b basics") {
    FtrParams ch(10.0, 1.3, 4.0, 0.5);
    // single antenna, single interferer: P = MGF(-1 / (R P_I))
    ScenarioB sc1(ch, 1, 1, 2.0, 1.5);
    CHECK(rel_err(outage_b(sc1), ftr_mgf(-1.0 / (1.5 * 2.0), ch)) < 1e-12);

    // N = 2 with one interferer still truncates at k = 0
    ScenarioB sc20(ch, 2, 1, 2.0, 1.5);
    double s0 = -1.0 / (1.5 * 2.0);
    CHECK(rel_err(outage_b(sc20), ftr_mgf(s0, ch) * ftr_mgf(s0, ch)) < 1e-12);

    // N = 2, L = 2: MGF^2 plus the k = 1 cross term
    ScenarioB sc2(ch, 2, 2, 2.0, 1.5);
    double s = -1.0 / (1.5 * 2.0);
    double want = ftr_mgf(s, ch) * ftr_mgf(s, ch) +
                  (-s) * 2.0 * ftr_mgf(s, ch) * ftr_gmgf(1, s, ch);
    CHECK(rel_err(outage_b(sc2), want) < 1e-10);

    CHECK_THROWS_AS(ScenarioB(ch, 0, 1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ScenarioB(ch, 1, 1, -1.0, 1.0), std::domain_error);
}

TEST_CASE("outage_b monotone trends") {
    FtrParams ch(10.0, 1.0, 5.0, 0.5);
    double prev = 0.0;
    for (double r : {0.1, 0.5, 2.0}) {
        double p = outage_b(ScenarioB(ch, 2, 2, 1.0, r));
        CHECK(p > prev);
        CHECK(p <= 1.0);
        prev = p;
    }
    // extra receive antennas help
    CHECK(outage_b(ScenarioB(ch, 3, 2, 1.0, 0.5)) < outage_b(ScenarioB(ch, 1, 2, 1.0, 0.5)));
    // extra interferers hurt
    CHECK(outage_b(ScenarioB(ch, 2, 3, 1.0, 0.5)) > outage_b(ScenarioB(ch, 2, 1, 1.0, 0.5)));
}

TEST_CASE("normalized_sinr") {
    FtrParams ch(12.0, 2.0, 5.0, 0.5);
    ScenarioA sc(ch, 3, 2.0, 1.5, 1.0);
    CHECK(normalized_sinr(sc) == doctest::Approx(12.0 / (3.0 * 2.0 + 1.5)).epsilon(1e-14));
}
