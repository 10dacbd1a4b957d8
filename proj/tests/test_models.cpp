#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ftr/models.hpp"
#include "ftr/quad.hpp"

using namespace ftr;

namespace {
const quad::QuadSpec kSpec;
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(FtrParams(0.0, 1.0, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(FtrParams(1.0, -1.0, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(FtrParams(1.0, 1.0, -0.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(FtrParams(1.0, 1.0, 1.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(FtrParams(1.0, 2.5, 1.0, 0.5).m_int(), std::domain_error);
    CHECK(FtrParams(1.0, 3.0, 1.0, 0.5).m_int() == 3);
    // Remark-1 identity: gamma_bar = 2 sigma^2 (1 + K)
    FtrParams p(2.5, 1.7, 4.0, 0.3);
    CHECK(2.0 * p.sigma2() * (1.0 + p.k) == doctest::Approx(p.gamma_bar).epsilon(1e-14));
}

TEST_CASE("rs_pdf basics") {
    // no specular power -> exponential SNR
    RsParams exp_p(2.0, 1.3, 0.0);
    for (double x : {0.0, 0.7, 5.0})
        CHECK(rs_pdf(x, exp_p) == doctest::Approx(std::exp(-x / 2.0) / 2.0).epsilon(1e-13));
    // value at the origin
    RsParams p(2.0, 2.7, 5.0);
    double want0 = std::pow(p.m / (p.m + p.k_r), p.m) * (1.0 + p.k_r) / p.gamma_bar;
    CHECK(rs_pdf(0.0, p) == doctest::Approx(want0).epsilon(1e-12));
    // normalization via semi-infinite quadrature (true tail rate)
    double rate = p.m * (1.0 + p.k_r) / (p.gamma_bar * (p.m + p.k_r));
    double mass = quad::integrate_semi_infinite([&](double x) { return rs_pdf(x, p); }, 0.0,
                                                kSpec, rate);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("rs_pdf normalization over a parameter grid") {
    for (double m : {0.5, 1.0, 2.7, 5.0}) {
        for (double kr : {0.0, 1.0, 10.0}) {
            RsParams p(1.5, m, kr);
            double rate = m * (1.0 + kr) / (p.gamma_bar * (m + kr));
            double mass = quad::integrate_semi_infinite([&](double x) { return rs_pdf(x, p); },
                                                        0.0, kSpec, rate);
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("nakagami_pdf basics") {
    NakagamiParams e(1.7, 1);
    CHECK(nakagami_pdf(0.4, e) == doctest::Approx(std::exp(-0.4 / 1.7) / 1.7).epsilon(1e-13));
    CHECK(nakagami_pdf(0.0, NakagamiParams(1.0, 2)) == 0.0);
    NakagamiParams p(3.0, 4);
    double mean = quad::integrate_semi_infinite([&](double x) { return x * nakagami_pdf(x, p); },
                                                0.0, kSpec, p.m_hat / p.gamma_hat);
    CHECK(mean == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("rs_mgf") {
    RsParams p(2.0, 1.8, 4.0);
    CHECK(rs_mgf(0.0, p) == 1.0);
    RsParams ray(2.0, 1.8, 0.0);
    for (double s : {-0.2, -1.0, -7.0})
        CHECK(rs_mgf(s, ray) == doctest::Approx(1.0 / (1.0 - 2.0 * s)).epsilon(1e-13));
    // quadrature oracle
    double s = -0.5;
    double want = quad::integrate_semi_infinite(
        [&](double x) { return std::exp(s * x) * rs_pdf(x, p); }, 0.0, kSpec,
        p.m * (1.0 + p.k_r) / (p.gamma_bar * (p.m + p.k_r)) - s);
    CHECK(rs_mgf(s, p) == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("nakagami_mixture structure") {
    // m = 1: single exponential component with unit weight
    FtrParams p1(2.0, 1.0, 5.0, 0.4);
    auto terms1 = nakagami_mixture(p1, 1.2);
    REQUIRE(terms1.size() == 1);
    CHECK(terms1[0].weight == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(terms1[0].base.m_hat == 1);

    // Delta = 0: theta-independent weights B_j with Omega_B
    FtrParams p0(2.0, 3.0, 4.0, 0.0);
    auto t_a = nakagami_mixture(p0, 0.3);
    auto t_b = nakagami_mixture(p0, 2.9);
    double omega_b = p0.gamma_bar / (1.0 + p0.k) * (p0.m + p0.k) / p0.m;
    for (size_t i = 0; i < t_a.size(); ++i) {
        CHECK(t_a[i].weight == doctest::Approx(t_b[i].weight).epsilon(1e-13));
        int mi = 3 - static_cast<int>(i);
        CHECK(t_a[i].base.m_hat == mi);
        CHECK(t_a[i].base.gamma_hat == doctest::Approx(mi * omega_b).epsilon(1e-13));
    }

    CHECK_THROWS_AS(nakagami_mixture(FtrParams(1.0, 2.5, 1.0, 0.5), 0.1), std::domain_error);
}

TEST_CASE("mixture weights sum to one") {
    FtrParams p(1.0, 3.0, 10.0, 0.6);
    for (double theta : {0.0, 1.0, 2.2, 3.14159}) {
        double sum = 0.0;
        for (const auto& t : nakagami_mixture(p, theta)) {
            CHECK(t.weight >= 0.0);
            sum += t.weight;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    // K = 0 edge: the 0^0 term carries all the weight
    FtrParams pk0(1.0, 4.0, 0.0, 0.6);
    double sum = 0.0;
    for (const auto& t : nakagami_mixture(pk0, 0.7)) sum += t.weight;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("integer-m RS decomposes into Nakagami components") {
    for (int m : {1, 2, 3, 5}) {
        RsParams rs(1.3, m, 6.0);
        FtrParams helper(1.3, m, 6.0, 0.0);  // Delta=0 mixture equals the B_j set
        auto terms = nakagami_mixture(helper, 0.0);
        for (double x : {0.0, 0.2, 1.0, 4.0, 12.0}) {
            double mix = 0.0;
            for (const auto& t : terms) mix += t.weight * nakagami_pdf(x, t.base);
            CHECK(mix == doctest::Approx(rs_pdf(x, rs)).epsilon(1e-10));
        }
    }
}
