#include "ftr/outage.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "ftr/stats.hpp"

namespace ftr {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

ScenarioA::ScenarioA(FtrParams channel_, int l, double p_i_, double n0_, double r_th_)
    : channel(channel_), l_interferers(l), p_i(p_i_), n0(n0_), r_th(r_th_) {
    channel.m_int();
    if (l_interferers < 1) throw std::domain_error("ScenarioA: L must be >= 1");
    if (!(p_i > 0.0)) throw std::domain_error("ScenarioA: p_i must be > 0");
    if (!(n0 > 0.0)) throw std::domain_error("ScenarioA: n0 must be > 0");
    if (!(r_th > 0.0)) throw std::domain_error("ScenarioA: r_th must be > 0");
}

ScenarioB::ScenarioB(FtrParams channel_, int n, int l, double p_i_, double r_th_hat_)
    : channel(channel_), n_antennas(n), l_interferers(l), p_i(p_i_), r_th_hat(r_th_hat_) {
    if (n_antennas < 1) throw std::domain_error("ScenarioB: N must be >= 1");
    if (l_interferers < 1) throw std::domain_error("ScenarioB: L must be >= 1");
    if (!(p_i > 0.0)) throw std::domain_error("ScenarioB: p_i must be > 0");
    if (!(r_th_hat > 0.0)) throw std::domain_error("ScenarioB: r_th_hat must be > 0");
}

double interference_cdf(double y, int l, double p_i) {
    if (y < 0.0) throw std::domain_error("interference_cdf: requires y >= 0");
    if (l < 1) throw std::domain_error("interference_cdf: requires l >= 1");
    if (!(p_i > 0.0)) throw std::domain_error("interference_cdf: requires p_i > 0");
    double u = y / p_i;
    double sum = 0.0, term = 1.0;
    for (int k = 0; k < l; ++k) {
        sum += term;
        term *= u / (k + 1.0);
    }
    return -std::expm1(-u + std::log(sum));
}

double normalized_sinr(const ScenarioA& sc) {
    return sc.channel.gamma_bar / (sc.l_interferers * sc.p_i + sc.n0);
}

double outage_a(const ScenarioA& sc, const quad::QuadSpec& spec) {
    const FtrParams& p = sc.channel;
    const int L = sc.l_interferers;
    const double R = sc.r_th;
    const double lam = R * sc.n0;  // IGMGF cut Lambda = R_th N0
    const double inv_rpi = 1.0 / (R * sc.p_i);

    // CDF term F_W(R_th N0) through the Nakagami-mixture complementary sum.
    double ccdf = quad::integrate_theta(
        [&](double theta) {
            double acc = 0.0;
            for (const MixtureTerm& t : nakagami_mixture(p, theta)) {
                double omega = t.base.gamma_hat / t.base.m_hat;
                double u = lam / omega;
                double s = 0.0, term = 1.0;
                for (int r = 0; r < t.base.m_hat; ++r) {
                    s += term;
                    term *= u / (r + 1.0);
                }
                acc += t.weight * std::exp(-u) * s;
            }
            return acc;
        },
        spec);
    double pout = 1.0 - ccdf;

    // IGMGF terms with the e^{N0/P_I} prefactor folded into the exponent:
    // it cancels against e^{-(1/Omega + 1/(R P_I)) R N0} leaving e^{-R N0/Omega}.
    std::vector<double> t_l(L);
    for (int l = 0; l < L; ++l) {
        t_l[l] = quad::integrate_theta(
            [&](double theta) {
                double acc = 0.0;
                for (const MixtureTerm& t : nakagami_mixture(p, theta)) {
                    int mi = t.base.m_hat;
                    double omega = t.base.gamma_hat / mi;
                    double beta = 1.0 / omega + inv_rpi;
                    double head = std::pow(omega, -mi) *
                                  (factorial(mi + l - 1) / factorial(mi - 1)) *
                                  std::exp(-lam / omega);
                    double inner = 0.0, lj = 1.0;  // lam^j / j!
                    for (int j = 0; j <= mi + l - 1; ++j) {
                        inner += lj * std::pow(beta, -(mi + l - j));
                        lj *= lam / (j + 1.0);
                    }
                    acc += t.weight * head * inner;
                }
                return acc;
            },
            spec);
    }

    for (int k = 0; k < L; ++k) {
        for (int l = 0; l <= k; ++l) {
            double coeff = std::pow(-sc.n0, k - l) /
                           (factorial(l) * factorial(k - l) * std::pow(sc.p_i, k) *
                            std::pow(R, l));
            pout += coeff * t_l[l];
        }
    }
    return std::clamp(pout, 0.0, 1.0);
}

std::vector<std::vector<int>> compositions(int k, int n) {
    if (k < 0 || n < 1) throw std::domain_error("compositions: requires k >= 0, n >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    // Lexicographic enumeration by recursion on position.
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, k);
    return out;
}

double outage_b(const ScenarioB& sc) {
    const int L = sc.l_interferers;
    const int N = sc.n_antennas;
    const double spi = sc.r_th_hat * sc.p_i;
    const double s = -1.0 / spi;

    std::vector<double> gm(L);
    for (int u = 0; u < L; ++u) gm[u] = ftr_gmgf(u, s, sc.channel);

    double pout = 0.0;
    for (int k = 0; k < L; ++k) {
        double sum_u = 0.0;
        for (const auto& tuple : compositions(k, N)) {
            double prod = 1.0;
            for (int u : tuple) prod *= gm[u] / factorial(u);
            sum_u += prod;
        }
        pout += std::pow(1.0 / spi, k) * sum_u;
    }
    if (pout < -1e-9 || pout > 1.0 + 1e-9)
        throw std::runtime_error("outage_b: result outside [0,1] beyond tolerance");
    return std::min(1.0, std::max(0.0, pout));
}

}  // namespace ftr
