#include "ftr/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ftr/specfun.hpp"

namespace ftr {

namespace {

double binom(int n, int k) {
    double b = 1.0;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// x^n with the 0^0 = 1 convention required by the binomial identity.
double pow0(double x, int n) {
    if (n == 0) return 1.0;
    return std::pow(x, n);
}

}  // namespace

FtrParams::FtrParams(double gamma_bar_, double m_, double k_, double delta_)
    : gamma_bar(gamma_bar_), m(m_), k(k_), delta(delta_) {
    if (!(gamma_bar > 0.0)) throw std::domain_error("FtrParams: gamma_bar must be > 0");
    if (!(m > 0.0)) throw std::domain_error("FtrParams: m must be > 0");
    if (k < 0.0) throw std::domain_error("FtrParams: k must be >= 0");
    if (delta < 0.0 || delta > 1.0) throw std::domain_error("FtrParams: delta must be in [0,1]");
}

int FtrParams::m_int() const {
    double r = std::round(m);
    if (std::fabs(m - r) > 1e-9 || r < 1.0)
        throw std::domain_error("FtrParams: operation requires integer m >= 1");
    return static_cast<int>(r);
}

RsParams::RsParams(double gamma_bar_, double m_, double k_r_)
    : gamma_bar(gamma_bar_), m(m_), k_r(k_r_) {
    if (!(gamma_bar > 0.0)) throw std::domain_error("RsParams: gamma_bar must be > 0");
    if (!(m > 0.0)) throw std::domain_error("RsParams: m must be > 0");
    if (k_r < 0.0) throw std::domain_error("RsParams: k_r must be >= 0");
}

NakagamiParams::NakagamiParams(double gamma_hat_, int m_hat_)
    : gamma_hat(gamma_hat_), m_hat(m_hat_) {
    if (!(gamma_hat > 0.0)) throw std::domain_error("NakagamiParams: gamma_hat must be > 0");
    if (m_hat < 1) throw std::domain_error("NakagamiParams: m_hat must be >= 1");
}

double rs_pdf(double x, const RsParams& p) {
    if (x < 0.0) throw std::domain_error("rs_pdf: requires x >= 0");
    const double decay = (1.0 + p.k_r) * x / p.gamma_bar;
    if (p.k_r == 0.0) return std::exp(-decay) / p.gamma_bar;
    const double z = p.k_r * (1.0 + p.k_r) * x / (p.gamma_bar * (p.m + p.k_r));
    double pre = std::pow(p.m / (p.m + p.k_r), p.m) * (1.0 + p.k_r) / p.gamma_bar;
    return pre * specfun::hyp1f1_scaled(p.m, 1.0, z, decay);
}

double nakagami_pdf(double x, const NakagamiParams& p) {
    if (x < 0.0) throw std::domain_error("nakagami_pdf: requires x >= 0");
    const double r = p.m_hat / p.gamma_hat;
    if (p.m_hat == 1) return r * std::exp(-x * r);
    if (x == 0.0) return 0.0;
    double lf = p.m_hat * std::log(r) + (p.m_hat - 1) * std::log(x) -
                specfun::ln_gamma(static_cast<double>(p.m_hat)) - x * r;
    return std::exp(lf);
}

double rs_mgf(double s, const RsParams& p) {
    if (s > 0.0) throw std::domain_error("rs_mgf: requires s <= 0");
    const double g1k = p.gamma_bar / (1.0 + p.k_r);
    double num = std::pow(p.m, p.m) * std::pow(1.0 - g1k * s, p.m - 1.0);
    double den = std::pow(p.m - (p.m + p.k_r) * g1k * s, p.m);
    return num / den;
}

RsParams conditional_rs(const FtrParams& p, double theta) {
    const double kt = std::max(0.0, p.k * (1.0 + p.delta * std::cos(theta)));
    const double g = p.gamma_bar / (1.0 + p.k) * (1.0 + kt);
    return RsParams(g, p.m, kt);
}

std::vector<MixtureTerm> nakagami_mixture(const FtrParams& p, double theta) {
    const int m = p.m_int();
    const double kt = std::max(0.0, p.k * (1.0 + p.delta * std::cos(theta)));
    const double omega = p.gamma_bar / (1.0 + p.k) * (m + kt) / m;
    std::vector<MixtureTerm> terms;
    terms.reserve(m);
    const double den = pow0(m + kt, m - 1);
    for (int i = 0; i < m; ++i) {
        double w = binom(m - 1, i) * pow0(static_cast<double>(m), i) * pow0(kt, m - i - 1) / den;
        terms.push_back({w, NakagamiParams((m - i) * omega, m - i)});
    }
    return terms;
}

}  // namespace ftr
