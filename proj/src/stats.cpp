#include "ftr/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ftr/specfun.hpp"

namespace ftr {

namespace {

double binom(int n, int k) {
    double b = 1.0;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// pow with the 0^0 = 1 convention.
double pow0(double x, int n) {
    if (n == 0) return 1.0;
    return std::pow(x, n);
}

}  // namespace

double lift_rs_metric(const std::function<double(const RsParams&)>& metric, const FtrParams& p,
                      const quad::QuadSpec& spec) {
    return quad::integrate_theta([&](double theta) { return metric(conditional_rs(p, theta)); },
                                 spec);
}

double lift_nakagami_metric(const std::function<double(const NakagamiParams&)>& metric,
                            const FtrParams& p, const quad::QuadSpec& spec) {
    p.m_int();
    return quad::integrate_theta(
        [&](double theta) {
            double acc = 0.0;
            for (const MixtureTerm& t : nakagami_mixture(p, theta))
                acc += t.weight * metric(t.base);
            return acc;
        },
        spec);
}

double lift(const LiftedMetric& metric, const FtrParams& p, const quad::QuadSpec& spec) {
    if (metric.base_kind == BaseKind::rician_shadowed)
        return lift_rs_metric(metric.rs_metric, p, spec);
    return lift_nakagami_metric(metric.nakagami_metric, p, spec);
}

double ftr_pdf(double x, const FtrParams& p, const quad::QuadSpec& spec) {
    if (x < 0.0) throw std::domain_error("ftr_pdf: requires x >= 0");
    if (p.k == 0.0) return std::exp(-x / p.gamma_bar) / p.gamma_bar;
    return lift_rs_metric([&](const RsParams& rs) { return rs_pdf(x, rs); }, p, spec);
}

double ftr_pdf_integer(double x, const FtrParams& p, const quad::QuadSpec& spec) {
    if (x < 0.0) throw std::domain_error("ftr_pdf_integer: requires x >= 0");
    return lift_nakagami_metric([&](const NakagamiParams& nk) { return nakagami_pdf(x, nk); }, p,
                                spec);
}

double ftr_cdf(double x, const FtrParams& p, const quad::QuadSpec& spec, CdfPath path) {
    if (x < 0.0) throw std::domain_error("ftr_cdf: requires x >= 0");
    if (x == 0.0) return 0.0;

    if (path == CdfPath::phi2) {
        const double a1 = -(1.0 + p.k) * x / p.gamma_bar;
        return quad::integrate_theta(
            [&](double theta) {
                double kt = std::max(0.0, p.k * (1.0 + p.delta * std::cos(theta)));
                double a2 = -(1.0 + p.k) * p.m * x / (p.gamma_bar * (p.m + kt));
                double pre =
                    (1.0 + p.k) * x / p.gamma_bar * std::pow(p.m / (p.m + kt), p.m);
                return pre * specfun::phi2_neg(1.0 - p.m, p.m, 2.0, a1, a2);
            },
            spec);
    }

    // Production path: adaptive quadrature of the PDF. Integrate per
    // gamma_bar-scale segment so deep tails do not starve the subdivision.
    auto f = [&](double t) { return ftr_pdf(t, p, spec); };
    double acc = 0.0;
    double lo = 0.0;
    const double seg = std::max(p.gamma_bar, x / 64.0);
    while (lo < x) {
        double hi = std::min(x, lo + 4.0 * seg);
        acc += quad::integrate(f, lo, hi, spec);
        lo = hi;
    }
    return std::min(acc, 1.0);
}

double ftr_mgf(double s, const FtrParams& p) {
    if (s > 0.0) throw std::domain_error("ftr_mgf: requires s <= 0");
    const double gs = p.gamma_bar * s;
    const double mk = p.m + p.k;
    const double kd = p.k * p.delta;
    const double c0 = (1.0 + p.k) * p.m;
    const double r = (mk * mk - kd * kd) * gs * gs - 2.0 * c0 * mk * gs + c0 * c0;
    const double arg = std::max(1.0, (c0 - mk * gs) / std::sqrt(r));
    // The theta integral has the form (1/pi) int dx / (a + b cos x)^m, so the
    // closed form carries R^(-m/2), which also gives the required MGF(0) = 1.
    return (1.0 + p.k) * std::pow(p.m, p.m) * std::pow(1.0 + p.k - gs, p.m - 1.0) *
           std::pow(r, -0.5 * p.m) * specfun::legendre_p(p.m - 1.0, arg);
}

double ftr_gmgf(int n, double s, const FtrParams& p) {
    if (n < 0) throw std::domain_error("ftr_gmgf: requires n >= 0");
    if (s > 0.0) throw std::domain_error("ftr_gmgf: requires s <= 0");
    const double gs = p.gamma_bar * s;
    const double K = p.k;
    const double D = p.delta;
    const double m = p.m;
    const double denom = m * (1.0 + K) - (m + K - K * D) * gs;
    const double z = 2.0 * K * D * gs / denom;  // <= 0 for s <= 0
    const double sqrt_pi = std::sqrt(std::numbers::pi);

    double outer = 0.0;
    for (int l = n; l >= 0; --l) {
        double inner = 0.0;
        for (int q = l; q >= 0; --q) {
            double wq = binom(l, q) * pow0(1.0 - D, l - q) * pow0(2.0 * D, q);
            if (wq == 0.0) continue;
            wq *= std::exp(specfun::ln_gamma(0.5 + q) - specfun::ln_gamma(1.0 + q)) / sqrt_pi;
            inner += wq * specfun::hyp2f1_nonpos(m + l, 0.5 + q, q + 1.0, z);
        }
        double wl = binom(n, l) * specfun::pochhammer(m, l) / factorial(l) *
                    std::pow(1.0 + K, l + 1) * pow0(K, l) / std::pow(denom, m + l);
        outer += wl * inner;
    }
    return factorial(n) * std::pow(m, m) * std::pow(1.0 + K - gs, m - n - 1.0) *
           std::pow(p.gamma_bar, n) * outer;
}

double ftr_moment(int n, const FtrParams& p) { return ftr_gmgf(n, 0.0, p); }

double ftr_imgf_lower(double s, double z, const FtrParams& p, const quad::QuadSpec& spec,
                      CdfPath path) {
    if (z < 0.0) throw std::domain_error("ftr_imgf_lower: requires z >= 0");
    if (s > 0.0) throw std::domain_error("ftr_imgf_lower: requires s <= 0");
    if (z == 0.0) return 0.0;

    if (path == CdfPath::phi2) {
        const double a1 = (s - (1.0 + p.k) / p.gamma_bar) * z;
        return quad::integrate_theta(
            [&](double theta) {
                double kt = std::max(0.0, p.k * (1.0 + p.delta * std::cos(theta)));
                double a2 = (s - p.m * (1.0 + p.k) / (p.gamma_bar * (p.m + kt))) * z;
                double pre = std::pow(p.m, p.m) * (1.0 + p.k) * z /
                             (p.gamma_bar * std::pow(p.m + kt, p.m));
                return pre * specfun::phi2_neg(1.0 - p.m, p.m, 2.0, a1, a2);
            },
            spec);
    }

    auto f = [&](double t) { return std::exp(s * t) * ftr_pdf(t, p, spec); };
    double acc = 0.0;
    double lo = 0.0;
    const double seg = std::max(p.gamma_bar, z / 64.0);
    while (lo < z) {
        double hi = std::min(z, lo + 4.0 * seg);
        acc += quad::integrate(f, lo, hi, spec);
        lo = hi;
    }
    return acc;
}

double ftr_imgf_upper(double s, double z, const FtrParams& p, const quad::QuadSpec& spec) {
    return ftr_mgf(s, p) - ftr_imgf_lower(s, z, p, spec);
}

double nakagami_igmgf(int n, double s, double lam, const NakagamiParams& p) {
    if (n < 0 || lam < 0.0) throw std::domain_error("nakagami_igmgf: bad arguments");
    const double rate = p.m_hat / p.gamma_hat;
    const double beta = rate - s;
    double head = std::pow(rate, p.m_hat) / std::pow(beta, p.m_hat + n) *
                  (factorial(p.m_hat + n - 1) / factorial(p.m_hat - 1));
    double tail = 0.0;
    double term = 1.0;
    for (int j = 0; j <= p.m_hat + n - 1; ++j) {
        tail += term;
        term *= beta * lam / (j + 1.0);
    }
    return head * std::exp(-beta * lam) * tail;
}

double ftr_igmgf(int n, double s, double lam, const FtrParams& p, const quad::QuadSpec& spec) {
    if (n < 0) throw std::domain_error("ftr_igmgf: requires n >= 0");
    if (lam < 0.0) throw std::domain_error("ftr_igmgf: requires lam >= 0");
    if (s > 0.0) throw std::domain_error("ftr_igmgf: requires s <= 0");
    return lift_nakagami_metric(
        [&](const NakagamiParams& nk) { return nakagami_igmgf(n, s, lam, nk); }, p, spec);
}

}  // namespace ftr
