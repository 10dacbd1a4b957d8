#pragma once

#include <vector>

namespace ftr {

// Channel description: mean SNR gamma_bar, fluctuation severity m,
// specular-to-diffuse ratio k, specular similarity delta in [0,1].
// Es/N0 is fixed to 1, so the diffuse power is 2*sigma2() and
// gamma_bar = 2 sigma^2 (1 + k).
struct FtrParams {
    double gamma_bar;
    double m;
    double k;
    double delta;

    FtrParams(double gamma_bar_, double m_, double k_, double delta_);
    double sigma2() const { return gamma_bar / (2.0 * (1.0 + k)); }
    // Integer-m accessor; throws std::domain_error when m is not integral.
    int m_int() const;
};

// Squared Rician Shadowed parameter set.
struct RsParams {
    double gamma_bar;
    double m;
    double k_r;

    RsParams(double gamma_bar_, double m_, double k_r_);
};

// Squared Nakagami-m parameter set (integer shape).
struct NakagamiParams {
    double gamma_hat;
    int m_hat;

    NakagamiParams(double gamma_hat_, int m_hat_);
};

// One (weight, base parameters) element of the integer-m finite mixture.
struct MixtureTerm {
    double weight;
    NakagamiParams base;
};

double rs_pdf(double x, const RsParams& p);
double nakagami_pdf(double x, const NakagamiParams& p);
double rs_mgf(double s, const RsParams& p);

// The m-term Nakagami mixture of the FTR model conditioned on theta:
// term i has weight C_i(theta) and base K((m-i)*Omega(theta), m-i).
std::vector<MixtureTerm> nakagami_mixture(const FtrParams& p, double theta);

// Conditional RS parameters of the FTR model given theta. The ratio
// gamma_bar/(1+K) is held invariant under the K sweep.
RsParams conditional_rs(const FtrParams& p, double theta);

}  // namespace ftr
