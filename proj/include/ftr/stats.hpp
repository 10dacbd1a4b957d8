#pragma once

#include <functional>

#include "ftr/models.hpp"
#include "ftr/quad.hpp"

namespace ftr {

enum class CdfPath { quadrature, phi2 };

enum class BaseKind { rician_shadowed, nakagami };

// A bounded base-distribution metric to be lifted to the FTR model by the
// theta integral. The RS kind receives the conditional RS parameters; the
// Nakagami kind receives each mixture component's parameters (the mixture
// weights are applied by the lift).
struct LiftedMetric {
    BaseKind base_kind;
    std::function<double(const RsParams&)> rs_metric;
    std::function<double(const NakagamiParams&)> nakagami_metric;
};

double ftr_pdf(double x, const FtrParams& p,
               const quad::QuadSpec& spec = quad::QuadSpec::defaults());

// Integer-m PDF through the finite Nakagami mixture.
double ftr_pdf_integer(double x, const FtrParams& p,
                       const quad::QuadSpec& spec = quad::QuadSpec::defaults());

double ftr_cdf(double x, const FtrParams& p,
               const quad::QuadSpec& spec = quad::QuadSpec::defaults(),
               CdfPath path = CdfPath::quadrature);

// Closed-form MGF (Legendre function form), s <= 0.
double ftr_mgf(double s, const FtrParams& p);

// Closed-form generalized MGF of order n at s <= 0.
double ftr_gmgf(int n, double s, const FtrParams& p);

double ftr_moment(int n, const FtrParams& p);

double ftr_imgf_lower(double s, double z, const FtrParams& p,
                      const quad::QuadSpec& spec = quad::QuadSpec::defaults(),
                      CdfPath path = CdfPath::quadrature);

double ftr_imgf_upper(double s, double z, const FtrParams& p,
                      const quad::QuadSpec& spec = quad::QuadSpec::defaults());

// Incomplete generalized MGF for integer m: theta integral of the
// closed-form Nakagami IGMGF over the mixture.
double ftr_igmgf(int n, double s, double lam, const FtrParams& p,
                 const quad::QuadSpec& spec = quad::QuadSpec::defaults());

// Nakagami IGMGF: integral of x^n e^{sx} f(x) over [lam, inf).
double nakagami_igmgf(int n, double s, double lam, const NakagamiParams& p);

double lift_rs_metric(const std::function<double(const RsParams&)>& metric, const FtrParams& p,
                      const quad::QuadSpec& spec = quad::QuadSpec::defaults());

double lift_nakagami_metric(const std::function<double(const NakagamiParams&)>& metric,
                            const FtrParams& p,
                            const quad::QuadSpec& spec = quad::QuadSpec::defaults());

double lift(const LiftedMetric& metric, const FtrParams& p,
            const quad::QuadSpec& spec = quad::QuadSpec::defaults());

}  // namespace ftr
