#pragma once

#include <functional>
#include <stdexcept>

namespace ftr::quad {

enum class Rule { fixed_gauss_legendre, adaptive_subdivision };

struct QuadSpec {
    Rule rule = Rule::fixed_gauss_legendre;
    int nodes = 64;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 40;

    static QuadSpec defaults() { return {}; }
};

struct IntegrationError : std::runtime_error {
    double best_estimate;
    double error_bound;
    IntegrationError(const std::string& what, double est, double err)
        : std::runtime_error(what), best_estimate(est), error_bound(err) {}
};

using Integrand = std::function<double(double)>;

// Gauss-Legendre integral of f over [a,b] with n nodes.
double gauss_legendre(const Integrand& f, double a, double b, int n);

// Integral of f over [a,b] to the spec's tolerances. The fixed rule is
// checked by node doubling and falls back to adaptive bisection.
double integrate(const Integrand& f, double a, double b, const QuadSpec& spec);

// (1/pi) * integral of f over [0,pi].
double integrate_theta(const Integrand& f, const QuadSpec& spec);

// Integral of f over [lower, inf) for exponentially decaying f, via the
// transform x = lower - ln(1-t)/decay_hint onto t in [0,1).
double integrate_semi_infinite(const Integrand& f, double lower, const QuadSpec& spec,
                               double decay_hint = 1.0);

}  // namespace ftr::quad
