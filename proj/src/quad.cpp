#include "ftr/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace ftr::quad {

namespace {

struct GlRule {
    std::vector<double> x;  // nodes on [-1,1], positive half only
    std::vector<double> w;
};

// Nodes/weights by Newton iteration on the Legendre recurrence.
GlRule compute_gl(int n) {
    GlRule r;
    int half = (n + 1) / 2;
    r.x.resize(half);
    r.w.resize(half);
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GlRule& gl_rule(int n) {
    static std::map<int, GlRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

double adaptive(const Integrand& f, double a, double b, int n, double rel_tol, double abs_tol,
                int depth_left, double whole_scale) {
    double coarse = gauss_legendre(f, a, b, n);
    double mid = 0.5 * (a + b);
    double left = gauss_legendre(f, a, mid, n);
    double right = gauss_legendre(f, mid, b, n);
    double fine = left + right;
    double err = std::fabs(fine - coarse);
    double scale = std::max(std::fabs(fine), whole_scale);
    if (err <= rel_tol * scale || err <= abs_tol) return fine;
    if (depth_left <= 0)
        throw IntegrationError("quad: adaptive subdivision limit reached", fine, err);
    return adaptive(f, a, mid, n, rel_tol, abs_tol, depth_left - 1, whole_scale) +
           adaptive(f, mid, b, n, rel_tol, abs_tol, depth_left - 1, whole_scale);
}

}  // namespace

double gauss_legendre(const Integrand& f, double a, double b, int n) {
    const GlRule& r = gl_rule(n);
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double sum = 0.0;
    bool odd_center = (n % 2) != 0;
    // Fixed symmetric order keeps results deterministic.
    for (size_t i = 0; i < r.x.size(); ++i) {
        if (odd_center && i + 1 == r.x.size()) {
            sum += r.w[i] * f(c);
        } else {
            sum += r.w[i] * (f(c - h * r.x[i]) + f(c + h * r.x[i]));
        }
    }
    return sum * h;
}

double integrate(const Integrand& f, double a, double b, const QuadSpec& spec) {
    if (spec.nodes < 2) throw std::domain_error("quad: nodes must be >= 2");
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
        throw std::domain_error("quad: tolerances must be positive");
    if (a == b) return 0.0;

    if (spec.rule == Rule::fixed_gauss_legendre) {
        double coarse = gauss_legendre(f, a, b, spec.nodes);
        double fine = gauss_legendre(f, a, b, 2 * spec.nodes);
        double err = std::fabs(fine - coarse);
        if (err <= spec.rel_tol * std::fabs(fine) || err <= spec.abs_tol) return fine;
        // fall through to adaptive refinement
    }
    double scale = std::fabs(gauss_legendre(f, a, b, spec.nodes));
    return adaptive(f, a, b, spec.nodes, spec.rel_tol, spec.abs_tol, spec.max_subdivisions, scale);
}

double integrate_theta(const Integrand& f, const QuadSpec& spec) {
    return integrate(f, 0.0, std::numbers::pi, spec) / std::numbers::pi;
}

double integrate_semi_infinite(const Integrand& f, double lower, const QuadSpec& spec,
                               double decay_hint) {
    if (lower < 0.0) throw std::domain_error("quad: lower must be >= 0");
    if (!(decay_hint > 0.0)) throw std::domain_error("quad: decay_hint must be > 0");
    const double alpha = decay_hint;
    auto g = [&](double t) {
        double x = lower - std::log1p(-t) / alpha;
        return f(x) / (alpha * (1.0 - t));
    };
    // Stop just short of t = 1; the truncated mass corresponds to the tail
    // beyond x = lower + 41/alpha and is negligible at our tolerances.
    const double t_hi = 1.0 - 1e-18;
    QuadSpec s = spec;
    s.rule = Rule::adaptive_subdivision;
    return integrate(g, 0.0, t_hi, s);
}

}  // namespace ftr::quad
