#include "ftr/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ftr::mc {

namespace {

// Samples per RNG stream. Fixed, so that the (seed, samples) -> output map
// does not depend on the scheduling batch size.
constexpr std::uint64_t kChunk = 1u << 16;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk_index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ chunk_index));
}

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// One channel draw: Eq-(1)-style physical model. Both phases are drawn
// independently even though only their difference matters.
struct ChannelSampler {
    SpecularAmplitudes amp;
    double m;
    std::gamma_distribution<double> gamma_dist;
    std::normal_distribution<double> normal_dist;
    std::uniform_real_distribution<double> phase_dist{0.0, 2.0 * std::numbers::pi};

    explicit ChannelSampler(const FtrParams& p)
        : amp(derive_amplitudes(p)),
          m(p.m),
          gamma_dist(p.m, 1.0 / p.m),
          normal_dist(0.0, std::sqrt(amp.sigma2)) {}

    double operator()(std::mt19937_64& rng) {
        double zeta = gamma_dist(rng);
        double phi1 = phase_dist(rng);
        double phi2 = phase_dist(rng);
        double x = normal_dist(rng);
        double y = normal_dist(rng);
        double sz = std::sqrt(zeta);
        double re = sz * (amp.v1 * std::cos(phi1) + amp.v2 * std::cos(phi2)) + x;
        double im = sz * (amp.v1 * std::sin(phi1) + amp.v2 * std::sin(phi2)) + y;
        return re * re + im * im;
    }
};

}  // namespace

SpecularAmplitudes derive_amplitudes(const FtrParams& p) {
    const double sigma2 = p.gamma_bar / (2.0 * (1.0 + p.k));
    const double spec_power = 2.0 * sigma2 * p.k;  // V1^2 + V2^2
    const double hi = std::sqrt(spec_power * (1.0 + p.delta));
    const double lo = std::sqrt(spec_power * (1.0 - p.delta));
    return {0.5 * (hi + lo), 0.5 * (hi - lo), sigma2};
}

void sample_snr(const FtrParams& p, const McConfig& cfg,
                const std::function<void(double)>& sink) {
    if (cfg.samples < 1) throw std::domain_error("sample_snr: samples must be >= 1");
    ChannelSampler sampler(p);
    std::uint64_t produced = 0;
    for (std::uint64_t chunk = 0; produced < cfg.samples; ++chunk) {
        auto rng = chunk_engine(cfg.seed, chunk);
        std::uint64_t n = std::min(kChunk, cfg.samples - produced);
        ChannelSampler local = sampler;  // distributions carry per-stream state
        for (std::uint64_t i = 0; i < n; ++i) sink(local(rng));
        produced += n;
    }
}

std::vector<double> sample_snr_vec(const FtrParams& p, const McConfig& cfg) {
    std::vector<double> out;
    out.reserve(cfg.samples);
    sample_snr(p, cfg, [&](double v) { out.push_back(v); });
    return out;
}

McEstimate mc_mean_snr(const FtrParams& p, const McConfig& cfg) {
    Kahan mean, sq;
    sample_snr(p, cfg, [&](double v) {
        mean.add(v);
        sq.add(v * v);
    });
    double n = static_cast<double>(cfg.samples);
    double mu = mean.sum / n;
    double var = std::max(0.0, sq.sum / n - mu * mu);
    return {mu, std::sqrt(var / n)};
}

McEstimate mc_functional(const FtrParams& p, const McConfig& cfg,
                         const std::function<double(double)>& g) {
    Kahan mean, sq;
    sample_snr(p, cfg, [&](double v) {
        double t = g(v);
        mean.add(t);
        sq.add(t * t);
    });
    double n = static_cast<double>(cfg.samples);
    double mu = mean.sum / n;
    double var = std::max(0.0, sq.sum / n - mu * mu);
    return {mu, std::sqrt(var / n)};
}

McEstimate mc_outage_a(const ScenarioA& sc, const McConfig& cfg) {
    if (cfg.samples < 1) throw std::domain_error("mc_outage_a: samples must be >= 1");
    ChannelSampler sampler(sc.channel);
    std::exponential_distribution<double> exp_dist(1.0 / sc.p_i);
    std::uint64_t produced = 0, hits = 0;
    for (std::uint64_t chunk = 0; produced < cfg.samples; ++chunk) {
        auto rng = chunk_engine(cfg.seed, chunk);
        std::uint64_t n = std::min(kChunk, cfg.samples - produced);
        ChannelSampler local = sampler;
        auto exd = exp_dist;
        for (std::uint64_t i = 0; i < n; ++i) {
            double w = local(rng);
            double y = 0.0;
            for (int j = 0; j < sc.l_interferers; ++j) y += exd(rng);
            if (w / (y + sc.n0) < sc.r_th) ++hits;
        }
        produced += n;
    }
    double nn = static_cast<double>(cfg.samples);
    double p = hits / nn;
    return {p, std::sqrt(p * (1.0 - p) / nn)};
}

McEstimate mc_outage_b(const ScenarioB& sc, const McConfig& cfg) {
    if (cfg.samples < 1) throw std::domain_error("mc_outage_b: samples must be >= 1");
    ChannelSampler sampler(sc.channel);
    std::exponential_distribution<double> exp_dist(1.0 / sc.p_i);
    std::uint64_t produced = 0, hits = 0;
    for (std::uint64_t chunk = 0; produced < cfg.samples; ++chunk) {
        auto rng = chunk_engine(cfg.seed, chunk);
        std::uint64_t n = std::min(kChunk, cfg.samples - produced);
        ChannelSampler local = sampler;
        auto exd = exp_dist;
        for (std::uint64_t i = 0; i < n; ++i) {
            double w = 0.0;
            for (int a = 0; a < sc.n_antennas; ++a) w += local(rng);
            double y = 0.0;
            for (int j = 0; j < sc.l_interferers; ++j) y += exd(rng);
            if (w / y < sc.r_th_hat) ++hits;
        }
        produced += n;
    }
    double nn = static_cast<double>(cfg.samples);
    double p = hits / nn;
    return {p, std::sqrt(p * (1.0 - p) / nn)};
}

std::vector<double> empirical_cdf(const std::vector<double>& samples,
                                  const std::vector<double>& grid) {
    if (samples.empty()) throw std::domain_error("empirical_cdf: empty sample set");
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out;
    out.reserve(grid.size());
    for (double g : grid) {
        auto it = std::upper_bound(sorted.begin(), sorted.end(), g);
        out.push_back(static_cast<double>(it - sorted.begin()) / sorted.size());
    }
    return out;
}

}  // namespace ftr::mc
