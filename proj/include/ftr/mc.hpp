#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ftr/models.hpp"
#include "ftr/outage.hpp"

namespace ftr::mc {

struct McConfig {
    std::uint64_t samples;
    std::uint64_t seed = 0;
    // Scheduling hint only; the RNG stream layout is fixed internally so
    // results for a given (seed, samples) never depend on this value.
    std::uint64_t batch = 1u << 16;
};

struct SpecularAmplitudes {
    double v1;
    double v2;
    double sigma2;
};

struct McEstimate {
    double estimate;
    double stderr_;
};

// Invert the (K, Delta) definitions into the two specular amplitudes,
// with sigma^2 = gamma_bar / (2 (1 + K)).
SpecularAmplitudes derive_amplitudes(const FtrParams& p);

// Draw SNR realizations from the physical channel model and feed them to
// the sink in order. Deterministic for a fixed (seed, samples).
void sample_snr(const FtrParams& p, const McConfig& cfg,
                const std::function<void(double)>& sink);

std::vector<double> sample_snr_vec(const FtrParams& p, const McConfig& cfg);

// Mean SNR estimate with compensated accumulation; returns (mean, stderr).
McEstimate mc_mean_snr(const FtrParams& p, const McConfig& cfg);

McEstimate mc_outage_a(const ScenarioA& sc, const McConfig& cfg);
McEstimate mc_outage_b(const ScenarioB& sc, const McConfig& cfg);

// Generic MGF-type estimate: mean of g(sample) over the SNR stream.
McEstimate mc_functional(const FtrParams& p, const McConfig& cfg,
                         const std::function<double(double)>& g);

// Fraction of samples <= each grid point. Grid must be sorted.
std::vector<double> empirical_cdf(const std::vector<double>& samples,
                                  const std::vector<double>& grid);

}  // namespace ftr::mc
