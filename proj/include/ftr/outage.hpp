#pragma once

#include <vector>

#include "ftr/models.hpp"
#include "ftr/quad.hpp"

namespace ftr {

// CCI plus background noise, desired signal FTR with integer m.
// channel.gamma_bar is read as the mean received power W_bar.
struct ScenarioA {
    FtrParams channel;
    int l_interferers;
    double p_i;
    double n0;
    double r_th;  // SINR threshold, linear

    ScenarioA(FtrParams channel_, int l, double p_i_, double n0_, double r_th_);
};

// Interference-limited MRC with N antennas, arbitrary m.
struct ScenarioB {
    FtrParams channel;  // per-antenna, gamma_bar = W_bar
    int n_antennas;
    int l_interferers;
    double p_i;
    double r_th_hat;  // SIR threshold, linear

    ScenarioB(FtrParams channel_, int n, int l, double p_i_, double r_th_hat_);
};

// CDF of the summed power of l i.i.d. Rayleigh interferers (Erlang).
double interference_cdf(double y, int l, double p_i);

double outage_a(const ScenarioA& sc, const quad::QuadSpec& spec = quad::QuadSpec::defaults());

// All n-tuples of nonnegative integers summing to k, lexicographic.
std::vector<std::vector<int>> compositions(int k, int n);

double outage_b(const ScenarioB& sc);

double normalized_sinr(const ScenarioA& sc);

}  // namespace ftr
