#pragma once

namespace ftr::specfun {

// Result of a scalar evaluation that may exceed double range. When
// log_scaled is true, value holds ln|result| and sign carries the sign.
struct EvalResult {
    double value = 0.0;
    bool log_scaled = false;
    int sign = 1;
};

// Reliable region for the direct Phi2 double series: both |x| and |y|
// must stay below this bound or the alternating terms swamp the result.
// Calibrated against a long-double oracle; see tests.
inline constexpr double kPhi2ReliableBound = 20.0;

double ln_gamma(double x);

double pochhammer(double a, int n);

// exp(-decay) * 1F1(a;b;z) for z >= 0, decay >= 0, without intermediate
// overflow. Requires a > 0 and b not a non-positive integer.
double hyp1f1_scaled(double a, double b, double z, double decay);

// 1F1(a;b;z) for nonnegative z, a > 0; switches to log scale on overflow.
EvalResult hyp1f1_pos(double a, double b, double z);

// 2F1(a,b;c;z) for z <= 0. Finite sum when a (or b) is a non-positive
// integer, otherwise a Pfaff transformation to an all-positive series.
double hyp2f1_nonpos(double a, double b, double c, double z);

// Legendre function of the first kind P_v(x) for x >= 1, v > -1,
// via P_v(x) = 2F1(-v, v+1; 1; (1-x)/2).
double legendre_p(double v, double x);

// Humbert Phi2(b1,b2;c;x,y) by its double series, for x,y <= 0 inside
// the reliable region. Throws std::range_error outside it.
double phi2_neg(double b1, double b2, double c, double x, double y);

}  // namespace ftr::specfun
