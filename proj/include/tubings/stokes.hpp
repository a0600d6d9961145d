#pragma once

#include <vector>

#include "tubings/asymptotics.hpp"
#include "tubings/bigfloat.hpp"

namespace tubings {

struct StokesEstimate {
    BigFloat S;
    int precision_bits = 512;
    int richardson_depth = 8;
    BigFloat residual;                     // |last stage - previous stage|
    std::vector<BigFloat> stage_residuals; // per Richardson stage, 1..depth
    bool monotone_tail = false;            // residuals decreasing over the last 3 stages
};

// Estimates the overall prefactor S of g_n ~ S alpha^{n+beta} Gamma(n+beta):
// normalizes r_n = g_n / (alpha^{n+beta} Gamma(n+beta)), whose asymptotic
// expansion is a power series in 1/n, then applies Richardson extrapolation
// of the given depth at the top of the available range.
//
// g holds coefficients indexed by power, g[0] unused. Needs at least
// depth + 10 usable terms. Throws PrecisionError when the residuals blow
// up instead of shrinking (precision too low for the requested depth).
StokesEstimate estimate_stokes(const std::vector<Rat>& g, const AsymptoticParams& params,
                               int depth = 8, int precision_bits = 512);

struct TailReport {
    int truncation = 0; // R
    std::vector<int> n;
    std::vector<BigFloat> remainder; // (g_n - sum_{k<R} Gamma_ab(n-k) S c_k) / Gamma_ab(n-R)
    bool bounded = false;            // no growth trend across the window
};

// Diagnostic check of the truncated asymptotic expansion against the
// sequence itself, over a window of indices, with an externally estimated S.
TailReport tail_check(const std::vector<Rat>& g, const AsymSeries& asym, const BigFloat& S,
                      int truncation, int window_lo, int window_hi, int precision_bits = 512);

} // namespace tubings
