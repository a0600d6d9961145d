#pragma once

#include <vector>

#include "tubings/solver.hpp"

namespace tubings {

// Growth parameters of sector q: coefficients grow like
// S_q alpha_q^{n+beta_q} Gamma(n+beta_q), and the matching non-perturbative
// term is x^{-beta_q} exp(-1/(alpha_q x)).
struct AsymptoticParams {
    int q = 1;
    Rat alpha;
    Rat beta;

    bool operator==(const AsymptoticParams& o) const = default;
};

// Closed forms: alpha_q = 2 a_q and
// beta_q = (1/(2a_q)) sum_{i != q} a_i + (1/2) prod_{i != q} a_q/(a_q - a_i).
// Requires pairwise distinct entries; otherwise DegenerateSpectrumError.
AsymptoticParams asym_params(const AlphabetSpec& spec, int q);

// Coefficients of the asymptotic expansions of all layers in sector q.
// layers[j-1] holds the image of gamma_j under the asymptotic-coefficient
// derivation, as a series in x to order K; c aliases the gamma (= layer m)
// series. Normalized so the leading free coefficient (order-0 value of
// layer q) is 1; actual asymptotics carry the overall Stokes factor S_q.
struct AsymSeries {
    AsymptoticParams params;
    std::vector<std::vector<Rat>> layers;
    std::vector<Rat> c;
};

// Solves the linear derivation-image system order by order in exact
// arithmetic. The per-order coefficient matrix is bidiagonal with a zero at
// row q, so each order leaves one coefficient free and row q of the NEXT
// order pins it; the solve carries that one symbolic unknown along.
// Requires solver order >= K + m + 2 and a distinct spec.
AsymSeries asym_series(const SolverResult& solver, int q, int depth);

// Diagnostic variant with an explicit beta: any beta other than beta_q
// makes the order-x^1 equation of row q unsolvable (PreconditionError).
AsymSeries asym_series_with_beta(const SolverResult& solver, int q, int depth, const Rat& beta);

// Substitutes an AsymSeries back into the linear system, order 0..K. Test hook.
bool verify_asym_series(const SolverResult& solver, const AsymSeries& series);

// Independent route to (alpha_q, beta_q): linearize the factorized ODE
// around the formal solution, substitute x^{-beta} exp(-1/(alpha x)), and
// read the two leading orders. The leading condition forces
// alpha in {2a_1,..,2a_m}; the next order is affine in beta and pins it.
// Uses only g_2 from a direct low-order solve, never the closed forms.
std::vector<AsymptoticParams> transseries_sectors(const AlphabetSpec& spec);

// Power-series corrections (1 + u_1 x + u_2 x^2 + ...) multiplying the
// sector-q non-perturbative term, from the same linearized ODE pushed to
// higher orders. Leading coefficient normalized to 1.
std::vector<Rat> fluctuation_series(const SolverResult& solver, int q, int depth);

} // namespace tubings
