#pragma once

#include <string>
#include <vector>

#include "tubings/alphabet.hpp"
#include "tubings/power_series.hpp"

namespace tubings {

// The full system solved here is
//
//   gamma = x + sum_k L_k,
//   L_j   = a_j * P * Op(x + sum_{i<=j} L_i),
//
// where the full model has prefactor P = gamma and operator Op = 2x d/dx - 1.
// The named approximations tweak exactly those two ingredients:
enum class Variant { Full, Rainbow, Chain, Odd, Chord };
//   Rainbow: P = gamma, Op = id        (single insertion place)
//   Chain:   P = x,     Op = x d/dx    (insert single vertices at the root)
//   Odd:     P = gamma, Op = x d/dx    (odd insertion places only)
//   Chord:   P = x,     Op = 2x d/dx-1 (insert single vertices anywhere)

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct SolverResult {
    AlphabetSpec spec;
    Variant variant = Variant::Full;
    int order = 0;
    IntSeries gamma;
    std::vector<IntSeries> layers; // L_1..L_m

    // gamma_j = x + sum_{i<=j} L_i; gamma_partial(0) = x, gamma_partial(m) = gamma.
    IntSeries gamma_partial(int j) const;
};

// Unique power-series solution of the system, coefficient by coefficient.
// The x^n coefficient of each L_j only needs data of order < n (the leading
// factor starts at x^1 and the operator does not raise the order), so the
// recursion is well founded. All coefficients stay integral.
SolverResult solve(const AlphabetSpec& spec, int order, Variant variant = Variant::Full);

inline SolverResult solve_gamma(const AlphabetSpec& spec, int order) { return solve(spec, order, Variant::Full); }
inline SolverResult solve_rainbow(const AlphabetSpec& spec, int order) { return solve(spec, order, Variant::Rainbow); }
inline SolverResult solve_chain(const AlphabetSpec& spec, int order) { return solve(spec, order, Variant::Chain); }
inline SolverResult solve_odd(const AlphabetSpec& spec, int order) { return solve(spec, order, Variant::Odd); }
inline SolverResult solve_chord(const AlphabetSpec& spec, int order) { return solve(spec, order, Variant::Chord); }

// Applies prod_j [1 - a_j gamma (2x d/dx - 1)] to gamma, innermost factor
// j = m first, and checks the result is exactly x up to the truncation
// order. Verifier only: the layered system stays the computational route.
bool verify_factorized_ode(const SolverResult& res);

} // namespace tubings
