#pragma once

#include <vector>

#include "tubings/solver.hpp"

namespace tubings {

// Coefficients of G(x,L) = 1 + sum_k Gamma_k(x) L^k, reconstructed from the
// anomalous dimension. Column k starts at x^k.
struct GPolynomial {
    int order = 0;   // truncation in x
    int max_power = 0; // K
    std::vector<RatSeries> columns; // columns[k-1] = Gamma_k

    const RatSeries& column(int k) const { return columns[static_cast<std::size_t>(k - 1)]; }
    // Coefficient of x^n L^k.
    const Rat& coefficient(int n, int k) const { return column(k)[n]; }
};

// Gamma_1 = gamma, Gamma_k = (1/k) gamma (2x d/dx - 1) Gamma_{k-1}.
GPolynomial rge_expand(const SolverResult& res, int max_power);

} // namespace tubings
