#pragma once

#include <vector>

#include "tubings/tubing.hpp"
#include "tubings/words.hpp"

namespace tubings {

inline constexpr int kOracleCap = 7;

// L(tau): number of compatible labellings of the upper tubes, via the
// product formula prod_v w_{b(v,tau)-1}.
Int count_compatible_labellings(const Tubing& tubing, int n_vertices, const WordCountTable& words);

// Same count by exhaustive assignment of letters to upper tubes, checking
// the nesting constraint pairwise on tubes that share a root. Exponential;
// guards the product formula on small trees.
Int count_compatible_labellings_direct(const Tubing& tubing, const AlphabetSpec& spec);

// Coefficient of x^n in gamma: sum over n-vertex trees and their tubings of
// L(tau). Ground truth for the solver at small n.
Int oracle_gamma_coeff(int n, const AlphabetSpec& spec, int cap = kOracleCap);

// Coefficient of x^n in G(x,L) as a polynomial in L (powers 1..n): the sum
// over tubings of c(tau) * sum_{i=1}^{b} c_{b-i} L^i / i!. Accepts arbitrary
// rational Mellin coefficients.
std::vector<Rat> oracle_G_coeff(int n, const MellinCoeffs& mellin, int cap = kOracleCap);

// N(1..N) via the insertion recurrence N(n) = sum_i N(n-i) (2i-1) N(i).
std::vector<Int> tubing_count_recurrence(int max_n);

// (2n-3)!! leaf tubings of trees of size n (1 for n <= 2), closed form.
Int count_leaf_tubings(int n);
// Same count by enumerating and filtering tubings (capped).
Int count_leaf_tubings_by_enumeration(int n, int cap = kOracleCap);

} // namespace tubings
