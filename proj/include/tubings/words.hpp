#pragma once

#include <vector>

#include "tubings/alphabet.hpp"
#include "tubings/rational.hpp"

namespace tubings {

// w_n = number of admissible words of length n: words over the disjoint
// union of alphabets Omega_1..Omega_m (|Omega_i| = a_i) in which every
// Omega_i letter precedes every Omega_j letter for i < j.
struct WordCountTable {
    AlphabetSpec spec;
    std::vector<Int> w; // w[0..N]

    const Int& operator[](int n) const { return w[static_cast<std::size_t>(n)]; }
    int max_length() const { return static_cast<int>(w.size()) - 1; }
};

// Builds the table two independent ways — direct split enumeration over
// the lengths of the per-alphabet blocks, and the rho^n coefficients of
// geometric_product_expansion — and insists they agree.
// Requires a combinatorial spec.
WordCountTable word_count_table(const AlphabetSpec& spec, int max_length);

Int admissible_word_count(int n, const AlphabetSpec& spec);

// Laurent coefficients c_i of a Mellin transform F(rho) = sum c_i rho^{i-1}.
// The reciprocal-polynomial transforms have c_i = w_i, but the tubing
// expansion accepts arbitrary rational coefficients.
struct MellinCoeffs {
    std::vector<Rat> c; // c[0..N]

    const Rat& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    int max_index() const { return static_cast<int>(c.size()) - 1; }

    static MellinCoeffs from_spec(const AlphabetSpec& spec, int max_index);
};

} // namespace tubings
