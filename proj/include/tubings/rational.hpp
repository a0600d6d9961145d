#pragma once

#include <gmpxx.h>
#include <string>

namespace tubings {

// Exact coefficient types. GMP keeps rationals canonical: lowest terms,
// positive denominator. The main solver recursion is integer-closed, so it
// runs on Int; everything touched by the 1/k of the RGE or by asymptotic
// expansions runs on Rat.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat to_rat(const Int& z) { return Rat(z); }

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

// Parses "p" or "p/q"; throws std::invalid_argument on garbage or q == 0.
Rat rat_from_string(const std::string& s);

} // namespace tubings
