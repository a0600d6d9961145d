#pragma once

#include <string>
#include <vector>

#include "tubings/power_series.hpp"

namespace tubings {

// The alphabet sizes a_1..a_m. Entries are nonzero integers; the
// enumerative interpretation (and hence the brute-force oracle) only
// applies when they are positive and sorted nondecreasing, which the
// `combinatorial` flag records. Signed or unsorted inputs are still valid
// for the formal solver.
class AlphabetSpec {
public:
    explicit AlphabetSpec(std::vector<long> a);

    // Parses "2,3,6". Throws InvalidSpecError on empty/zero/garbage.
    static AlphabetSpec parse(const std::string& text);

    int m() const { return static_cast<int>(a_.size()); }
    long a(int i) const { return a_[static_cast<std::size_t>(i - 1)]; } // 1-based, matching a_i
    const std::vector<long>& values() const { return a_; }

    bool combinatorial() const { return combinatorial_; }
    bool distinct() const { return distinct_; }

    // First value that appears twice; only meaningful when !distinct().
    long first_repeated() const;

    std::string to_string() const; // "2,3,6"
    std::string key_fragment() const; // "2-3-6" (cache keys, file names)

    bool operator==(const AlphabetSpec& o) const { return a_ == o.a_; }

private:
    std::vector<long> a_;
    bool combinatorial_ = false;
    bool distinct_ = false;
};

// Expansion of prod_i 1/(1 - a_i rho) to order N: coefficient of rho^n is
// the number w_n of admissible words of length n (for combinatorial specs).
IntSeries geometric_product_expansion(const AlphabetSpec& spec, int order);

} // namespace tubings
