#include "tubings/oracle.hpp"

#include <bit>
#include <functional>

#include "tubings/errors.hpp"

namespace tubings {

Int count_compatible_labellings(const Tubing& tubing, int n_vertices, const WordCountTable& words) {
    auto b = tube_root_counts(tubing, n_vertices);
    Int prod = 1;
    for (int bv : b) prod *= words[bv - 1];
    return prod;
}

Int count_compatible_labellings_direct(const Tubing& tubing, const AlphabetSpec& spec) {
    if (!spec.combinatorial())
        throw InvalidSpecError("labellings need a positive sorted alphabet");
    auto ups = upper_tubes(tubing);
    const int m = spec.m();
    // letter = (alphabet class, index within class); only the class matters
    // for the constraint, the index contributes multiplicity.
    Int total = 0;
    std::vector<int> cls(ups.size(), 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int mult) {
        if (i == ups.size()) {
            total += mult;
            return;
        }
        for (int c = 1; c <= m; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (ups[j]->root != ups[i]->root) continue;
                // tubes rooted at the same vertex are nested; inner tube
                // must carry the smaller (or equal) class
                bool j_inside_i = (ups[j]->members & ups[i]->members) == ups[j]->members;
                bool i_inside_j = (ups[i]->members & ups[j]->members) == ups[i]->members;
                if (j_inside_i && cls[j] > c) ok = false;
                if (i_inside_j && c > cls[j]) ok = false;
            }
            if (!ok) continue;
            cls[i] = c;
            rec(i + 1, mult * spec.a(c));
        }
    };
    rec(0, Int(1));
    return total;
}

Int oracle_gamma_coeff(int n, const AlphabetSpec& spec, int cap) {
    if (n < 1) throw PreconditionError("order must be >= 1");
    if (n > cap)
        throw ResourceLimitError("oracle capped at n = " + std::to_string(cap));
    WordCountTable words = word_count_table(spec, 2 * n);
    Int total = 0;
    for (const auto& t : enum_trees(n))
        for (const auto& tb : enum_tubings(t))
            total += count_compatible_labellings(*tb, n, words);
    return total;
}

std::vector<Rat> oracle_G_coeff(int n, const MellinCoeffs& mellin, int cap) {
    if (n < 1) throw PreconditionError("order must be >= 1");
    if (n > cap)
        throw ResourceLimitError("oracle capped at n = " + std::to_string(cap));
    if (mellin.max_index() < 2 * n - 1)
        throw PreconditionError("need Mellin coefficients up to index 2n-1");
    std::vector<Rat> poly(static_cast<std::size_t>(n)); // L^1..L^n
    std::vector<Rat> inv_factorial(static_cast<std::size_t>(n) + 1, Rat(1));
    for (int i = 2; i <= n; ++i)
        inv_factorial[static_cast<std::size_t>(i)] = inv_factorial[static_cast<std::size_t>(i - 1)] / i;
    for (const auto& t : enum_trees(n)) {
        for (const auto& tb : enum_tubings(t)) {
            auto b = tube_root_counts(*tb, n);
            // Mellin monomial over non-root vertices
            Rat ctau(1);
            for (int v = 1; v < n; ++v) ctau *= mellin[b[static_cast<std::size_t>(v)] - 1];
            const int btau = b[0];
            for (int i = 1; i <= btau; ++i)
                poly[static_cast<std::size_t>(i - 1)] +=
                    ctau * mellin[btau - i] * inv_factorial[static_cast<std::size_t>(i)];
        }
    }
    return poly;
}

std::vector<Int> tubing_count_recurrence(int max_n) {
    if (max_n < 1) throw PreconditionError("max_n must be >= 1");
    std::vector<Int> N(static_cast<std::size_t>(max_n) + 1);
    N[1] = 1;
    for (int n = 2; n <= max_n; ++n) {
        Int acc = 0;
        for (int i = 1; i < n; ++i)
            acc += N[static_cast<std::size_t>(n - i)] * (2 * i - 1) * N[static_cast<std::size_t>(i)];
        N[static_cast<std::size_t>(n)] = acc;
    }
    return N;
}

Int count_leaf_tubings(int n) {
    if (n < 1) throw PreconditionError("size must be >= 1");
    Int r = 1;
    for (int k = 2 * n - 3; k > 1; k -= 2) r *= k;
    return r; // (2n-3)!!, empty product for n <= 2
}

Int count_leaf_tubings_by_enumeration(int n, int cap) {
    if (n > cap)
        throw ResourceLimitError("leaf-tubing enumeration capped at n = " + std::to_string(cap));
    Int total = 0;
    for (const auto& t : enum_trees(n))
        for (const auto& tb : enum_tubings(t))
            if (is_leaf_tubing(*tb)) ++total;
    return total;
}

} // namespace tubings
