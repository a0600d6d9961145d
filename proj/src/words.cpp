#include "tubings/words.hpp"

#include "tubings/errors.hpp"

namespace tubings {

namespace {

// Direct count: sum over the lengths k_1 + ... + k_m = n of prod a_i^{k_i},
// i.e. one block per alphabet in order. DP over prefixes of the alphabet
// list; intentionally not the generating-series route.
std::vector<Int> direct_counts(const AlphabetSpec& spec, int max_length) {
    std::vector<Int> cur(static_cast<std::size_t>(max_length) + 1);
    cur[0] = 1;
    for (int i = 1; i <= spec.m(); ++i) {
        std::vector<Int> next(cur.size());
        for (int n = 0; n <= max_length; ++n) {
            Int pw = 1; // a_i^k
            for (int k = 0; k <= n; ++k) {
                next[static_cast<std::size_t>(n)] += cur[static_cast<std::size_t>(n - k)] * pw;
                pw *= spec.a(i);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace

WordCountTable word_count_table(const AlphabetSpec& spec, int max_length) {
    if (!spec.combinatorial())
        throw InvalidSpecError("admissible-word counting needs a positive sorted alphabet");
    if (max_length < 0) throw PreconditionError("max_length must be >= 0");
    auto direct = direct_counts(spec, max_length);
    IntSeries series = geometric_product_expansion(spec, max_length);
    for (int n = 0; n <= max_length; ++n)
        if (direct[static_cast<std::size_t>(n)] != series[n])
            throw std::logic_error("admissible word count mismatch between routes");
    return WordCountTable{spec, std::move(direct)};
}

Int admissible_word_count(int n, const AlphabetSpec& spec) {
    if (n < 0) throw PreconditionError("word length must be >= 0");
    return word_count_table(spec, n).w[static_cast<std::size_t>(n)];
}

MellinCoeffs MellinCoeffs::from_spec(const AlphabetSpec& spec, int max_index) {
    IntSeries w = geometric_product_expansion(spec, max_index);
    MellinCoeffs mc;
    mc.c.reserve(static_cast<std::size_t>(max_index) + 1);
    for (int i = 0; i <= max_index; ++i) mc.c.emplace_back(w[i]);
    return mc;
}

} // namespace tubings
