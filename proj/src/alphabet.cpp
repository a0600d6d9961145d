#include "tubings/alphabet.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tubings/errors.hpp"

namespace tubings {

AlphabetSpec::AlphabetSpec(std::vector<long> a) : a_(std::move(a)) {
    if (a_.empty()) throw InvalidSpecError("alphabet must have at least one entry");
    for (long v : a_)
        if (v == 0) throw InvalidSpecError("alphabet entries must be nonzero");
    bool all_positive = std::all_of(a_.begin(), a_.end(), [](long v) { return v >= 1; });
    combinatorial_ = all_positive && std::is_sorted(a_.begin(), a_.end());
    auto sorted = a_;
    std::sort(sorted.begin(), sorted.end());
    distinct_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

AlphabetSpec AlphabetSpec::parse(const std::string& text) {
    std::vector<long> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InvalidSpecError("empty alphabet entry in '" + text + "'");
        char* end = nullptr;
        errno = 0;
        long v = std::strtol(item.c_str(), &end, 10);
        if (errno != 0 || end == item.c_str() || *end != '\0')
            throw InvalidSpecError("bad alphabet entry '" + item + "'");
        vals.push_back(v);
    }
    if (vals.empty()) throw InvalidSpecError("empty alphabet '" + text + "'");
    return AlphabetSpec(std::move(vals));
}

long AlphabetSpec::first_repeated() const {
    auto sorted = a_;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::adjacent_find(sorted.begin(), sorted.end());
    return it == sorted.end() ? 0 : *it;
}

std::string AlphabetSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a_[i]);
    }
    return s;
}

std::string AlphabetSpec::key_fragment() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(a_[i]);
    }
    return s;
}

IntSeries geometric_product_expansion(const AlphabetSpec& spec, int order) {
    if (order < 0) throw PreconditionError("order must be >= 0");
    IntSeries w = IntSeries::one(order);
    // Dividing by (1 - a rho) in place: w_n += a * w_{n-1}.
    for (long a : spec.values())
        for (int n = 1; n <= order; ++n)
            w[n] += a * w[n - 1];
    return w;
}

} // namespace tubings
