#include "tubings/plane_tree.hpp"

#include <stdexcept>

#include "tubings/errors.hpp"

namespace tubings {

namespace {

std::vector<std::vector<PlaneTree>> forests(int s);

std::vector<PlaneTree> trees_of(int n) {
    std::vector<PlaneTree> out;
    for (auto& f : forests(n - 1)) out.push_back(PlaneTree{std::move(f)});
    return out;
}

// Ordered lists of trees with s vertices in total.
std::vector<std::vector<PlaneTree>> forests(int s) {
    if (s == 0) return {{}};
    std::vector<std::vector<PlaneTree>> out;
    for (int k = 1; k <= s; ++k) {
        auto heads = trees_of(k);
        auto tails = forests(s - k);
        for (const auto& h : heads)
            for (const auto& t : tails) {
                std::vector<PlaneTree> f;
                f.reserve(t.size() + 1);
                f.push_back(h);
                f.insert(f.end(), t.begin(), t.end());
                out.push_back(std::move(f));
            }
    }
    return out;
}

} // namespace

std::vector<PlaneTree> enum_trees(int n, int cap) {
    if (n < 1) throw PreconditionError("tree size must be >= 1");
    if (n > cap)
        throw ResourceLimitError("tree enumeration capped at n = " + std::to_string(cap) +
                                 " (requested " + std::to_string(n) + ")");
    return trees_of(n);
}

std::string to_parens(const PlaneTree& t) {
    std::string s = "(";
    for (const auto& c : t.children) s += to_parens(c);
    s += ')';
    return s;
}

PlaneTree parse_parens(const std::string& s) {
    std::size_t pos = 0;
    // recursive descent over one "( ... )" group
    auto parse = [&](auto&& self) -> PlaneTree {
        if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("expected '(' in tree encoding");
        ++pos;
        PlaneTree t;
        while (pos < s.size() && s[pos] == '(') t.children.push_back(self(self));
        if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("expected ')' in tree encoding");
        ++pos;
        return t;
    };
    PlaneTree t = parse(parse);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in tree encoding");
    return t;
}

} // namespace tubings
