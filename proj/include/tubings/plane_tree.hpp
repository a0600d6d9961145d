#pragma once

#include <string>
#include <vector>

namespace tubings {

// Plane rooted tree: a root plus an ordered list of plane rooted subtrees.
struct PlaneTree {
    std::vector<PlaneTree> children;

    int size() const {
        int s = 1;
        for (const auto& c : children) s += c.size();
        return s;
    }
    bool operator==(const PlaneTree& o) const = default;
};

inline constexpr int kTreeEnumerationCap = 9;

// All plane rooted trees with n vertices, each exactly once, in a fixed
// canonical order (first subtree size increasing, then recursively).
// There are Catalan(n-1) of them. Throws ResourceLimitError above the cap.
std::vector<PlaneTree> enum_trees(int n, int cap = kTreeEnumerationCap);

// Balanced-parenthesis encoding, root as the outer pair: "()" is the single
// vertex, "(()())" the cherry on three vertices.
std::string to_parens(const PlaneTree& t);
PlaneTree parse_parens(const std::string& s);

} // namespace tubings
