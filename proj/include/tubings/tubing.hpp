#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tubings/plane_tree.hpp"

namespace tubings {

// One tube of a binary tubing. Vertices carry preorder ids (root = 0) so a
// tube is a bitmask over the host tree. A tube of size >= 2 is partitioned
// by exactly two sub-tubes: `upper` holds this tube's root, `lower` hangs
// below the corresponding tree edge. Singletons have null children.
struct Tubing {
    std::uint32_t members = 0;
    int root = 0;
    std::shared_ptr<const Tubing> upper, lower;

    bool singleton() const { return !upper; }
};
using TubingPtr = std::shared_ptr<const Tubing>;

// All binary tubings of t; built by choosing the edge that splits the outer
// tube and recursing on both parts. Throws ResourceLimitError above cap.
std::vector<TubingPtr> enum_tubings(const PlaneTree& t, int cap = kTreeEnumerationCap);

int tube_count(const Tubing& tubing);

// b(v, tau): number of tubes rooted at each vertex, indexed by preorder id.
// b(v) - 1 of them are upper tubes.
std::vector<int> tube_root_counts(const Tubing& tubing, int n_vertices);

// b(tau) = b(root of the tree).
int root_tube_count(const Tubing& tubing);

// All tubes that arise as the upper half of a bipartition.
std::vector<const Tubing*> upper_tubes(const Tubing& tubing);

// Every bipartition's lower half is a single vertex.
bool is_leaf_tubing(const Tubing& tubing);

// Structural sanity of one tubing: per vertex, the tubes rooted there are
// strictly nested and exactly one of them (the outermost) is a lower tube.
// Used by the property suites.
bool check_root_nesting(const Tubing& tubing, int n_vertices);

} // namespace tubings
