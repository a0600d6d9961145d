#include "tubings/tubing.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "tubings/errors.hpp"

namespace tubings {

namespace {

struct IndexedTree {
    int id = 0;
    std::vector<IndexedTree> children;

    int size() const {
        int s = 1;
        for (const auto& c : children) s += c.size();
        return s;
    }
};

IndexedTree index_preorder(const PlaneTree& t) {
    int next = 0;
    std::function<IndexedTree(const PlaneTree&)> go = [&](const PlaneTree& node) {
        IndexedTree it;
        it.id = next++;
        for (const auto& c : node.children) it.children.push_back(go(c));
        return it;
    };
    return go(t);
}

// Copy of `t` with the child at `slot` under node `at` removed.
IndexedTree remove_subtree(const IndexedTree& t, const IndexedTree* at, std::size_t slot) {
    IndexedTree out;
    out.id = t.id;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (&t == at && i == slot) continue;
        out.children.push_back(remove_subtree(t.children[i], at, slot));
    }
    return out;
}

void collect_edges(const IndexedTree& t, std::vector<std::pair<const IndexedTree*, std::size_t>>& out) {
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        out.emplace_back(&t, i);
        collect_edges(t.children[i], out);
    }
}

std::vector<TubingPtr> tubings_of(const IndexedTree& t) {
    if (t.children.empty() && t.size() == 1) {
        auto one = std::make_shared<Tubing>();
        one->members = 1u << t.id;
        one->root = t.id;
        return {one};
    }
    std::vector<std::pair<const IndexedTree*, std::size_t>> edges;
    collect_edges(t, edges);
    std::vector<TubingPtr> out;
    for (auto [parent, slot] : edges) {
        const IndexedTree& low = parent->children[slot];
        IndexedTree up = remove_subtree(t, parent, slot);
        auto ups = tubings_of(up);
        auto los = tubings_of(low);
        for (const auto& u : ups)
            for (const auto& l : los) {
                auto tb = std::make_shared<Tubing>();
                tb->members = u->members | l->members;
                tb->root = t.id;
                tb->upper = u;
                tb->lower = l;
                out.push_back(std::move(tb));
            }
    }
    return out;
}

template <typename F>
void for_each_tube(const Tubing& tb, F&& f) {
    f(tb);
    if (!tb.singleton()) {
        for_each_tube(*tb.upper, f);
        for_each_tube(*tb.lower, f);
    }
}

} // namespace

std::vector<TubingPtr> enum_tubings(const PlaneTree& t, int cap) {
    const int n = t.size();
    if (n > cap)
        throw ResourceLimitError("tubing enumeration capped at n = " + std::to_string(cap) +
                                 " (tree has " + std::to_string(n) + " vertices)");
    return tubings_of(index_preorder(t));
}

int tube_count(const Tubing& tubing) {
    int c = 0;
    for_each_tube(tubing, [&](const Tubing&) { ++c; });
    return c;
}

std::vector<int> tube_root_counts(const Tubing& tubing, int n_vertices) {
    std::vector<int> b(static_cast<std::size_t>(n_vertices), 0);
    for_each_tube(tubing, [&](const Tubing& t) { ++b[static_cast<std::size_t>(t.root)]; });
    return b;
}

int root_tube_count(const Tubing& tubing) {
    int b = 0;
    for_each_tube(tubing, [&](const Tubing& t) {
        if (t.root == tubing.root) ++b;
    });
    return b;
}

std::vector<const Tubing*> upper_tubes(const Tubing& tubing) {
    std::vector<const Tubing*> out;
    for_each_tube(tubing, [&](const Tubing& t) {
        if (!t.singleton()) out.push_back(t.upper.get());
    });
    return out;
}

bool is_leaf_tubing(const Tubing& tubing) {
    if (tubing.singleton()) return true;
    return std::popcount(tubing.lower->members) == 1 && is_leaf_tubing(*tubing.upper) &&
           is_leaf_tubing(*tubing.lower);
}

bool check_root_nesting(const Tubing& tubing, int n_vertices) {
    // Gather (members, is_lower) per root vertex. The outermost tube counts
    // as a lower tube by convention.
    std::vector<std::vector<std::pair<std::uint32_t, bool>>> at(static_cast<std::size_t>(n_vertices));
    std::function<void(const Tubing&, bool)> go = [&](const Tubing& t, bool lower) {
        at[static_cast<std::size_t>(t.root)].emplace_back(t.members, lower);
        if (!t.singleton()) {
            go(*t.upper, false);
            go(*t.lower, true);
        }
    };
    go(tubing, true);
    for (auto& tubes : at) {
        if (tubes.empty()) return false; // every vertex roots its singleton at least
        std::sort(tubes.begin(), tubes.end(), [](const auto& x, const auto& y) {
            return std::popcount(x.first) < std::popcount(y.first);
        });
        int lowers = 0;
        for (std::size_t i = 0; i < tubes.size(); ++i) {
            if (tubes[i].second) ++lowers;
            if (i + 1 < tubes.size()) {
                // strict nesting: each tube properly contained in the next
                if ((tubes[i].first & tubes[i + 1].first) != tubes[i].first) return false;
                if (tubes[i].first == tubes[i + 1].first) return false;
            }
        }
        if (lowers != 1) return false;
        if (!tubes.back().second) return false; // the outermost one is the lower tube
    }
    return true;
}

} // namespace tubings
