#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tubings/oracle.hpp"
#include "tubings/plane_tree.hpp"
#include "tubings/tubing.hpp"

using namespace tubings;

namespace {

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

} // namespace

TEST_CASE("tree enumeration counts and uniqueness") {
    CHECK(enum_trees(1).size() == 1);
    CHECK(enum_trees(3).size() == 2);
    CHECK(enum_trees(5).size() == 14);
    for (int n = 1; n <= 7; ++n) {
        auto trees = enum_trees(n);
        CHECK(static_cast<long>(trees.size()) == catalan(n - 1));
        std::set<std::string> seen;
        for (const auto& t : trees) {
            CHECK(t.size() == n);
            seen.insert(to_parens(t));
        }
        CHECK(seen.size() == trees.size());
    }
    CHECK_THROWS_AS(enum_trees(10), ResourceLimitError);
    CHECK_THROWS_AS(enum_trees(0), PreconditionError);
}

TEST_CASE("parenthesis encoding round-trips") {
    CHECK(to_parens(PlaneTree{}) == "()");
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enum_trees(n)) CHECK(parse_parens(to_parens(t)) == t);
    // the cherry on three vertices
    PlaneTree cherry{{PlaneTree{}, PlaneTree{}}};
    CHECK(to_parens(cherry) == "(()())");
    CHECK_THROWS(parse_parens("(()"));
    CHECK_THROWS(parse_parens("()x"));
}

TEST_CASE("tubing counts per tree and in total") {
    CHECK(enum_tubings(parse_parens("()")).size() == 1);
    for (const auto& t : enum_trees(3)) CHECK(enum_tubings(t).size() == 2);
    auto recurrence = tubing_count_recurrence(7);
    CHECK(recurrence[1] == 1);
    CHECK(recurrence[2] == 1);
    CHECK(recurrence[3] == 4);
    CHECK(recurrence[4] == 27);
    CHECK(recurrence[5] == 248);
    for (int n = 1; n <= 7; ++n) {
        Int total = 0;
        for (const auto& t : enum_trees(n)) total += static_cast<long>(enum_tubings(t).size());
        CHECK(total == recurrence[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("tubing structure invariants, exhaustive to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& t : enum_trees(n)) {
            for (const auto& tb : enum_tubings(t)) {
                CHECK(tube_count(*tb) == 2 * n - 1);
                auto b = tube_root_counts(*tb, n);
                int sum = 0;
                for (int bv : b) {
                    CHECK(bv >= 1);
                    sum += bv;
                }
                CHECK(sum == 2 * n - 1);
                CHECK(check_root_nesting(*tb, n));
                CHECK(static_cast<int>(upper_tubes(*tb).size()) == n - 1);
            }
        }
    }
}

TEST_CASE("two-vertex tubing b-counts") {
    auto tbs = enum_tubings(parse_parens("(())"));
    REQUIRE(tbs.size() == 1);
    auto b = tube_root_counts(*tbs[0], 2);
    CHECK(b[0] == 2);
    CHECK(b[1] == 1);
    CHECK(root_tube_count(*tbs[0]) == 2);
}

TEST_CASE("leaf tubings") {
    CHECK(count_leaf_tubings(1) == 1);
    CHECK(count_leaf_tubings(2) == 1);
    CHECK(count_leaf_tubings(3) == 3);
    CHECK(count_leaf_tubings(5) == 105);
    for (int n = 1; n <= 7; ++n)
        CHECK(count_leaf_tubings_by_enumeration(n) == count_leaf_tubings(n));
}
