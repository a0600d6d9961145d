#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tubings/alphabet.hpp"
#include "tubings/power_series.hpp"

using namespace tubings;

namespace {

RatSeries make(std::initializer_list<long> cs) {
    RatSeries s(static_cast<int>(cs.size()) - 1);
    int i = 0;
    for (long c : cs) s[i++] = Rat(c);
    return s;
}

RatSeries random_series(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    RatSeries s(order);
    for (int n = 0; n <= order; ++n) {
        Rat r(num(rng), den(rng));
        r.canonicalize();
        s[n] = r;
    }
    return s;
}

} // namespace

TEST_CASE("series addition") {
    CHECK(series_add(make({1, 1}), make({1, -1})) == make({2, 0}));
    auto f = make({3, 1, 4});
    CHECK(series_add(f, make({0, 0, 0})) == f);
    CHECK(series_add(make({0, 1, 1}), make({0, 2, 0})) == make({0, 3, 1}));
    CHECK_THROWS_AS(series_add(make({1}), make({1, 2})), PreconditionError);
}

TEST_CASE("series multiplication") {
    CHECK(series_mul(make({1, 1, 0}), make({1, 1, 0})) == make({1, 2, 1}));
    auto f = make({5, -2, 7, 1});
    CHECK(series_mul(f, RatSeries::one(3)) == f);
    // geometric series times (1 - x) telescopes to 1
    const int N = 12;
    RatSeries geo(N), one_minus_x(N);
    for (int n = 0; n <= N; ++n) geo[n] = 1;
    one_minus_x[0] = 1;
    one_minus_x[1] = -1;
    CHECK(series_mul(geo, one_minus_x) == RatSeries::one(N));
}

TEST_CASE("series multiplication is commutative and associative") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        int order = 1 + static_cast<int>(rng() % 32);
        auto a = random_series(rng, order);
        auto b = random_series(rng, order);
        auto c = random_series(rng, order);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    }
}

TEST_CASE("pointing operator") {
    CHECK(pointing_op(make({0, 1})) == make({0, 1}));
    CHECK(pointing_op(make({0, 0, 1})) == make({0, 0, 3}));
    CHECK(pointing_op(make({1, 0})) == make({-1, 0}));
    const int N = 16;
    for (int n = 0; n <= N; ++n) {
        RatSeries xn(N);
        xn[n] = 1;
        RatSeries want(N);
        want[n] = 2 * n - 1;
        CHECK(pointing_op(xn) == want);
    }
}

TEST_CASE("euler operator") {
    CHECK(euler_op(make({0, 1})) == make({0, 1}));
    CHECK(euler_op(make({0, 0, 0, 1})) == make({0, 0, 0, 3}));
    CHECK(euler_op(make({1, 0})) == make({0, 0}));
}

TEST_CASE("geometric product expansion") {
    auto w1 = geometric_product_expansion(AlphabetSpec({1}), 3);
    CHECK(w1.coeffs() == std::vector<Int>{1, 1, 1, 1});
    auto w = geometric_product_expansion(AlphabetSpec({2, 3, 6}), 2);
    CHECK(w[0] == 1);
    CHECK(w[1] == 11);
    CHECK(w[2] == 85);
}

TEST_CASE("geometric product expansion has nonnegative integer coefficients") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long> a;
        int m = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < m; ++i) a.push_back(1 + static_cast<long>(rng() % 7));
        std::sort(a.begin(), a.end());
        auto w = geometric_product_expansion(AlphabetSpec(a), 24);
        for (int n = 0; n <= 24; ++n) CHECK(w[n] >= 0);
    }
}

TEST_CASE("rational canonical form") {
    Rat r = rat_from_string("6/4");
    CHECK(to_string(r) == "3/2");
    CHECK(to_string(rat_from_string("-8/2")) == "-4");
    CHECK(to_string(Rat(12)) == "12");
    CHECK_THROWS(rat_from_string("x"));
    // arithmetic keeps lowest terms / positive denominator
    Rat s = rat_from_string("1/6") + rat_from_string("1/3");
    CHECK(s.get_den() == 2);
    CHECK(s.get_num() == 1);
}

TEST_CASE("alphabet validation and flags") {
    CHECK_THROWS_AS(AlphabetSpec({}), InvalidSpecError);
    CHECK_THROWS_AS(AlphabetSpec({1, 0}), InvalidSpecError);
    CHECK(AlphabetSpec({1, 2}).combinatorial());
    CHECK_FALSE(AlphabetSpec({2, 1}).combinatorial());
    CHECK_FALSE(AlphabetSpec({-1, 2}).combinatorial());
    CHECK(AlphabetSpec({2, 1}).distinct());
    CHECK_FALSE(AlphabetSpec({1, 1}).distinct());
    CHECK(AlphabetSpec({1, 1}).first_repeated() == 1);
    CHECK(AlphabetSpec::parse("2,3,6").values() == std::vector<long>{2, 3, 6});
    CHECK_THROWS_AS(AlphabetSpec::parse("2,,3"), InvalidSpecError);
    CHECK_THROWS_AS(AlphabetSpec::parse("2,x"), InvalidSpecError);
}
