#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tubings/asymptotics.hpp"

using namespace tubings;

namespace {

Rat leading_c(const AlphabetSpec& spec, int q, int k) {
    Rat alpha(2 * spec.a(q));
    if (k < q) return Rat(0);
    Rat v(1);
    for (int j = q + 1; j <= k; ++j) v *= alpha / (alpha - Rat(2 * spec.a(j)));
    return v;
}

std::vector<long> random_distinct(std::mt19937_64& rng, int m) {
    std::vector<long> a;
    while (static_cast<int>(a.size()) < m) {
        long v = 1 + static_cast<long>(rng() % 60);
        if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
    }
    std::sort(a.begin(), a.end());
    return a;
}

} // namespace

TEST_CASE("sector parameters, closed form") {
    CHECK(asym_params(AlphabetSpec({1}), 1) == AsymptoticParams{1, Rat(2), Rat(1, 2)});
    AlphabetSpec phi3({2, 3, 6});
    CHECK(asym_params(phi3, 1) == AsymptoticParams{1, Rat(4), Rat(11, 4)});
    CHECK(asym_params(phi3, 2) == AsymptoticParams{2, Rat(6), Rat(-1, 6)});
    CHECK(asym_params(phi3, 3) == AsymptoticParams{3, Rat(12), Rat(23, 12)});
    AlphabetSpec inter({1, 2});
    CHECK(asym_params(inter, 1) == AsymptoticParams{1, Rat(2), Rat(1, 2)});
    CHECK(asym_params(inter, 2) == AsymptoticParams{2, Rat(4), Rat(5, 4)});
    CHECK_THROWS_AS(asym_params(phi3, 0), PreconditionError);
    CHECK_THROWS_AS(asym_params(phi3, 4), PreconditionError);
}

TEST_CASE("degenerate spectra are rejected with the scale diagnostic") {
    try {
        asym_params(AlphabetSpec({1, 1}), 1);
        FAIL("expected DegenerateSpectrumError");
    } catch (const DegenerateSpectrumError& e) {
        CHECK(e.repeated_value == 1);
        CHECK(std::string(e.what()).find("sqrt(x)") != std::string::npos);
        CHECK(std::string(e.what()).find("exp(-1/(2x))") != std::string::npos);
    }
    CHECK_THROWS_AS(transseries_sectors(AlphabetSpec({1, 1})), DegenerateSpectrumError);
    CHECK_THROWS_AS(transseries_sectors(AlphabetSpec({2, 3, 3})), DegenerateSpectrumError);
    CHECK_THROWS_AS(asym_series(solve_gamma(AlphabetSpec({1, 1}), 10), 1, 2),
                    DegenerateSpectrumError);
    CHECK_THROWS_AS(fluctuation_series(solve_gamma(AlphabetSpec({1, 1}), 10), 1, 2),
                    DegenerateSpectrumError);
}

TEST_CASE("transseries route agrees with the closed form") {
    for (auto spec : {AlphabetSpec({1}), AlphabetSpec({1, 2}), AlphabetSpec({2, 3, 6}),
                      AlphabetSpec({3, 5, 7, 11})}) {
        auto sectors = transseries_sectors(spec);
        REQUIRE(static_cast<int>(sectors.size()) == spec.m());
        for (int q = 1; q <= spec.m(); ++q)
            CHECK(sectors[static_cast<std::size_t>(q - 1)] == asym_params(spec, q));
    }
    std::mt19937_64 rng(20250809);
    for (int trial = 0; trial < 15; ++trial) {
        AlphabetSpec spec(random_distinct(rng, 1 + static_cast<int>(rng() % 6)));
        auto sectors = transseries_sectors(spec);
        for (int q = 1; q <= spec.m(); ++q)
            CHECK(sectors[static_cast<std::size_t>(q - 1)] == asym_params(spec, q));
    }
}

TEST_CASE("sector growth rates are ordered for sorted specs") {
    AlphabetSpec spec({2, 3, 6});
    Rat prev(0);
    for (int q = 1; q <= spec.m(); ++q) {
        auto p = asym_params(spec, q);
        CHECK(p.alpha > prev);
        prev = p.alpha;
    }
}

TEST_CASE("telescoping beta identity") {
    // sum_{j<=q} a_j prod_{i<j} (a_q - a_i)/a_q == a_q for distinct values
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_distinct(rng, 1 + static_cast<int>(rng() % 6));
        std::shuffle(a.begin(), a.end(), rng);
        int q = 1 + static_cast<int>(rng() % a.size());
        Rat aq(a[static_cast<std::size_t>(q - 1)]);
        Rat sum(0);
        for (int j = 1; j <= q; ++j) {
            Rat term(a[static_cast<std::size_t>(j - 1)]);
            for (int i = 1; i < j; ++i) term *= (aq - Rat(a[static_cast<std::size_t>(i - 1)])) / aq;
            sum += term;
        }
        CHECK(sum == aq);
    }
}

TEST_CASE("derivation-image series for the one-alphabet model") {
    auto res = solve_gamma(AlphabetSpec({1}), 12);
    auto s = asym_series(res, 1, 5);
    CHECK(s.c[0] == 1);
    CHECK(s.c[1] / s.c[0] == Rat(-5, 2));
    CHECK(s.c[2] == Rat(-43, 8));
    CHECK(s.c[3] == Rat(-579, 16));
    CHECK(s.c[4] == Rat(-44477, 128));
    CHECK(s.c[5] == Rat(-5326191, 1280));
    CHECK(verify_asym_series(res, s));
}

TEST_CASE("leading kernel vector matches the product formula") {
    for (auto spec : {AlphabetSpec({1, 2}), AlphabetSpec({2, 3, 6})}) {
        auto res = solve_gamma(spec, spec.m() + 9);
        for (int q = 1; q <= spec.m(); ++q) {
            auto s = asym_series(res, q, 3);
            for (int k = 1; k <= spec.m(); ++k) {
                CHECK(s.layers[static_cast<std::size_t>(k - 1)][0] == leading_c(spec, q, k));
                if (k < q) CHECK(s.layers[static_cast<std::size_t>(k - 1)][0] == 0);
            }
            CHECK(verify_asym_series(res, s));
        }
    }
}

TEST_CASE("first-order layer values for the sub-dominant layers") {
    // d_1, d_2 for the top sector of the three-alphabet example
    auto res = solve_gamma(AlphabetSpec({2, 3, 6}), 12);
    auto s = asym_series(res, 3, 2);
    CHECK(s.layers[0][1] == Rat(3));
    CHECK(s.layers[1][1] == Rat(12));
    auto res12 = solve_gamma(AlphabetSpec({1, 2}), 12);
    CHECK(asym_series(res12, 2, 2).layers[0][1] == Rat(2));
}

TEST_CASE("wrong beta is rejected by the order-one consistency row") {
    auto res = solve_gamma(AlphabetSpec({1}), 12);
    CHECK_THROWS_AS(asym_series_with_beta(res, 1, 3, Rat(1)), PreconditionError);
    CHECK_THROWS_AS(asym_series_with_beta(res, 1, 3, Rat(-1, 2)), PreconditionError);
    // the right beta sails through
    auto s = asym_series_with_beta(res, 1, 3, Rat(1, 2));
    CHECK(s.c[1] == Rat(-5, 2));
    auto res236 = solve_gamma(AlphabetSpec({2, 3, 6}), 12);
    CHECK_THROWS_AS(asym_series_with_beta(res236, 2, 3, Rat(0)), PreconditionError);
}

TEST_CASE("insufficient solver order is detected") {
    auto res = solve_gamma(AlphabetSpec({2, 3, 6}), 6);
    CHECK_THROWS_AS(asym_series(res, 1, 4), InsufficientOrderError);
    CHECK_THROWS_AS(fluctuation_series(res, 1, 4), InsufficientOrderError);
}

TEST_CASE("fluctuation series") {
    auto res = solve_gamma(AlphabetSpec({1}), 12);
    auto u = fluctuation_series(res, 1, 5);
    REQUIRE(u.size() == 6);
    CHECK(u[0] == 1);
    CHECK(u[1] == Rat(-5, 2));
    // resurgence correspondence with the derivation-image route, exact
    auto s = asym_series(res, 1, 5);
    for (int k = 0; k <= 5; ++k) CHECK(u[static_cast<std::size_t>(k)] == s.c[static_cast<std::size_t>(k)] / s.c[0]);
}

TEST_CASE("fluctuations track the layer-m series across sectors") {
    for (auto spec : {AlphabetSpec({1, 2}), AlphabetSpec({2, 3, 6})}) {
        auto res = solve_gamma(spec, spec.m() + 8);
        for (int q = 1; q <= spec.m(); ++q) {
            auto u = fluctuation_series(res, q, 3);
            auto s = asym_series(res, q, 3);
            for (int k = 0; k <= 3; ++k)
                CHECK(u[static_cast<std::size_t>(k)] == s.c[static_cast<std::size_t>(k)] / s.c[0]);
        }
    }
}
