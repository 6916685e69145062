#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uncommon/counting.hpp"

#include <random>

using namespace uncommon;

TEST_CASE("count_solutions matches hand-enumerated Schur counts") {
    // x + y = z in [4]^3: (1,1,2) (1,2,3) (2,1,3) (1,3,4) (3,1,4) (2,2,4)
    CHECK(count_solutions(schur_form(), 4) == 6);
    CHECK(count_solutions(schur_form(), 1) == 0);
    CHECK(count_solutions(schur_form(), 2) == 1);
}

TEST_CASE("count_solutions for the (1,2) symmetric form at tiny n") {
    LinearForm L({1, 2, -1, -2});
    CHECK(count_solutions(L, 1) == 1);  // only (1,1,1,1)
    CHECK(count_solutions(L, 2) == 4);  // x + 2y takes four distinct values on [2]^2
    // cross-check by brute force
    long long direct = 0;
    for (long long x1 = 1; x1 <= 2; ++x1)
        for (long long x2 = 1; x2 <= 2; ++x2)
            for (long long x3 = 1; x3 <= 2; ++x3)
                for (long long x4 = 1; x4 <= 2; ++x4)
                    if (x1 + 2 * x2 - x3 - 2 * x4 == 0) ++direct;
    CHECK(count_solutions(L, 2) == direct);
}

TEST_CASE("weighted_count of the constant 1 equals count_solutions") {
    for (long long n : {3, 5, 8}) {
        WeightFn one = WeightFn::constant(n, 1);
        CHECK(weighted_count(schur_form(), one) == rat(count_solutions(schur_form(), n)));
        LinearForm L({2, -1, -1});
        CHECK(weighted_count(L, one) == rat(count_solutions(L, n)));
    }
}

TEST_CASE("weighted_count is homogeneous of degree k") {
    std::mt19937_64 rng(7);
    LinearForm L({1, 1, -2});
    long long n = 9;
    std::vector<Rat> vals;
    for (long long i = 0; i < n; ++i) vals.push_back(rat(rng() % 7, 1 + rng() % 5));
    WeightFn f(n, vals, false);
    WeightFn g = f;
    Rat c = rat(3, 2);
    for (Rat& v : g.values) v *= c;
    CHECK(weighted_count(L, g) == c * c * c * weighted_count(L, f));
}

TEST_CASE("convolution counting agrees with naive enumeration") {
    std::mt19937_64 rng(11);
    std::vector<LinearForm> forms{LinearForm({1, 1, -1}), LinearForm({1, 2, -1, -2}),
                                  LinearForm({1, -2, 1}), LinearForm({3, -1, -1, -1}),
                                  LinearForm({1, 1, 1, -1, -2})};
    for (const LinearForm& L : forms) {
        for (long long n : {4, 7, 12}) {
            std::vector<Rat> vals;
            for (long long i = 0; i < n; ++i)
                vals.push_back(rat(static_cast<long long>(rng() % 9) - 4,
                                   1 + static_cast<long long>(rng() % 4)));
            WeightFn f(n, vals, false);
            ConvolutionPlan plan = ConvolutionPlan::default_for(L, n);
            CHECK(count_via_convolution(plan, f) == weighted_count(L, f));
        }
    }
}

TEST_CASE("convolution plan validity check") {
    LinearForm L({1, 2, -1, -2});
    CHECK(ConvolutionPlan::default_for(L, 10).valid_for(10));
    CHECK_FALSE(ConvolutionPlan(25, L).valid_for(10));
}

TEST_CASE("mono_count is invariant under color swap") {
    std::mt19937_64 rng(3);
    LinearForm L({1, 1, -1});
    long long n = 12;
    std::vector<uint8_t> cs;
    for (long long i = 0; i < n; ++i) cs.push_back(static_cast<uint8_t>(rng() % 2));
    Coloring c(n, 2, cs);
    std::vector<uint8_t> sw = cs;
    for (uint8_t& x : sw) x = static_cast<uint8_t>(1 - x);
    Coloring cswap(n, 2, sw);
    CHECK(mono_count(L, c) == mono_count(L, cswap));
}

TEST_CASE("mono_count equals the sum of per-color weighted counts") {
    std::mt19937_64 rng(5);
    LinearForm L({1, -2, 1});
    long long n = 10;
    std::vector<uint8_t> cs;
    for (long long i = 0; i < n; ++i) cs.push_back(static_cast<uint8_t>(rng() % 3));
    Coloring c(n, 3, cs);
    Rat sum = 0;
    for (int col = 0; col < 3; ++col) sum += weighted_count(L, c.indicator(col));
    CHECK(rat(mono_count(L, c)) == sum);
}

TEST_CASE("t_density of a probability function lies in [0,1]") {
    std::mt19937_64 rng(13);
    LinearForm L({1, 1, -1});
    long long n = 8;
    std::vector<Rat> vals;
    for (long long i = 0; i < n; ++i) vals.push_back(rat(rng() % 4, 4));
    WeightFn f(n, vals, true);
    Rat t = t_density(L, f);
    CHECK(t >= 0);
    CHECK(t <= 1);
}

TEST_CASE("t_density throws when there are no solutions") {
    LinearForm L({1, 1, -1});
    CHECK_THROWS_AS(t_density(L, WeightFn::constant(1, 1)), std::domain_error);
}

TEST_CASE("deficit is symmetric under f -> 1-f and has known extremes") {
    std::mt19937_64 rng(17);
    LinearForm L({1, 2, -1, -2});
    long long n = 10;
    std::vector<Rat> vals;
    for (long long i = 0; i < n; ++i) vals.push_back(rat(rng() % 5, 4));
    WeightFn f(n, vals, true);
    CHECK(deficit(L, f) == deficit(L, f.complement()));
    // f = 1/2 exactly balances: deficit 0
    CHECK(deficit(L, WeightFn::constant(n, rat(1, 2))) == 0);
    // f = 1: t(1) + t(0) = 1, so deficit = 1 - 2^{1-k}
    CHECK(deficit(L, WeightFn::constant(n, 1)) == 1 - rat(1, 8));
}

TEST_CASE("for_each_solution streams exactly the solution set") {
    LinearForm L({1, 1, -1});
    long long n = 6;
    long long seen = 0;
    for_each_solution(L, n, [&](const std::vector<long long>& x) {
        REQUIRE(x.size() == 3);
        CHECK(x[0] + x[1] - x[2] == 0);
        for (long long v : x) {
            CHECK(v >= 1);
            CHECK(v <= n);
        }
        ++seen;
    });
    CHECK(seen == count_solutions(L, n));
}
