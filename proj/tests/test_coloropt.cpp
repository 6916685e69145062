#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uncommon/coloropt.hpp"
#include "uncommon/counting.hpp"

#include <random>
#include <set>

using namespace uncommon;

TEST_CASE("system enumeration agrees with single-form enumeration") {
    for (long long n : {5, 9}) {
        LinearForm L({1, 2, -1, -2});
        LinearSystem sys(L);
        CHECK(count_solutions_sys(sys, n, 1000000) == count_solutions(L, n));
        LinearSystem schur(schur_form());
        CHECK(count_solutions_sys(schur, n, 1000000) == count_solutions(schur_form(), n));
    }
}

TEST_CASE("two-equation systems are enumerated correctly") {
    // x + y - z = 0 and x - y + w - z = 0 => y = w; brute-check
    LinearSystem sys({{1, 1, -1, 0}, {1, -1, -1, 1}});
    long long n = 7, direct = 0;
    for (long long x = 1; x <= n; ++x)
        for (long long y = 1; y <= n; ++y)
            for (long long z = 1; z <= n; ++z)
                for (long long w = 1; w <= n; ++w)
                    if (x + y - z == 0 && x - y - z + w == 0) ++direct;
    CHECK(count_solutions_sys(sys, n, 1000000) == direct);
}

TEST_CASE("rank-deficient systems are rejected") {
    CHECK_THROWS_AS(LinearSystem({{1, 1, -1}, {2, 2, -2}}), std::invalid_argument);
}

TEST_CASE("enumeration respects its budget") {
    LinearSystem sys(schur_form());
    CHECK_THROWS_AS(count_solutions_sys(sys, 50, 10), BudgetExceeded);
}

TEST_CASE("solutions containing a fixed element are streamed exactly once") {
    LinearSystem sys(schur_form());
    long long n = 12, v = 6;
    std::set<std::vector<long long>> seen;
    for_each_solution_containing(sys, n, v, 1000000, [&](const std::vector<long long>& x) {
        bool has = false;
        for (long long t : x) has = has || t == v;
        CHECK(has);
        CHECK(seen.insert(x).second);  // no duplicates
    });
    // compare against filtering the full enumeration
    long long direct = 0;
    for_each_solution_sys(sys, n, 1000000, [&](const std::vector<long long>& x) {
        for (long long t : x)
            if (t == v) {
                ++direct;
                break;
            }
    });
    CHECK(static_cast<long long>(seen.size()) == direct);
}

TEST_CASE("mono_count_sys matches the generic counter") {
    std::mt19937_64 rng(23);
    LinearSystem sys(schur_form());
    for (int trial = 0; trial < 5; ++trial) {
        long long n = 10;
        std::vector<uint8_t> cs;
        for (long long i = 0; i < n; ++i) cs.push_back(static_cast<uint8_t>(rng() % 2));
        Coloring c(n, 2, cs);
        CHECK(mono_count_sys(sys, c, 1000000) == mono_count(schur_form(), c));
    }
}

TEST_CASE("the Schur threshold for two colors is 5") {
    auto cert = rado_threshold(LinearSystem(schur_form()), 2, 20);
    REQUIRE(cert.has_value());
    CHECK(cert->N0 == 5);
    CHECK(cert->epsilon == rat(1, 50));
    CHECK(cert->r == 2);
}

TEST_CASE("x - 2y + z = 0 has threshold 1 (x=y=z solves it)") {
    auto cert = rado_threshold(LinearSystem(three_ap_form()), 2, 20);
    REQUIRE(cert.has_value());
    CHECK(cert->N0 == 1);
}

TEST_CASE("brute force matches hand results for Schur at small n") {
    LinearSystem sys(schur_form());
    BruteResult b4 = brute_min(sys, 4, 2);
    CHECK(b4.min_count == 0);
    // a known optimal split: {1,4} vs {2,3}
    CHECK(mono_count(schur_form(), b4.argmin) == 0);
    BruteResult b5 = brute_min(sys, 5, 2);
    CHECK(b5.min_count >= 1);  // at the threshold every 2-coloring has a solution
    CHECK(mono_count(schur_form(), b5.argmin) == b5.min_count);
}

TEST_CASE("brute force respects its budget") {
    CHECK_THROWS_AS(brute_min(LinearSystem(schur_form()), 40, 2, 1000), BudgetExceeded);
}

TEST_CASE("local search reaches the brute-force optimum at small n") {
    LinearSystem sys(schur_form());
    for (long long n : {6, 8, 10}) {
        BruteResult b = brute_min(sys, n, 2);
        LocalResult l = local_search(sys, n, 2, 16, 99);
        CHECK(l.best_count == b.min_count);
        CHECK(mono_count(schur_form(), l.coloring) == l.best_count);
    }
}

TEST_CASE("local search is deterministic in its seed") {
    LinearSystem sys(schur_form());
    LocalResult a = local_search(sys, 12, 2, 8, 7);
    LocalResult b = local_search(sys, 12, 2, 8, 7);
    CHECK(a.best_count == b.best_count);
    CHECK(a.coloring.colors == b.coloring.colors);
}

TEST_CASE("surviving dilate is found whenever the density hypothesis holds") {
    std::mt19937_64 rng(31);
    LinearSystem sys(schur_form());
    auto cert = rado_threshold(sys, 2, 20);
    REQUIRE(cert.has_value());
    const long long n = 60;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<uint8_t> cs;
        for (long long i = 0; i < n; ++i) cs.push_back(static_cast<uint8_t>(rng() % 2));
        Coloring c(n, 2, cs);
        // remove fewer than floor(n/N0)/N0 elements so the hypothesis holds
        std::vector<char> in_A(static_cast<size_t>(n), 1);
        long long removable = (n / cert->N0) / cert->N0 - 1;
        for (long long j = 0; j < removable; ++j) in_A[rng() % n] = 0;
        SurvivingBlock blk = find_surviving_block(sys, *cert, c, in_A);
        REQUIRE(blk.found);
        // the tuple solves the equation, is monochromatic, and lies in A
        REQUIRE(blk.tuple.size() == 3);
        CHECK(blk.tuple[0] + blk.tuple[1] - blk.tuple[2] == 0);
        uint8_t col = c.at(blk.tuple[0]);
        for (long long x : blk.tuple) {
            CHECK(c.at(x) == col);
            CHECK(in_A[static_cast<size_t>(x - 1)] != 0);
        }
    }
}

TEST_CASE("surviving-block search reports failure when the hypothesis fails") {
    LinearSystem sys(schur_form());
    auto cert = rado_threshold(sys, 2, 20);
    REQUIRE(cert.has_value());
    const long long n = 20;
    Coloring c(n, 2, std::vector<uint8_t>(static_cast<size_t>(n), 0));
    std::vector<char> in_A(static_cast<size_t>(n), 0);  // empty A: hypothesis violated
    CHECK_FALSE(find_surviving_block(sys, *cert, c, in_A).found);
}

TEST_CASE("growth table uses brute force when feasible and reports a slope") {
    LinearSystem sys(schur_form());
    GrowthTable t = growth_table(sys, {8, 12, 16}, 2, 8, 5);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0].method == "brute");
    for (size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].count >= t.rows[i - 1].count);
    REQUIRE(t.slope.has_value());
    CHECK(*t.slope > 1.0);
    CHECK(*t.slope < 3.5);
}
