#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uncommon/kernel.hpp"

using namespace uncommon;

TEST_CASE("alpha is the trapezoid with plateau 1/b") {
    SymmetricPair p(2, 5);
    CHECK(alpha(p, rat(-1)) == 0);
    CHECK(alpha(p, rat(0)) == 0);
    CHECK(alpha(p, rat(1)) == rat(1, 10));       // ramp: u/(ab)
    CHECK(alpha(p, rat(2)) == rat(1, 5));        // plateau starts at a
    CHECK(alpha(p, rat(7, 2)) == rat(1, 5));     // on plateau
    CHECK(alpha(p, rat(5)) == rat(1, 5));        // plateau ends at b
    CHECK(alpha(p, rat(6)) == rat(1, 10));       // down-ramp: (a+b-u)/(ab)
    CHECK(alpha(p, rat(7)) == 0);
    CHECK(alpha(p, rat(8)) == 0);
}

TEST_CASE("beta is the unit tent") {
    CHECK(beta(rat(0)) == 1);
    CHECK(beta(rat(1, 2)) == rat(1, 2));
    CHECK(beta(rat(-1, 2)) == rat(1, 2));
    CHECK(beta(rat(1)) == 0);
    CHECK(beta(rat(3, 2)) == 0);
}

TEST_CASE("kernel has the expected corner and center values for (1,2)") {
    SymmetricPair p(1, 2);
    CHECK(kernel_h(p, rat(0), rat(0)) == rat(5, 2));
    CHECK(kernel_h(p, rat(1, 2), rat(1, 2)) == rat(7, 2));
    CHECK(kernel_h(p, rat(1), rat(1)) == rat(5, 2));
}

TEST_CASE("kernel is symmetric in its arguments") {
    for (auto [a, b] : std::vector<std::pair<long long, long long>>{{1, 2}, {2, 3}, {3, 5}}) {
        SymmetricPair p(a, b);
        for (long long i = 0; i <= 6; ++i)
            for (long long j = 0; j <= 6; ++j)
                CHECK(kernel_h(p, rat(i, 6), rat(j, 6)) == kernel_h(p, rat(j, 6), rat(i, 6)));
    }
}

TEST_CASE("kernel rejects arguments outside the unit square") {
    SymmetricPair p(1, 2);
    CHECK_THROWS_AS(kernel_h(p, rat(-1, 10), rat(0)), std::domain_error);
    CHECK_THROWS_AS(kernel_h(p, rat(0), rat(11, 10)), std::domain_error);
}

TEST_CASE("the six kernel terms sum to the kernel") {
    for (auto [a, b] : std::vector<std::pair<long long, long long>>{{1, 2}, {1, 3}, {2, 5}}) {
        SymmetricPair p(a, b);
        std::vector<KernelTerm> terms = kernel_terms(p);
        REQUIRE(terms.size() == 6);
        for (long long i = 0; i <= 8; ++i) {
            for (long long j = 0; j <= 8; ++j) {
                Rat u = rat(i, 8), v = rat(j, 8);
                Rat sum = 0;
                for (const KernelTerm& t : terms) sum += t.g.eval(t.p * u + t.q * v + t.r);
                CHECK(sum == kernel_h(p, u, v));
            }
        }
    }
}

TEST_CASE("float evaluation tracks the exact kernel") {
    SymmetricPair p(2, 3);
    for (long long i = 0; i <= 10; ++i) {
        for (long long j = 0; j <= 10; ++j) {
            Rat u = rat(i, 10), v = rat(j, 10);
            double exact = kernel_h(p, u, v).get_d();
            double approx = kernel_h_d(p, i / 10.0, j / 10.0);
            CHECK(std::abs(exact - approx) < 1e-12);
        }
    }
}

TEST_CASE("the Lipschitz bound dominates grid increments") {
    for (auto [a, b] : std::vector<std::pair<long long, long long>>{{1, 2}, {2, 3}}) {
        SymmetricPair p(a, b);
        Rat lip = kernel_lipschitz_bound(p);
        const long long N = 40;
        for (long long i = 0; i + 1 <= N; ++i) {
            for (long long j = 0; j <= N; ++j) {
                Rat d = kernel_h(p, rat(i + 1, N), rat(j, N)) - kernel_h(p, rat(i, N), rat(j, N));
                if (d < 0) d = -d;
                CHECK(d <= lip / rat(N));
            }
        }
    }
}

TEST_CASE("alpha and beta are nonnegative") {
    SymmetricPair p(3, 4);
    for (long long i = -5; i <= 40; ++i) {
        CHECK(alpha(p, rat(i, 5)) >= 0);
        CHECK(beta(rat(i, 5)) >= 0);
    }
}

TEST_CASE("piecewise-linear wrappers agree with the closed forms") {
    SymmetricPair p(2, 5);
    PiecewiseLinear apl = alpha_pl(p);
    PiecewiseLinear bpl = beta_pl();
    for (long long i = -10; i <= 80; ++i) {
        CHECK(apl.eval(rat(i, 10)) == alpha(p, rat(i, 10)));
        CHECK(bpl.eval(rat(i, 10)) == beta(rat(i, 10)));
    }
}
