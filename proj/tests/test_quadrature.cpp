#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uncommon/quadrature.hpp"

#include <cmath>

using namespace uncommon;

TEST_CASE("the 13-piece certificate integral is exactly -120959/1600000") {
    SymmetricPair p(1, 2);
    CHECK(integrate_quadratic(p, certificate_phi()) == rat(-120959, 1600000));
}

TEST_CASE("second antiderivative matches hand-computed values for the unit tent") {
    SecondAntiderivative G(beta_pl());
    // G2(x) = int_{-1}^{x} (x - t) beta(t) dt; beta has mass 1 and centroid 0,
    // so G2(1) = 1 and G2 continues with slope 1 past the support.
    CHECK(G.eval(rat(-2)) == 0);
    CHECK(G.eval(rat(-1)) == 0);
    CHECK(G.eval(rat(0)) == rat(1, 6));
    CHECK(G.eval(rat(1)) == 1);
    // beyond the support G2 grows linearly with slope = total mass = 1
    CHECK(G.eval(rat(2)) - G.eval(rat(1)) == 1);
    CHECK(G.eval(rat(5)) - G.eval(rat(4)) == 1);
}

TEST_CASE("integrate_bilinear is symmetric and bilinear") {
    SymmetricPair p(1, 2);
    StepFunction phi({0, rat(1, 4), 1}, {rat(2), rat(-1)});
    StepFunction psi({0, rat(1, 2), 1}, {rat(-3), rat(5)});
    CHECK(integrate_bilinear(p, phi, psi) == integrate_bilinear(p, psi, phi));
    CHECK(integrate_bilinear(p, phi.scaled(rat(7, 3)), psi) ==
          rat(7, 3) * integrate_bilinear(p, phi, psi));
    CHECK(integrate_quadratic(p, phi) == integrate_bilinear(p, phi, phi));
}

TEST_CASE("quadratic integral scales with the square") {
    SymmetricPair p(2, 3);
    StepFunction phi({0, rat(1, 3), rat(2, 3), 1}, {rat(1), rat(-2), rat(1)});
    CHECK(integrate_quadratic(p, phi.scaled(rat(5))) == 25 * integrate_quadratic(p, phi));
    CHECK(integrate_quadratic(p, phi.scaled(rat(0))) == 0);
}

TEST_CASE("constant test functions integrate to the total kernel mass") {
    // For phi = 1 the integral is the full mass of H over the unit square,
    // which is positive for every pair.
    for (auto [a, b] : std::vector<std::pair<long long, long long>>{{1, 2}, {2, 3}, {1, 5}}) {
        SymmetricPair p(a, b);
        Rat mass = integrate_quadratic(p, step_constant(rat(1)));
        CHECK(mass > 0);
        // cross-check against a Riemann sum
        double est = riemann_estimate(p, step_constant(rat(1)), 256);
        CHECK(std::abs(est - mass.get_d()) < 0.05);
    }
}

TEST_CASE("the zero function integrates to zero") {
    SymmetricPair p(1, 2);
    CHECK(integrate_quadratic(p, step_constant(rat(0))) == 0);
}

TEST_CASE("exact integral sits inside the Riemann error envelope") {
    SymmetricPair p(1, 2);
    StepFunction phi = certificate_phi();
    Rat exact = integrate_quadratic(p, phi);
    double lip = kernel_lipschitz_bound(p).get_d();
    double m = phi.max_abs().get_d();
    for (long long N : {400, 800, 1600}) {
        double est = riemann_estimate(p, phi, N);
        // kernel variation plus step-function misalignment, both O(1/N)
        double bound = (2 * lip * m * m + 8 * m * m * 4.0) / static_cast<double>(N) * 13;
        CHECK(std::abs(est - exact.get_d()) < bound);
    }
}

TEST_CASE("Riemann estimates converge at first order") {
    SymmetricPair p(1, 2);
    StepFunction phi = certificate_phi();
    double exact = integrate_quadratic(p, phi).get_d();
    double e400 = std::abs(riemann_estimate(p, phi, 400) - exact);
    double e3200 = std::abs(riemann_estimate(p, phi, 3200) - exact);
    CHECK(e3200 < e400);
    CHECK(e3200 < 0.01);
}
