#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uncommon/eigsearch.hpp"

#include <cmath>

using namespace uncommon;

TEST_CASE("discretization samples the kernel at cell midpoints") {
    SymmetricPair p(1, 2);
    DiscretizedKernel dk = discretize(p, 8);
    CHECK(dk.at(0, 0) == doctest::Approx(kernel_h_d(p, 1.0 / 16, 1.0 / 16)).epsilon(1e-14));
    CHECK(dk.at(3, 5) == doctest::Approx(kernel_h_d(p, 7.0 / 16, 11.0 / 16)).epsilon(1e-14));
    for (long long i = 0; i < 8; ++i)
        for (long long j = 0; j < 8; ++j) CHECK(dk.at(i, j) == dk.at(j, i));
}

TEST_CASE("least eigenpair of a diagonal matrix") {
    std::vector<std::vector<double>> M{{3, 0, 0}, {0, 1, 0}, {0, 0, -2}};
    EigenResult r = least_eigenpair_dense(M, 1e-12);
    CHECK(r.lambda_min == doctest::Approx(-2.0));
    CHECK(std::abs(r.vector[2]) == doctest::Approx(1.0));
    CHECK(r.residual <= 1e-12);
}

TEST_CASE("least eigenpair of a rotated rank-deficient matrix") {
    // eigenvalues 0 and 2 with eigenvectors (1,-1)/sqrt2 and (1,1)/sqrt2
    std::vector<std::vector<double>> M{{1, 1}, {1, 1}};
    EigenResult r = least_eigenpair_dense(M, 1e-12);
    CHECK(r.lambda_min == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(r.vector[0] + r.vector[1]) < 1e-9);
}

TEST_CASE("residual contract holds on the discretized kernel") {
    SymmetricPair p(1, 2);
    DiscretizedKernel dk = discretize(p, 48);
    EigenResult r = least_eigenpair(dk, 1e-9);
    CHECK(r.residual <= 1e-9);
    double norm = 0;
    for (double x : r.vector) norm += x * x;
    CHECK(norm == doctest::Approx(1.0));
}

TEST_CASE("the (1,2) kernel has a negative least eigenvalue at moderate resolution") {
    SymmetricPair p(1, 2);
    DiscretizedKernel dk = discretize(p, 96);
    EigenResult r = least_eigenpair(dk, 1e-9);
    CHECK(r.lambda_min < -0.01);
}

TEST_CASE("round_to_step merges constant runs and scales to the level budget") {
    std::vector<double> v{0.5, 0.5, 0.5, 0.5, -1.0, -1.0, -1.0, -1.0};
    StepFunction phi = round_to_step(v, 8, 10, 4);
    REQUIRE(phi.pieces() == 2);
    CHECK(phi.breakpoints[1] == rat(1, 2));
    CHECK(phi.values[0] == 5);
    CHECK(phi.values[1] == -10);
}

TEST_CASE("round_to_step rejects a zero vector") {
    std::vector<double> v(8, 0.0);
    CHECK_THROWS(round_to_step(v, 8, 10, 4));
}

TEST_CASE("Rayleigh quotient of the rounded vector tracks the certified integral") {
    // The certified exact integral of H phi phi should be close to the
    // discrete quadratic form of phi sampled on the grid, scaled by 1/N^2.
    SymmetricPair p(1, 2);
    long long N = 96;
    DiscretizedKernel dk = discretize(p, N);
    EigenResult r = least_eigenpair(dk, 1e-9);
    StepFunction phi = round_to_step(r.vector, N, 19, 96);
    CertifyResult cert = certify(p, phi);
    double discrete = 0;
    for (long long i = 0; i < N; ++i) {
        double pi = phi.eval_d((2.0 * static_cast<double>(i) + 1) / (2.0 * static_cast<double>(N)));
        for (long long j = 0; j < N; ++j) {
            double pj =
                phi.eval_d((2.0 * static_cast<double>(j) + 1) / (2.0 * static_cast<double>(N)));
            discrete += dk.at(i, j) * pi * pj;
        }
    }
    discrete /= static_cast<double>(N) * static_cast<double>(N);
    CHECK(std::abs(discrete - cert.value.get_d()) < 0.05 * std::abs(discrete) + 0.05);
    CHECK(cert.uncommon);
}

TEST_CASE("the full discovery loop certifies the (1,2) pair") {
    SymmetricPair p(1, 2);
    DiscretizedKernel dk = discretize(p, 64);
    EigenResult r = least_eigenpair(dk, 1e-9);
    REQUIRE(r.lambda_min < 0);
    StepFunction phi = round_to_step(r.vector, 64, 19, 64);
    CertifyResult cert = certify(p, phi);
    CHECK(cert.uncommon);
    CHECK(cert.value < 0);
}

TEST_CASE("scan over small pairs certifies (1,2) and keeps exact values") {
    std::vector<ScanRow> rows = scan_pairs(1, 3, 48, 1e-6);
    REQUIRE(rows.size() == 2);  // (1,2) and (1,3)
    bool found12 = false;
    for (const ScanRow& row : rows) {
        CHECK(row.error.empty());
        if (row.a == 1 && row.b == 2) {
            found12 = true;
            CHECK(row.lambda_min < 0);
            REQUIRE(row.certified.has_value());
            CHECK(*row.certified < 0);
            REQUIRE(row.phi.has_value());
            CHECK(integrate_quadratic(SymmetricPair(1, 2), *row.phi) == *row.certified);
        }
    }
    CHECK(found12);
}
