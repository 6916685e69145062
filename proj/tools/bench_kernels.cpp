// Compares the serial exact-rational reference paths against the
// integer-kernel implementations (OpenMP-parallel when available).
#include "uncommon/counting.hpp"
#include "uncommon/pair_form.hpp"
#include "uncommon/quadrature.hpp"

#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace uncommon;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Rat> random_signed(long long n, std::mt19937_64& rng) {
    std::vector<Rat> f;
    for (long long i = 0; i < n; ++i)
        f.push_back(rat(static_cast<long long>(rng() % 9) - 4,
                        1 + static_cast<long long>(rng() % 4)));
    return f;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (no OpenMP)\n";
#endif
    std::mt19937_64 rng(12345);
    SymmetricPair p(1, 2);

    std::cout << "\n-- xi: rational matrix reference vs integer kernels --\n";
    for (long long n : {50, 100, 200}) {
        std::vector<Rat> f = random_signed(n, rng);
        auto t0 = Clock::now();
        QuadFormMatrix m = build_matrix(p, n);
        Rat ref = xi(m, f);
        double t_ref = seconds_since(t0);
        t0 = Clock::now();
        Rat fast = xi_direct(p, n, f);
        double t_fast = seconds_since(t0);
        std::cout << "n = " << n << ": matrix " << t_ref << " s, direct " << t_fast
                  << " s, agree = " << (ref == fast) << "\n";
    }

    std::cout << "\n-- T_L(f): naive enumeration vs integer kernels --\n";
    for (long long n : {20, 40, 60}) {
        std::vector<Rat> f = random_signed(n, rng);
        auto t0 = Clock::now();
        Rat ref = weighted_count(p.form(), WeightFn(n, f, false));
        double t_ref = seconds_since(t0);
        t0 = Clock::now();
        Rat fast = t_weighted(p, n, f);
        double t_fast = seconds_since(t0);
        std::cout << "n = " << n << ": naive " << t_ref << " s, kernel " << t_fast
                  << " s, agree = " << (ref == fast) << "\n";
    }

    std::cout << "\n-- Riemann sums over the kernel (parallel loop) --\n";
    StepFunction phi = certificate_phi();
    for (long long N : {512, 1024, 2048}) {
        auto t0 = Clock::now();
        double est = riemann_estimate(p, phi, N);
        std::cout << "N = " << N << ": " << seconds_since(t0) << " s, estimate " << est << "\n";
    }
    std::cout << "exact value: " << integrate_quadratic(p, phi).get_d() << "\n";
    return 0;
}
