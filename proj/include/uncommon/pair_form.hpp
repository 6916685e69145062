#pragma once

#include "uncommon/counting.hpp"
#include "uncommon/linear_form.hpp"
#include "uncommon/rational.hpp"

#include <numeric>
#include <vector>

namespace uncommon {

/// Coprime pair 1 <= a < b naming the form a x1 + b x2 - a x3 - b x4.
struct SymmetricPair {
    long long a = 1;
    long long b = 2;

    SymmetricPair(long long a_, long long b_) : a(a_), b(b_) {
        if (a < 1 || a >= b) throw std::invalid_argument("need 1 <= a < b");
        if (std::gcd(a, b) != 1) throw std::invalid_argument("need gcd(a,b) = 1");
    }

    LinearForm form() const { return LinearForm({a, b, -a, -b}); }
};

/// Exact completion counts for the equation a x + b y = a x' + b y' on [n]^2,
/// in closed form (verified against enumeration in tests).
struct PairCounts {
    SymmetricPair pair;
    long long n;

    PairCounts(SymmetricPair p, long long n_) : pair(p), n(n_) {
        if (n < 1) throw std::invalid_argument("n must be positive");
    }

    /// |{(x1,x2) in [n]^2 : a x1 + b x2 = s}|
    long long c(long long s) const;
    /// |{(u,v) in [n]^2 : a u - b v = t}|
    long long e(long long t) const;

    // The six index-pattern completion counts of the quadratic-form expansion.
    long long count_given_xy(long long x, long long y) const { return c(pair.a * x + pair.b * y); }
    long long count_given_xpyp(long long xp, long long yp) const { return c(pair.a * xp + pair.b * yp); }
    long long count_given_xxp(long long x, long long xp) const;  // completions (y,y')
    long long count_given_yyp(long long y, long long yp) const;  // completions (x,x')
    long long count_given_xyp(long long x, long long yp) const { return e(pair.a * x - pair.b * yp); }
    long long count_given_yxp(long long y, long long xp) const { return e(pair.a * xp - pair.b * y); }
};

/// The unique symmetric matrix of the quadratic form xi_{a,b}, entries exact.
struct QuadFormMatrix {
    SymmetricPair pair;
    long long n = 0;
    std::vector<Rat> entries;  // row-major n*n, 0-based storage for x,y in [n]

    const Rat& at(long long x, long long y) const {
        return entries[static_cast<size_t>((x - 1) * n + (y - 1))];
    }
    Rat& at(long long x, long long y) {
        return entries[static_cast<size_t>((x - 1) * n + (y - 1))];
    }
};

/// T_L(1) for the symmetric 4-term form, exact.
Int total_count(const SymmetricPair& pair, long long n);

/// Builds m^(a,b)_n from exact completion counts. Parallel over rows.
QuadFormMatrix build_matrix(const SymmetricPair& pair, long long n);

/// xi(f) = f^T m f, exact; f given as a vector of n rationals.
Rat xi(const QuadFormMatrix& m, const std::vector<Rat>& f);

/// xi_{a,b}(f) without materializing the matrix (integer correlation kernels,
/// denominators cleared; parallel).
Rat xi_direct(const SymmetricPair& pair, long long n, const std::vector<Rat>& f);

/// T_L(g) for an integer-valued g on [n] (signed allowed), exact and fast.
Int t_integer(const SymmetricPair& pair, long long n, const std::vector<long long>& g);

/// T_L(f) for rational f via the integer kernel.
Rat t_weighted(const SymmetricPair& pair, long long n, const std::vector<Rat>& f);

/// zeta_{a,b}(f) = t(1/2+f) + t(1/2-f) - 1/8 - xi(f), exact.
Rat zeta(const SymmetricPair& pair, long long n, const std::vector<Rat>& f);

/// Same value through the algebraic shortcut zeta(f) = 2 T_L(f)/T_L(1).
Rat zeta_direct(const SymmetricPair& pair, long long n, const std::vector<Rat>& f);

/// Floating-point Fourier-side evaluation of Xi and Z over Z/NZ, N = (a+b)n,
/// compared against the exact values.
struct FourierReport {
    Rat xi_exact;
    Rat zeta_exact;
    double xi_float = 0;
    double zeta_float = 0;
    double max_dev = 0;
    bool ok = false;
};
FourierReport fourier_cross_check(const SymmetricPair& pair, long long n,
                                  const std::vector<Rat>& f, double tol);

}  // namespace uncommon
