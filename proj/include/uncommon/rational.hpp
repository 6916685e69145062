#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace uncommon {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

// Accepts "3", "-7/2".
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

inline double rat_to_double(const Rat& q) {
    return q.get_d();
}

// Least common multiple of the denominators of a vector of rationals.
inline Int common_denominator(const std::vector<Rat>& v) {
    Int d = 1;
    for (const Rat& q : v) {
        Int den = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        d = d / g * den;
    }
    return d;
}

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlignmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace uncommon
