#pragma once

#include "uncommon/linear_form.hpp"
#include "uncommon/rational.hpp"
#include "uncommon/weights.hpp"

#include <functional>

namespace uncommon {

/// Modulus for counting solutions of L = 0 in [n]^k through Z/NZ without
/// wraparound: N must exceed both the positive and the negative part of the
/// range of the form on [n]^k.
struct ConvolutionPlan {
    long long modulus = 0;
    LinearForm form;

    ConvolutionPlan(long long N, LinearForm L) : modulus(N), form(std::move(L)) {}

    bool valid_for(long long n) const {
        long long pos = 0, neg = 0;
        for (long long a : form.coeffs) {
            if (a > 0) pos += a * n;
            else neg += -a * n;
        }
        return modulus > pos && modulus > neg;
    }

    static ConvolutionPlan default_for(const LinearForm& L, long long n) {
        long long s = 0;
        for (long long a : L.coeffs) s += (a > 0 ? a : -a);
        return ConvolutionPlan(s * n + 1, L);
    }
};

/// |{x in [n]^k : L(x) = 0}| = T_L(1), by enumeration over k-1 free variables.
long long count_solutions(const LinearForm& L, long long n);

/// T_L(f), exact; naive enumeration (k <= 6).
Rat weighted_count(const LinearForm& L, const WeightFn& f);

/// T_L(f) via exact integer convolution over Z/NZ (denominators cleared).
Rat count_via_convolution(const ConvolutionPlan& plan, const WeightFn& f);

/// t_L(f) = T_L(f)/T_L(1); throws std::domain_error when T_L(1) = 0.
Rat t_density(const LinearForm& L, const WeightFn& f);

/// Monochromatic solution count of L = 0 under coloring c.
long long mono_count(const LinearForm& L, const Coloring& c);

/// t_L(f) + t_L(1-f) - 2^{1-k}; requires probability mode.
Rat deficit(const LinearForm& L, const WeightFn& f);

/// Streams every solution tuple of L(x)=0 with x in [n]^k to fn.
void for_each_solution(const LinearForm& L, long long n,
                       const std::function<void(const std::vector<long long>&)>& fn);

}  // namespace uncommon
