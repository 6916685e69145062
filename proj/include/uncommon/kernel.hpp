#pragma once

#include "uncommon/pair_form.hpp"
#include "uncommon/rational.hpp"

#include <vector>

namespace uncommon {

/// alpha_{a,b}: trapezoid supported on [0, a+b], plateau 1/b on [a,b].
Rat alpha(const SymmetricPair& pair, const Rat& u);

/// beta: tent supported on [-1,1] with beta(0) = 1.
Rat beta(const Rat& u);

/// H_{a,b}(u,v) for u,v in [0,1]^2, exact; throws std::domain_error outside.
Rat kernel_h(const SymmetricPair& pair, const Rat& u, const Rat& v);

double alpha_d(long long a, long long b, double u);
double beta_d(double u);
double kernel_h_d(const SymmetricPair& pair, double u, double v);

/// Continuous piecewise-linear function, zero outside [ts.front(), ts.back()];
/// vals[i] is the value at ts[i] (vals.front() and vals.back() must be 0).
struct PiecewiseLinear {
    std::vector<Rat> ts;
    std::vector<Rat> vals;

    Rat eval(const Rat& x) const;
};

PiecewiseLinear alpha_pl(const SymmetricPair& pair);
PiecewiseLinear beta_pl();

/// One summand of H written as g(p*u + q*v + r); the six of them sum to H.
struct KernelTerm {
    PiecewiseLinear g;
    Rat p, q, r;
};

std::vector<KernelTerm> kernel_terms(const SymmetricPair& pair);

/// A Lipschitz constant for u -> H(u,v) (and by symmetry v -> H(u,v)).
Rat kernel_lipschitz_bound(const SymmetricPair& pair);

}  // namespace uncommon
