#pragma once

#include "uncommon/kernel.hpp"
#include "uncommon/pair_form.hpp"
#include "uncommon/step_function.hpp"

namespace uncommon {

/// Exact piecewise-cubic second antiderivative of a compactly supported
/// continuous piecewise-linear g, with G2 = G2' = 0 left of the support.
struct SecondAntiderivative {
    std::vector<Rat> ts;
    std::vector<Rat> vals;    // g at breakpoints
    std::vector<Rat> slopes;  // per piece
    std::vector<Rat> g1;      // first antiderivative at breakpoints
    std::vector<Rat> g2;      // second antiderivative at breakpoints

    explicit SecondAntiderivative(const PiecewiseLinear& g);
    Rat eval(const Rat& x) const;
};

/// Exact double integral of H_{a,b}(u,v) phi(u) psi(v) over [0,1]^2.
Rat integrate_bilinear(const SymmetricPair& pair, const StepFunction& phi,
                       const StepFunction& psi);

Rat integrate_quadratic(const SymmetricPair& pair, const StepFunction& phi);

/// Midpoint-rule float estimate at resolution N (N >= 8); the absolute error
/// is O(Lip(H) * max|phi|^2 / N).
double riemann_estimate(const SymmetricPair& pair, const StepFunction& phi, long long N);

}  // namespace uncommon
