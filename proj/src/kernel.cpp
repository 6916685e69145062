#include "uncommon/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace uncommon {

Rat alpha(const SymmetricPair& pair, const Rat& u) {
    const Rat a = rat(pair.a), b = rat(pair.b);
    if (u <= 0 || u >= a + b) return Rat(0);
    if (u <= a) return u / (a * b);
    if (u <= b) return Rat(1) / b;
    return (a + b - u) / (a * b);
}

Rat beta(const Rat& u) {
    if (u <= -1 || u >= 1) return Rat(0);
    if (u <= 0) return u + 1;
    return 1 - u;
}

Rat kernel_h(const SymmetricPair& pair, const Rat& u, const Rat& v) {
    if (u < 0 || u > 1 || v < 0 || v > 1)
        throw std::domain_error("kernel_h: (u,v) outside [0,1]^2");
    const Rat a = rat(pair.a), b = rat(pair.b);
    return alpha(pair, a * u + b * v) + alpha(pair, a * v + b * u) +
           alpha(pair, a * (1 - v) + b * u) + alpha(pair, a * (1 - u) + b * v) +
           beta(a * (u - v) / b) / b + beta(b * (u - v) / a) / a;
}

double alpha_d(long long a, long long b, double u) {
    if (u <= 0 || u >= static_cast<double>(a + b)) return 0.0;
    if (u <= static_cast<double>(a)) return u / static_cast<double>(a * b);
    if (u <= static_cast<double>(b)) return 1.0 / static_cast<double>(b);
    return (static_cast<double>(a + b) - u) / static_cast<double>(a * b);
}

double beta_d(double u) {
    if (u <= -1.0 || u >= 1.0) return 0.0;
    return u <= 0.0 ? u + 1.0 : 1.0 - u;
}

double kernel_h_d(const SymmetricPair& pair, double u, double v) {
    const double a = static_cast<double>(pair.a), b = static_cast<double>(pair.b);
    return alpha_d(pair.a, pair.b, a * u + b * v) + alpha_d(pair.a, pair.b, a * v + b * u) +
           alpha_d(pair.a, pair.b, a * (1 - v) + b * u) +
           alpha_d(pair.a, pair.b, a * (1 - u) + b * v) +
           beta_d(a * (u - v) / b) / b + beta_d(b * (u - v) / a) / a;
}

Rat PiecewiseLinear::eval(const Rat& x) const {
    if (x <= ts.front() || x >= ts.back()) return Rat(0);
    // Last breakpoint <= x.
    size_t i = 0;
    while (i + 1 < ts.size() && ts[i + 1] <= x) ++i;
    if (ts[i] == x) return vals[i];
    const Rat t = (x - ts[i]) / (ts[i + 1] - ts[i]);
    return vals[i] + t * (vals[i + 1] - vals[i]);
}

PiecewiseLinear alpha_pl(const SymmetricPair& pair) {
    const Rat a = rat(pair.a), b = rat(pair.b);
    return PiecewiseLinear{{Rat(0), a, b, a + b},
                           {Rat(0), Rat(1) / b, Rat(1) / b, Rat(0)}};
}

PiecewiseLinear beta_pl() {
    return PiecewiseLinear{{Rat(-1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}};
}

std::vector<KernelTerm> kernel_terms(const SymmetricPair& pair) {
    const Rat a = rat(pair.a), b = rat(pair.b);
    PiecewiseLinear al = alpha_pl(pair);
    // (1/b) beta(a w / b) as a function of w, and the (1/a) sibling.
    PiecewiseLinear tent_b{{-b / a, Rat(0), b / a}, {Rat(0), Rat(1) / b, Rat(0)}};
    PiecewiseLinear tent_a{{-a / b, Rat(0), a / b}, {Rat(0), Rat(1) / a, Rat(0)}};
    return {
        {al, a, b, Rat(0)},   // alpha(a u + b v)
        {al, b, a, Rat(0)},   // alpha(a v + b u)
        {al, b, -a, a},       // alpha(a(1-v) + b u)
        {al, -a, b, a},       // alpha(a(1-u) + b v)
        {tent_b, Rat(1), Rat(-1), Rat(0)},  // b^{-1} beta(a(u-v)/b)
        {tent_a, Rat(1), Rat(-1), Rat(0)},  // a^{-1} beta(b(u-v)/a)
    };
}

Rat kernel_lipschitz_bound(const SymmetricPair& pair) {
    const Rat a = rat(pair.a), b = rat(pair.b);
    // Sum over terms of |du coefficient| * max slope of the piece functions.
    return 2 / a + 2 / b + a / (b * b) + b / (a * a);
}

}  // namespace uncommon
