#include "uncommon/witness.hpp"

#include <numeric>
#include <stdexcept>

namespace uncommon {

std::vector<Rat> block_function(const WitnessParams& params) {
    const long long ab = params.pair.a * params.pair.b;
    const long long n = params.n;
    if (n < 1 || n % ab != 0)
        throw std::invalid_argument("block_function: n must be a positive multiple of a*b");
    std::vector<Rat> f(static_cast<size_t>(n));
    const StepFunction& phi = params.phi;
    for (long long i = 0; i < n / ab; ++i) {
        const Rat lo = rat(ab * i, n);
        const Rat hi = rat(ab * (i + 1), n);
        size_t piece = phi.piece_index(lo);
        if (phi.breakpoints[piece + 1] < hi)
            throw AlignmentError("block_function: phi breakpoint splits a block");
        for (long long j = 1; j <= ab; ++j)
            f[static_cast<size_t>(ab * i + j - 1)] = phi.values[piece];
    }
    return f;
}

WitnessReport witness_uncommon(const WitnessParams& params) {
    std::vector<Rat> f = block_function(params);
    const SymmetricPair& pair = params.pair;
    WitnessReport rep;
    rep.n = params.n;
    rep.xi_value = xi_direct(pair, params.n, f);
    rep.zeta_value = zeta(pair, params.n, f);

    Rat maxabs = 0;
    for (const Rat& v : f) {
        Rat a = abs(v);
        if (a > maxabs) maxabs = a;
    }
    const Rat cap = maxabs == 0 ? Rat(1, 2) : Rat(1, 2) / maxabs;

    auto deficit_at = [&](const Rat& eps) -> Rat {
        return eps * eps * rep.xi_value + eps * eps * eps * eps * rep.zeta_value;
    };

    if (params.epsilon) {
        if (*params.epsilon <= 0 || *params.epsilon > cap)
            throw std::invalid_argument("epsilon outside the range-feasible interval (0, 1/(2 max|f|)]");
        rep.epsilon = *params.epsilon;
    } else {
        // Range-feasible minimizer of eps^2 xi + eps^4 zeta: eps^2 = -xi/(2 zeta)
        // capped at cap; approached through a dyadic ladder to stay rational.
        Rat best_eps = cap;
        Rat best = deficit_at(cap);
        Rat eps = cap;
        for (int i = 0; i < 64; ++i) {
            eps /= 2;
            Rat d = deficit_at(eps);
            if (d < best) {
                best = d;
                best_eps = eps;
            }
        }
        rep.epsilon = best_eps;
    }
    rep.deficit = deficit_at(rep.epsilon);
    rep.witness = rep.deficit < 0;
    return rep;
}

std::optional<WitnessReport> scan_witness(const SymmetricPair& pair,
                                          const StepFunction& phi, long long n_max) {
    Int denom = phi.breakpoint_denominator();
    if (!denom.fits_slong_p())
        throw std::invalid_argument("scan_witness: breakpoint denominator too large");
    const long long D = denom.get_si();
    const long long step = std::lcm(2 * pair.a * pair.b, 2 * D);
    for (long long n = step; n <= n_max; n += step) {
        WitnessParams params{pair, phi, n, std::nullopt};
        WitnessReport rep;
        try {
            rep = witness_uncommon(params);
        } catch (const AlignmentError&) {
            continue;  // this n does not align phi's breakpoints with blocks
        }
        if (rep.witness && rep.xi_value < 0) return rep;
    }
    return std::nullopt;
}

}  // namespace uncommon
