#include "uncommon/quadrature.hpp"

#include <stdexcept>

namespace uncommon {

SecondAntiderivative::SecondAntiderivative(const PiecewiseLinear& g)
    : ts(g.ts), vals(g.vals) {
    if (vals.front() != 0 || vals.back() != 0)
        throw std::invalid_argument("second antiderivative needs zero boundary values");
    const size_t m = ts.size() - 1;
    slopes.resize(m);
    g1.assign(ts.size(), Rat(0));
    g2.assign(ts.size(), Rat(0));
    for (size_t i = 0; i < m; ++i) {
        const Rat h = ts[i + 1] - ts[i];
        slopes[i] = (vals[i + 1] - vals[i]) / h;
        g1[i + 1] = g1[i] + vals[i] * h + slopes[i] * h * h / 2;
        g2[i + 1] = g2[i] + g1[i] * h + vals[i] * h * h / 2 + slopes[i] * h * h * h / 6;
    }
}

Rat SecondAntiderivative::eval(const Rat& x) const {
    if (x <= ts.front()) return Rat(0);
    if (x >= ts.back()) return g2.back() + g1.back() * (x - ts.back());
    size_t i = 0;
    while (i + 1 < ts.size() && ts[i + 1] <= x) ++i;
    const Rat d = x - ts[i];
    return g2[i] + g1[i] * d + vals[i] * d * d / 2 + slopes[i] * d * d * d / 6;
}

Rat integrate_bilinear(const SymmetricPair& pair, const StepFunction& phi,
                       const StepFunction& psi) {
    std::vector<KernelTerm> terms = kernel_terms(pair);
    std::vector<SecondAntiderivative> anti;
    anti.reserve(terms.size());
    for (const KernelTerm& t : terms) anti.emplace_back(t.g);

    Rat total = 0;
    for (size_t i = 0; i < phi.pieces(); ++i) {
        if (phi.values[i] == 0) continue;
        const Rat u0 = phi.breakpoints[i], u1 = phi.breakpoints[i + 1];
        for (size_t j = 0; j < psi.pieces(); ++j) {
            if (psi.values[j] == 0) continue;
            const Rat v0 = psi.breakpoints[j], v1 = psi.breakpoints[j + 1];
            Rat cell = 0;
            for (size_t t = 0; t < terms.size(); ++t) {
                const Rat &p = terms[t].p, &q = terms[t].q, &r = terms[t].r;
                const SecondAntiderivative& G2 = anti[t];
                Rat corner = G2.eval(p * u1 + q * v1 + r) - G2.eval(p * u1 + q * v0 + r) -
                             G2.eval(p * u0 + q * v1 + r) + G2.eval(p * u0 + q * v0 + r);
                cell += corner / (p * q);
            }
            total += phi.values[i] * psi.values[j] * cell;
        }
    }
    return total;
}

Rat integrate_quadratic(const SymmetricPair& pair, const StepFunction& phi) {
    return integrate_bilinear(pair, phi, phi);
}

double riemann_estimate(const SymmetricPair& pair, const StepFunction& phi, long long N) {
    if (N < 8) throw std::invalid_argument("riemann_estimate: N >= 8 required");
    std::vector<double> pv(static_cast<size_t>(N));
    for (long long i = 0; i < N; ++i)
        pv[static_cast<size_t>(i)] =
            phi.eval_d((2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(N)));
    double total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (long long i = 0; i < N; ++i) {
        const double u = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(N));
        double row = 0;
        for (long long j = 0; j < N; ++j) {
            const double v = (2.0 * static_cast<double>(j) + 1.0) / (2.0 * static_cast<double>(N));
            row += kernel_h_d(pair, u, v) * pv[static_cast<size_t>(j)];
        }
        total += pv[static_cast<size_t>(i)] * row;
    }
    return total / (static_cast<double>(N) * static_cast<double>(N));
}

}  // namespace uncommon
