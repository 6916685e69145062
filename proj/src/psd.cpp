#include "uncommon/psd.hpp"

#include <stdexcept>

namespace uncommon {

Rat quadratic_value(const std::vector<std::vector<Rat>>& M, const std::vector<Rat>& v) {
    const size_t n = M.size();
    Rat total = 0;
    for (size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        Rat row = 0;
        for (size_t j = 0; j < n; ++j) row += M[i][j] * v[j];
        total += v[i] * row;
    }
    return total;
}

PsdVerdict is_psd(const std::vector<std::vector<Rat>>& M) {
    const size_t n = M.size();
    for (size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) throw std::invalid_argument("matrix not square");
        for (size_t j = i + 1; j < n; ++j)
            if (M[i][j] != M[j][i]) throw std::invalid_argument("matrix not symmetric");
    }

    // A holds the residual form on the active set; w[i] is the original-space
    // vector realizing coordinate i, so A[i][j] = w_i^T M w_j throughout.
    std::vector<std::vector<Rat>> A = M;
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) w[i][i] = 1;
    std::vector<char> active(n, 1);

    auto finish_indefinite = [&](std::vector<Rat> cert) {
        Rat val = quadratic_value(M, cert);
        if (val >= 0)
            throw std::logic_error("internal error: PSD certificate failed re-verification");
        return PsdVerdict{false, std::move(cert), val};
    };

    for (;;) {
        // Pivot on any active index with positive diagonal.
        size_t pivot = n;
        for (size_t i = 0; i < n; ++i)
            if (active[i] && A[i][i] > 0) {
                pivot = i;
                break;
            }
        if (pivot != n) {
            const Rat d = A[pivot][pivot];
            active[pivot] = 0;
            std::vector<Rat> coef(n, Rat(0));
            for (size_t i = 0; i < n; ++i)
                if (active[i]) coef[i] = A[i][pivot] / d;
            for (size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                if (coef[i] == 0) continue;
                for (size_t j = 0; j < n; ++j) {
                    if (!active[j]) continue;
                    A[i][j] -= coef[i] * A[pivot][j];
                }
                for (size_t t = 0; t < n; ++t) w[i][t] -= coef[i] * w[pivot][t];
            }
            continue;
        }
        // No positive diagonal left: a negative one is a certificate.
        for (size_t i = 0; i < n; ++i)
            if (active[i] && A[i][i] < 0) return finish_indefinite(w[i]);
        // All active diagonals zero: any nonzero off-diagonal entry gives a
        // 2x2 certificate; otherwise the residual form vanishes.
        for (size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (size_t j = i + 1; j < n; ++j) {
                if (!active[j] || A[i][j] == 0) continue;
                std::vector<Rat> cert(n);
                for (size_t t = 0; t < n; ++t)
                    cert[t] = (A[i][j] > 0) ? Rat(w[i][t] - w[j][t]) : Rat(w[i][t] + w[j][t]);
                return finish_indefinite(std::move(cert));
            }
        }
        return PsdVerdict{true, {}, Rat(0)};
    }
}

PsdVerdict is_psd(const QuadFormMatrix& m) {
    const size_t n = static_cast<size_t>(m.n);
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            M[i][j] = m.at(static_cast<long long>(i + 1), static_cast<long long>(j + 1));
    return is_psd(M);
}

}  // namespace uncommon
