#include "uncommon/eigsearch.hpp"

#include <cmath>
#include <stdexcept>

namespace uncommon {

DiscretizedKernel discretize(const SymmetricPair& pair, long long N) {
    if (N < 8) throw std::invalid_argument("discretize: N >= 8 required");
    DiscretizedKernel dk{pair, N, std::vector<double>(static_cast<size_t>(N * N))};
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < N; ++i) {
        const double u = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(N));
        for (long long j = 0; j < N; ++j) {
            const double v = (2.0 * static_cast<double>(j) + 1.0) / (2.0 * static_cast<double>(N));
            dk.m[static_cast<size_t>(i * N + j)] = kernel_h_d(pair, u, v);
        }
    }
    return dk;
}

namespace {

EigenResult jacobi_least(std::vector<double> A, long long n, double tol) {
    // A is row-major n*n, symmetric; V accumulates rotations.
    std::vector<double> V(static_cast<size_t>(n * n), 0.0);
    for (long long i = 0; i < n; ++i) V[static_cast<size_t>(i * n + i)] = 1.0;
    const std::vector<double> orig = A;
    auto at = [&](std::vector<double>& m, long long i, long long j) -> double& {
        return m[static_cast<size_t>(i * n + j)];
    };

    auto residual_for = [&](long long col, double lambda) {
        double r2 = 0;
        for (long long i = 0; i < n; ++i) {
            double mv = 0;
            for (long long j = 0; j < n; ++j)
                mv += orig[static_cast<size_t>(i * n + j)] * V[static_cast<size_t>(j * n + col)];
            const double d = mv - lambda * V[static_cast<size_t>(i * n + col)];
            r2 += d * d;
        }
        return std::sqrt(r2);
    };

    auto extract = [&]() {
        long long best = 0;
        for (long long i = 1; i < n; ++i)
            if (at(A, i, i) < at(A, best, best)) best = i;
        EigenResult res;
        res.lambda_min = at(A, best, best);
        res.vector.resize(static_cast<size_t>(n));
        double norm = 0;
        for (long long i = 0; i < n; ++i) {
            res.vector[static_cast<size_t>(i)] = V[static_cast<size_t>(i * n + best)];
            norm += res.vector[static_cast<size_t>(i)] * res.vector[static_cast<size_t>(i)];
        }
        norm = std::sqrt(norm);
        for (double& x : res.vector) x /= norm;
        res.residual = residual_for(best, res.lambda_min);
        return res;
    };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (long long p = 0; p < n; ++p)
            for (long long q = p + 1; q < n; ++q) off += at(A, p, q) * at(A, p, q);
        if (off < 1e-300) break;
        for (long long p = 0; p < n; ++p) {
            for (long long q = p + 1; q < n; ++q) {
                const double apq = at(A, p, q);
                if (apq == 0.0) continue;
                const double theta = (at(A, q, q) - at(A, p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (long long i = 0; i < n; ++i) {
                    const double aip = at(A, i, p), aiq = at(A, i, q);
                    at(A, i, p) = c * aip - s * aiq;
                    at(A, i, q) = s * aip + c * aiq;
                }
                for (long long j = 0; j < n; ++j) {
                    const double apj = at(A, p, j), aqj = at(A, q, j);
                    at(A, p, j) = c * apj - s * aqj;
                    at(A, q, j) = s * apj + c * aqj;
                }
                for (long long i = 0; i < n; ++i) {
                    const double vip = at(V, i, p), viq = at(V, i, q);
                    at(V, i, p) = c * vip - s * viq;
                    at(V, i, q) = s * vip + c * viq;
                }
            }
        }
        EigenResult res = extract();
        if (res.residual <= tol) return res;
    }
    EigenResult best = extract();
    if (best.residual <= tol) return best;
    throw ConvergenceError("Jacobi iteration did not reach the requested residual", best);
}

}  // namespace

EigenResult least_eigenpair(const DiscretizedKernel& dk, double tol) {
    if (tol <= 0) throw std::invalid_argument("least_eigenpair: tol must be positive");
    return jacobi_least(dk.m, dk.N, tol);
}

EigenResult least_eigenpair_dense(const std::vector<std::vector<double>>& M, double tol) {
    const long long n = static_cast<long long>(M.size());
    std::vector<double> flat(static_cast<size_t>(n * n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            flat[static_cast<size_t>(i * n + j)] = M[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return jacobi_least(std::move(flat), n, tol);
}

StepFunction round_to_step(const std::vector<double>& v, long long N, long long levels,
                           long long denom) {
    if (levels < 2) throw std::invalid_argument("round_to_step: levels >= 2 required");
    if (denom < 1 || denom > N)
        throw std::invalid_argument("round_to_step: need 1 <= denom <= N");
    std::vector<double> avg(static_cast<size_t>(denom), 0.0);
    std::vector<long long> cnt(static_cast<size_t>(denom), 0);
    for (long long i = 0; i < N; ++i) {
        long long slot = i * denom / N;
        avg[static_cast<size_t>(slot)] += v[static_cast<size_t>(i)];
        cnt[static_cast<size_t>(slot)] += 1;
    }
    double maxabs = 0;
    for (long long s = 0; s < denom; ++s) {
        avg[static_cast<size_t>(s)] /= static_cast<double>(cnt[static_cast<size_t>(s)]);
        maxabs = std::max(maxabs, std::abs(avg[static_cast<size_t>(s)]));
    }
    if (maxabs == 0) throw std::runtime_error("round_to_step: zero input vector");
    const double scale = static_cast<double>(levels) / maxabs;
    std::vector<Rat> bps{Rat(0)}, vals;
    for (long long s = 0; s < denom; ++s) {
        long long value = std::llround(avg[static_cast<size_t>(s)] * scale);
        if (!vals.empty() && vals.back() == rat(value)) {
            bps.back() = rat(s + 1, denom);
            continue;
        }
        vals.push_back(rat(value));
        bps.push_back(rat(s + 1, denom));
    }
    bool all_zero = true;
    for (const Rat& x : vals)
        if (x != 0) all_zero = false;
    if (all_zero) throw std::runtime_error("round_to_step: degenerate all-zero rounding");
    return StepFunction(std::move(bps), std::move(vals));
}

CertifyResult certify(const SymmetricPair& pair, const StepFunction& phi) {
    Rat value = integrate_quadratic(pair, phi);
    return CertifyResult{value, value < 0};
}

std::vector<ScanRow> scan_pairs(long long a_max, long long b_max, long long N, double tol) {
    if (a_max < 1 || b_max < 2) throw std::invalid_argument("scan_pairs: bounds too small");
    std::vector<SymmetricPair> pairs;
    for (long long a = 1; a <= a_max; ++a)
        for (long long b = a + 1; b <= b_max; ++b)
            if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
    std::vector<ScanRow> rows(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t idx = 0; idx < pairs.size(); ++idx) {
        const SymmetricPair& p = pairs[idx];
        ScanRow row;
        row.a = p.a;
        row.b = p.b;
        row.N = N;
        try {
            DiscretizedKernel dk = discretize(p, N);
            EigenResult eig = least_eigenpair(dk, 1e-9);
            row.lambda_min = eig.lambda_min;
            if (eig.lambda_min < -tol) {
                const long long denom = std::min<long long>(N, 200);
                StepFunction phi = round_to_step(eig.vector, N, 19, denom);
                CertifyResult cert = certify(p, phi);
                if (cert.uncommon) {
                    row.certified = cert.value;
                    row.phi = phi;
                }
            }
        } catch (const std::exception& ex) {
            row.error = ex.what();
        }
        rows[idx] = row;
    }
    return rows;
}

}  // namespace uncommon
