#pragma once

#include "uncommon/pair_form.hpp"
#include "uncommon/quadrature.hpp"
#include "uncommon/step_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uncommon {

/// Midpoint discretization M[i][j] = H((2i+1)/2N, (2j+1)/2N).
struct DiscretizedKernel {
    SymmetricPair pair;
    long long N = 0;
    std::vector<double> m;  // row-major N*N

    double at(long long i, long long j) const {
        return m[static_cast<size_t>(i * N + j)];
    }
};

DiscretizedKernel discretize(const SymmetricPair& pair, long long N);

struct EigenResult {
    double lambda_min = 0;
    std::vector<double> vector;  // unit 2-norm
    double residual = 0;         // ||M v - lambda v||_2
};

struct ConvergenceError : std::runtime_error {
    EigenResult best;
    ConvergenceError(const std::string& msg, EigenResult b)
        : std::runtime_error(msg), best(std::move(b)) {}
};

/// Least eigenpair by cyclic Jacobi sweeps; residual <= tol on success.
EigenResult least_eigenpair(const DiscretizedKernel& dk, double tol);

/// Dense symmetric eigen-solve for test matrices (same Jacobi engine).
EigenResult least_eigenpair_dense(const std::vector<std::vector<double>>& M, double tol);

/// Rounds a grid vector to a step function: breakpoints on the 1/denom grid,
/// integer values with max magnitude about `levels`, equal neighbors merged.
/// Throws std::runtime_error when the rounding collapses to zero.
StepFunction round_to_step(const std::vector<double>& v, long long N, long long levels,
                           long long denom);

struct CertifyResult {
    Rat value;       // exact integral of H phi phi
    bool uncommon;   // value < 0: H not PSD, equation uncommon
};

CertifyResult certify(const SymmetricPair& pair, const StepFunction& phi);

struct ScanRow {
    long long a = 0, b = 0, N = 0;
    double lambda_min = 0;
    std::optional<Rat> certified;  // exact negative integral, when found
    std::optional<StepFunction> phi;
    std::string error;
};

std::vector<ScanRow> scan_pairs(long long a_max, long long b_max, long long N, double tol);

}  // namespace uncommon
