#pragma once

#include "uncommon/pair_form.hpp"
#include "uncommon/rational.hpp"

#include <vector>

namespace uncommon {

struct PsdVerdict {
    bool psd = false;
    // Nonempty iff indefinite: rational v with v^T M v < 0, re-verified.
    std::vector<Rat> certificate;
    Rat certificate_value;  // v^T M v for the certificate
};

/// Exact PSD decision for a symmetric rational matrix by symmetric elimination
/// with diagonal pivoting.
PsdVerdict is_psd(const std::vector<std::vector<Rat>>& M);

PsdVerdict is_psd(const QuadFormMatrix& m);

/// v^T M v, exact.
Rat quadratic_value(const std::vector<std::vector<Rat>>& M, const std::vector<Rat>& v);

}  // namespace uncommon
