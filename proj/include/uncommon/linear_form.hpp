#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace uncommon {

/// Linear form a_1 x_1 + ... + a_k x_k with nonzero integer coefficients,
/// at least one positive and one negative.
struct LinearForm {
    std::vector<long long> coeffs;

    explicit LinearForm(std::vector<long long> cs) : coeffs(std::move(cs)) {
        validate();
    }

    int k() const { return static_cast<int>(coeffs.size()); }

    void validate() const {
        if (coeffs.size() < 2)
            throw std::invalid_argument("linear form needs at least 2 coefficients");
        bool pos = false, neg = false;
        for (long long a : coeffs) {
            if (a == 0) throw std::invalid_argument("zero coefficient in linear form");
            (a > 0 ? pos : neg) = true;
        }
        if (!pos || !neg)
            throw std::invalid_argument(
                "linear form needs at least one positive and one negative coefficient");
    }
};

inline LinearForm schur_form() { return LinearForm({1, 1, -1}); }
inline LinearForm three_ap_form() { return LinearForm({1, -2, 1}); }

}  // namespace uncommon
