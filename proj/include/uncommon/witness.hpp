#pragma once

#include "uncommon/pair_form.hpp"
#include "uncommon/step_function.hpp"

#include <optional>

namespace uncommon {

struct WitnessParams {
    SymmetricPair pair;
    StepFunction phi;
    long long n = 0;
    std::optional<Rat> epsilon;  // auto-chosen when absent
};

/// f_n : [n] -> Q, constant on blocks of ab consecutive integers; the block
/// value is the value of phi on the piece containing the block's image.
/// Throws AlignmentError if a phi breakpoint splits a block.
std::vector<Rat> block_function(const WitnessParams& params);

struct WitnessReport {
    long long n = 0;
    Rat xi_value;
    Rat zeta_value;
    Rat epsilon;
    Rat deficit;  // deficit(1/2 + eps f_n) = eps^2 xi + eps^4 zeta
    bool witness = false;
};

WitnessReport witness_uncommon(const WitnessParams& params);

/// Scans n over multiples of lcm(2ab, 2D) up to n_max (D = breakpoint
/// denominator of phi); returns the first n whose report is a witness.
std::optional<WitnessReport> scan_witness(const SymmetricPair& pair,
                                          const StepFunction& phi, long long n_max);

}  // namespace uncommon
