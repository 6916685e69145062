#pragma once

#include "uncommon/rational.hpp"

#include <json.hpp>

#include <vector>

namespace uncommon {

/// Piecewise-constant phi : [0,1] -> Q; value values[i] on [breakpoints[i], breakpoints[i+1]).
struct StepFunction {
    std::vector<Rat> breakpoints;  // 0 = t_0 < ... < t_m = 1
    std::vector<Rat> values;       // m values

    StepFunction() = default;
    StepFunction(std::vector<Rat> bps, std::vector<Rat> vals);

    size_t pieces() const { return values.size(); }
    Rat eval(const Rat& x) const;
    double eval_d(double x) const;
    /// Index of the piece containing x (the last piece is closed on the right).
    size_t piece_index(const Rat& x) const;

    StepFunction scaled(const Rat& c) const;
    Rat max_abs() const;
    /// LCM of the breakpoint denominators.
    Int breakpoint_denominator() const;
};

StepFunction step_constant(const Rat& v);

/// The 13-piece test function with breakpoints at multiples of 1/200 used to
/// certify that H_{1,2} is not positive semidefinite.
StepFunction certificate_phi();

nlohmann::json stepfunction_to_json(const StepFunction& phi);
StepFunction stepfunction_from_json(const nlohmann::json& j);

}  // namespace uncommon
