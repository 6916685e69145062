#include "uncommon/step_function.hpp"

#include "uncommon/weights.hpp"

#include <stdexcept>

namespace uncommon {

StepFunction::StepFunction(std::vector<Rat> bps, std::vector<Rat> vals)
    : breakpoints(std::move(bps)), values(std::move(vals)) {
    if (values.empty() || breakpoints.size() != values.size() + 1)
        throw std::invalid_argument("StepFunction: need m+1 breakpoints for m values");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
        throw std::invalid_argument("StepFunction: breakpoints must start at 0 and end at 1");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
}

size_t StepFunction::piece_index(const Rat& x) const {
    if (x < 0 || x > 1) throw std::domain_error("StepFunction: x outside [0,1]");
    size_t i = 0;
    while (i + 1 < values.size() && breakpoints[i + 1] <= x) ++i;
    return i;
}

Rat StepFunction::eval(const Rat& x) const { return values[piece_index(x)]; }

double StepFunction::eval_d(double x) const {
    size_t i = 0;
    while (i + 1 < values.size() && rat_to_double(breakpoints[i + 1]) <= x) ++i;
    return rat_to_double(values[i]);
}

StepFunction StepFunction::scaled(const Rat& c) const {
    StepFunction out = *this;
    for (Rat& v : out.values) v *= c;
    return out;
}

Rat StepFunction::max_abs() const {
    Rat m = 0;
    for (const Rat& v : values) {
        Rat a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

Int StepFunction::breakpoint_denominator() const {
    return common_denominator(breakpoints);
}

StepFunction step_constant(const Rat& v) {
    return StepFunction({Rat(0), Rat(1)}, {v});
}

StepFunction certificate_phi() {
    const long long cuts[] = {0, 7, 16, 33, 67, 84, 93, 107, 116, 133, 167, 184, 193, 200};
    const long long levels[] = {-2, 10, -18, 15, -19, 9, -4, 9, -19, 15, -18, 10, -2};
    std::vector<Rat> bps, vals;
    for (long long c : cuts) bps.push_back(rat(c, 200));
    for (long long v : levels) vals.push_back(rat(v));
    return StepFunction(std::move(bps), std::move(vals));
}

nlohmann::json stepfunction_to_json(const StepFunction& phi) {
    nlohmann::json bps = nlohmann::json::array(), vals = nlohmann::json::array();
    for (const Rat& t : phi.breakpoints) bps.push_back(rat_to_json(t));
    for (const Rat& v : phi.values) vals.push_back(rat_to_json(v));
    return {{"breakpoints", bps}, {"values", vals}};
}

StepFunction stepfunction_from_json(const nlohmann::json& j) {
    std::vector<Rat> bps, vals;
    for (const auto& t : j.at("breakpoints")) bps.push_back(rat_from_json(t));
    for (const auto& v : j.at("values")) vals.push_back(rat_from_json(v));
    return StepFunction(std::move(bps), std::move(vals));
}

}  // namespace uncommon
