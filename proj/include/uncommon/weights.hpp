#pragma once

#include "uncommon/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uncommon {

/// f : [n] -> Q, indexed 1..n (values[x-1] = f(x)).
/// In probability mode all values must lie in [0,1]; signed mode is
/// unrestricted (test functions).
struct WeightFn {
    long long n = 0;
    std::vector<Rat> values;
    bool probability_mode = true;

    WeightFn() = default;
    WeightFn(long long n_, std::vector<Rat> vals, bool prob = true)
        : n(n_), values(std::move(vals)), probability_mode(prob) {
        validate();
    }

    static WeightFn constant(long long n, const Rat& v, bool prob = true) {
        return WeightFn(n, std::vector<Rat>(static_cast<size_t>(n), v), prob);
    }

    const Rat& at(long long x) const { return values[static_cast<size_t>(x - 1)]; }
    Rat& at(long long x) { return values[static_cast<size_t>(x - 1)]; }

    void validate() const {
        if (n < 1) throw std::invalid_argument("WeightFn: n must be positive");
        if (static_cast<long long>(values.size()) != n)
            throw std::invalid_argument("WeightFn: length mismatch");
        if (probability_mode) {
            for (const Rat& v : values)
                if (v < 0 || v > 1)
                    throw std::invalid_argument("WeightFn: value outside [0,1] in probability mode");
        }
    }

    WeightFn complement() const {  // 1 - f
        WeightFn g = *this;
        for (Rat& v : g.values) v = 1 - v;
        return g;
    }
};

/// r-coloring of [n]; colors[x-1] in {0,...,r-1}.
struct Coloring {
    long long n = 0;
    int r = 2;
    std::vector<uint8_t> colors;

    Coloring() = default;
    Coloring(long long n_, int r_, std::vector<uint8_t> cs)
        : n(n_), r(r_), colors(std::move(cs)) {
        validate();
    }

    uint8_t at(long long x) const { return colors[static_cast<size_t>(x - 1)]; }

    void validate() const {
        if (n < 1) throw std::invalid_argument("Coloring: n must be positive");
        if (r < 1) throw std::invalid_argument("Coloring: r must be positive");
        if (static_cast<long long>(colors.size()) != n)
            throw std::invalid_argument("Coloring: length mismatch");
        for (uint8_t c : colors)
            if (c >= r) throw std::invalid_argument("Coloring: color out of range");
    }

    WeightFn indicator(int color) const {
        std::vector<Rat> vals(static_cast<size_t>(n));
        for (size_t i = 0; i < vals.size(); ++i) vals[i] = (colors[i] == color) ? 1 : 0;
        return WeightFn(n, std::move(vals), true);
    }
};

// ---- JSON serialization ----
// WeightFn: {"n":..,"mode":"probability"|"signed","values":[{"num":..,"den":..},...]}
// Coloring: {"n":..,"r":..,"colors":[...]}

inline nlohmann::json rat_to_json(const Rat& q) {
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return rat(j.get<long long>());
    if (j.is_object()) {
        Int num(j.at("num").is_string() ? j.at("num").get<std::string>()
                                        : std::to_string(j.at("num").get<long long>()));
        Int den(j.at("den").is_string() ? j.at("den").get<std::string>()
                                        : std::to_string(j.at("den").get<long long>()));
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    throw std::invalid_argument("cannot parse rational from JSON");
}

inline nlohmann::json weightfn_to_json(const WeightFn& f) {
    nlohmann::json vals = nlohmann::json::array();
    for (const Rat& v : f.values) vals.push_back(rat_to_json(v));
    return {{"n", f.n},
            {"mode", f.probability_mode ? "probability" : "signed"},
            {"values", vals}};
}

inline WeightFn weightfn_from_json(const nlohmann::json& j) {
    std::vector<Rat> vals;
    for (const auto& v : j.at("values")) vals.push_back(rat_from_json(v));
    bool prob = j.value("mode", std::string("probability")) == "probability";
    return WeightFn(j.at("n").get<long long>(), std::move(vals), prob);
}

inline nlohmann::json coloring_to_json(const Coloring& c) {
    return {{"n", c.n}, {"r", c.r}, {"colors", c.colors}};
}

inline Coloring coloring_from_json(const nlohmann::json& j) {
    std::vector<uint8_t> cs;
    for (const auto& v : j.at("colors")) cs.push_back(v.get<uint8_t>());
    return Coloring(j.at("n").get<long long>(), j.at("r").get<int>(), std::move(cs));
}

}  // namespace uncommon
