#pragma once

#include "uncommon/counting.hpp"
#include "uncommon/linear_form.hpp"
#include "uncommon/rational.hpp"
#include "uncommon/weights.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace uncommon {

/// Homogeneous system B x = 0 with B a full-rank w x k integer matrix.
struct LinearSystem {
    std::vector<std::vector<long long>> rows;  // w rows of k coefficients
    int w = 0;
    int k = 0;

    explicit LinearSystem(std::vector<std::vector<long long>> rows_);
    explicit LinearSystem(const LinearForm& L) : LinearSystem(std::vector<std::vector<long long>>{L.coeffs}) {}
};

/// Streams solutions of B x = 0 in [n]^k; throws BudgetExceeded when the
/// enumeration would visit more than `budget` partial assignments.
void for_each_solution_sys(const LinearSystem& sys, long long n, long long budget,
                           const std::function<void(const std::vector<long long>&)>& fn);

long long count_solutions_sys(const LinearSystem& sys, long long n, long long budget);

long long mono_count_sys(const LinearSystem& sys, const Coloring& c, long long budget);

/// Streams solutions that contain the element v (each solution once).
void for_each_solution_containing(const LinearSystem& sys, long long n, long long v,
                                  long long budget,
                                  const std::function<void(const std::vector<long long>&)>& fn);

struct RadoCertificate {
    long long N0 = 0;
    Rat epsilon;  // N0^{-2}/2
    int r = 2;
};

/// Minimal N0 <= n_max such that every r-coloring of [N0] has a monochromatic
/// solution (DFS with pruning); nullopt when no threshold is found by n_max.
std::optional<RadoCertificate> rado_threshold(const LinearSystem& sys, int r,
                                              long long n_max,
                                              long long budget = 200000000);

struct SurvivingBlock {
    bool found = false;
    long long dilate = 0;
    std::vector<long long> tuple;  // monochromatic solution inside A
};

/// Locates a fully surviving dilate S_d = {d, 2d, ..., N0 d} inside A and the
/// monochromatic solution it carries. Fails (found = false) only when the
/// pigeonhole precondition |A| > n - floor(n/N0)/N0 is violated.
SurvivingBlock find_surviving_block(const LinearSystem& sys, const RadoCertificate& cert,
                                    const Coloring& c, const std::vector<char>& in_A,
                                    long long budget = 100000000);

struct BruteResult {
    long long min_count = 0;
    Coloring argmin;
};

BruteResult brute_min(const LinearSystem& sys, long long n, int r,
                      long long budget = 2000000000);

struct LocalResult {
    long long best_count = 0;
    Coloring coloring;
};

/// Hill climbing on single-element recolorings with exact incremental deltas;
/// deterministic given seed (std::mt19937_64 seeded with seed + restart index,
/// colors drawn uniformly per element).
LocalResult local_search(const LinearSystem& sys, long long n, int r, int restarts,
                         unsigned long long seed, long long sweep_budget = 100000);

struct GrowthRow {
    long long n = 0;
    long long count = 0;
    std::string method;
};

struct GrowthTable {
    std::vector<GrowthRow> rows;
    std::optional<double> slope;  // log-log least-squares slope; absent if any count is 0
};

GrowthTable growth_table(const LinearSystem& sys, const std::vector<long long>& n_list,
                         int r, int restarts, unsigned long long seed,
                         long long brute_budget = 50000000);

}  // namespace uncommon
