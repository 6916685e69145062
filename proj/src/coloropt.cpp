#include "uncommon/coloropt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace uncommon {

namespace {

// Enumerates solutions of B x = 0 in [n]^k, optionally with one coordinate
// pinned. The last unpinned coordinate is solved, the rest are free.
template <typename Fn>
void enumerate_pinned(const LinearSystem& sys, long long n, int pin_pos, long long pin_val,
                      long long& budget, Fn&& fn) {
    const int k = sys.k, w = sys.w;
    int solve_pos = k - 1;
    if (solve_pos == pin_pos) solve_pos = k - 2;
    std::vector<int> free_pos;
    for (int i = 0; i < k; ++i)
        if (i != pin_pos && i != solve_pos) free_pos.push_back(i);

    std::vector<long long> x(static_cast<size_t>(k), 0);
    std::vector<long long> partial(static_cast<size_t>(w), 0);
    if (pin_pos >= 0) {
        x[static_cast<size_t>(pin_pos)] = pin_val;
        for (int r = 0; r < w; ++r)
            partial[static_cast<size_t>(r)] +=
                sys.rows[static_cast<size_t>(r)][static_cast<size_t>(pin_pos)] * pin_val;
    }

    auto solve_leaf = [&]() {
        if (--budget < 0) throw BudgetExceeded("solution enumeration budget exceeded");
        int r0 = -1;
        for (int r = 0; r < w; ++r)
            if (sys.rows[static_cast<size_t>(r)][static_cast<size_t>(solve_pos)] != 0) {
                r0 = r;
                break;
            }
        if (r0 < 0) {
            for (int r = 0; r < w; ++r)
                if (partial[static_cast<size_t>(r)] != 0) return;
            for (long long v = 1; v <= n; ++v) {
                if (--budget < 0) throw BudgetExceeded("solution enumeration budget exceeded");
                x[static_cast<size_t>(solve_pos)] = v;
                fn(x);
            }
            return;
        }
        const long long c = sys.rows[static_cast<size_t>(r0)][static_cast<size_t>(solve_pos)];
        const long long rhs = -partial[static_cast<size_t>(r0)];
        if (rhs % c != 0) return;
        const long long v = rhs / c;
        if (v < 1 || v > n) return;
        for (int r = 0; r < w; ++r) {
            if (sys.rows[static_cast<size_t>(r)][static_cast<size_t>(solve_pos)] * v +
                    partial[static_cast<size_t>(r)] !=
                0)
                return;
        }
        x[static_cast<size_t>(solve_pos)] = v;
        fn(x);
    };

    auto rec = [&](auto&& self, size_t depth) -> void {
        if (depth == free_pos.size()) {
            solve_leaf();
            return;
        }
        const int pos = free_pos[depth];
        for (long long v = 1; v <= n; ++v) {
            x[static_cast<size_t>(pos)] = v;
            for (int r = 0; r < w; ++r)
                partial[static_cast<size_t>(r)] +=
                    sys.rows[static_cast<size_t>(r)][static_cast<size_t>(pos)] * v;
            self(self, depth + 1);
            for (int r = 0; r < w; ++r)
                partial[static_cast<size_t>(r)] -=
                    sys.rows[static_cast<size_t>(r)][static_cast<size_t>(pos)] * v;
        }
    };
    rec(rec, 0);
}

// Solutions whose tuple contains v, each exactly once (pin the leftmost
// occurrence of v).
template <typename Fn>
void enumerate_containing(const LinearSystem& sys, long long n, long long v,
                          long long& budget, Fn&& fn) {
    for (int i = 0; i < sys.k; ++i) {
        enumerate_pinned(sys, n, i, v, budget, [&](const std::vector<long long>& x) {
            for (int j = 0; j < i; ++j)
                if (x[static_cast<size_t>(j)] == v) return;
            fn(x);
        });
    }
}

bool tuple_monochromatic(const std::vector<long long>& x, const std::vector<uint8_t>& colors) {
    const uint8_t c = colors[static_cast<size_t>(x[0] - 1)];
    for (size_t i = 1; i < x.size(); ++i)
        if (colors[static_cast<size_t>(x[i] - 1)] != c) return false;
    return true;
}

// Change in the monochromatic count when element v takes color newc.
long long flip_delta(const LinearSystem& sys, long long n, const std::vector<uint8_t>& colors,
                     long long v, uint8_t newc, long long& budget) {
    const uint8_t oldc = colors[static_cast<size_t>(v - 1)];
    long long delta = 0;
    enumerate_containing(sys, n, v, budget, [&](const std::vector<long long>& x) {
        bool mono_old = true, mono_new = true;
        const uint8_t base_old = (x[0] == v) ? oldc : colors[static_cast<size_t>(x[0] - 1)];
        const uint8_t base_new = (x[0] == v) ? newc : colors[static_cast<size_t>(x[0] - 1)];
        for (size_t i = 1; i < x.size() && (mono_old || mono_new); ++i) {
            const uint8_t co = (x[i] == v) ? oldc : colors[static_cast<size_t>(x[i] - 1)];
            const uint8_t cn = (x[i] == v) ? newc : colors[static_cast<size_t>(x[i] - 1)];
            mono_old = mono_old && co == base_old;
            mono_new = mono_new && cn == base_new;
        }
        delta += (mono_new ? 1 : 0) - (mono_old ? 1 : 0);
    });
    return delta;
}

long long mono_count_colors(const LinearSystem& sys, long long n,
                            const std::vector<uint8_t>& colors, long long& budget) {
    long long count = 0;
    enumerate_pinned(sys, n, -1, 0, budget, [&](const std::vector<long long>& x) {
        if (tuple_monochromatic(x, colors)) ++count;
    });
    return count;
}

// Does coloring of [m] (colors assigned for 1..m) have a monochromatic
// solution that involves the element m?
bool mono_through_last(const LinearSystem& sys, long long m,
                       const std::vector<uint8_t>& colors, long long& budget) {
    bool found = false;
    enumerate_containing(sys, m, m, budget, [&](const std::vector<long long>& x) {
        if (!found && tuple_monochromatic(x, colors)) found = true;
    });
    return found;
}

}  // namespace

LinearSystem::LinearSystem(std::vector<std::vector<long long>> rows_)
    : rows(std::move(rows_)) {
    w = static_cast<int>(rows.size());
    if (w < 1) throw std::invalid_argument("LinearSystem: at least one equation required");
    k = static_cast<int>(rows[0].size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument("LinearSystem: ragged coefficient matrix");
    if (w > k) throw std::invalid_argument("LinearSystem: more equations than variables");
    // Rank check over Q.
    std::vector<std::vector<Rat>> m(static_cast<size_t>(w), std::vector<Rat>(static_cast<size_t>(k)));
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < k; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                rat(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    int rank = 0;
    for (int col = 0; col < k && rank < w; ++col) {
        int pivot = -1;
        for (int i = rank; i < w; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
        for (int i = rank + 1; i < w; ++i) {
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
            Rat factor = m[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                         m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (int j = col; j < k; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    factor * m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        ++rank;
    }
    if (rank != w) throw std::invalid_argument("LinearSystem: coefficient matrix is rank deficient");
}

void for_each_solution_sys(const LinearSystem& sys, long long n, long long budget,
                           const std::function<void(const std::vector<long long>&)>& fn) {
    enumerate_pinned(sys, n, -1, 0, budget, fn);
}

long long count_solutions_sys(const LinearSystem& sys, long long n, long long budget) {
    long long count = 0;
    enumerate_pinned(sys, n, -1, 0, budget, [&](const std::vector<long long>&) { ++count; });
    return count;
}

long long mono_count_sys(const LinearSystem& sys, const Coloring& c, long long budget) {
    return mono_count_colors(sys, c.n, c.colors, budget);
}

void for_each_solution_containing(const LinearSystem& sys, long long n, long long v,
                                  long long budget,
                                  const std::function<void(const std::vector<long long>&)>& fn) {
    enumerate_containing(sys, n, v, budget, fn);
}

std::optional<RadoCertificate> rado_threshold(const LinearSystem& sys, int r,
                                              long long n_max, long long budget) {
    if (r < 2) throw std::invalid_argument("rado_threshold: r >= 2 required");
    for (long long N = 1; N <= n_max; ++N) {
        std::vector<uint8_t> colors(static_cast<size_t>(N), 0);
        // DFS for a coloring of [N] avoiding monochromatic solutions; the
        // color of 1 is fixed by symmetry.
        auto dfs = [&](auto&& self, long long m) -> bool {
            if (m > N) return true;
            const int limit = (m == 1) ? 1 : r;
            for (int c = 0; c < limit; ++c) {
                colors[static_cast<size_t>(m - 1)] = static_cast<uint8_t>(c);
                if (!mono_through_last(sys, m, colors, budget) && self(self, m + 1))
                    return true;
            }
            return false;
        };
        if (!dfs(dfs, 1)) {
            RadoCertificate cert;
            cert.N0 = N;
            cert.epsilon = rat(1, 2 * N * N);
            cert.r = r;
            return cert;
        }
    }
    return std::nullopt;
}

SurvivingBlock find_surviving_block(const LinearSystem& sys, const RadoCertificate& cert,
                                    const Coloring& c, const std::vector<char>& in_A,
                                    long long budget) {
    const long long n = c.n;
    if (static_cast<long long>(in_A.size()) != n)
        throw std::invalid_argument("find_surviving_block: |in_A| != n");
    long long size_A = 0;
    for (char m : in_A) size_A += (m != 0);
    const long long blocks = n / cert.N0;
    // Pigeonhole hypothesis |A| > n - floor(n/N0)/N0.
    if (rat(size_A) <= rat(n) - rat(blocks, cert.N0)) return SurvivingBlock{};

    for (long long d = 1; d <= blocks; ++d) {
        bool whole = true;
        for (long long i = 1; i <= cert.N0 && whole; ++i)
            whole = in_A[static_cast<size_t>(d * i - 1)] != 0;
        if (!whole) continue;
        // Induced coloring of [N0] through the dilate.
        std::vector<uint8_t> induced(static_cast<size_t>(cert.N0));
        for (long long i = 1; i <= cert.N0; ++i)
            induced[static_cast<size_t>(i - 1)] = c.at(d * i);
        SurvivingBlock result;
        enumerate_pinned(sys, cert.N0, -1, 0, budget, [&](const std::vector<long long>& x) {
            if (result.found || !tuple_monochromatic(x, induced)) return;
            result.found = true;
            result.dilate = d;
            for (long long xi : x) result.tuple.push_back(d * xi);
        });
        if (result.found) return result;
    }
    // Unreachable when the certificate is genuine and the precondition holds.
    return SurvivingBlock{};
}

BruteResult brute_min(const LinearSystem& sys, long long n, int r, long long budget) {
    if (n < 1 || r < 2) throw std::invalid_argument("brute_min: need n >= 1, r >= 2");
    double total = std::pow(static_cast<double>(r), static_cast<double>(n - 1));
    if (total > static_cast<double>(budget))
        throw BudgetExceeded("brute_min: r^(n-1) exceeds budget");

    std::vector<std::vector<long long>> solutions;
    long long enum_budget = budget;
    enumerate_pinned(sys, n, -1, 0, enum_budget,
                     [&](const std::vector<long long>& x) { solutions.push_back(x); });

    long long best = -1;
    std::vector<uint8_t> best_colors;
    const long long count_total = static_cast<long long>(total);
#pragma omp parallel
    {
        long long local_best = -1;
        std::vector<uint8_t> local_colors;
        std::vector<uint8_t> colors(static_cast<size_t>(n), 0);
#pragma omp for schedule(static)
        for (long long idx = 0; idx < count_total; ++idx) {
            long long t = idx;  // digits encode colors of 2..n; the color of 1 is fixed
            for (long long pos = 1; pos < n; ++pos) {
                colors[static_cast<size_t>(pos)] = static_cast<uint8_t>(t % r);
                t /= r;
            }
            long long count = 0;
            for (const auto& x : solutions) {
                if (tuple_monochromatic(x, colors)) ++count;
                if (local_best >= 0 && count > local_best) break;
            }
            if (local_best < 0 || count < local_best) {
                local_best = count;
                local_colors = colors;
            }
        }
#pragma omp critical
        {
            if (best < 0 || local_best < best ||
                (local_best == best && local_colors < best_colors)) {
                best = local_best;
                best_colors = local_colors;
            }
        }
    }
    return BruteResult{best, Coloring(n, r, std::move(best_colors))};
}

LocalResult local_search(const LinearSystem& sys, long long n, int r, int restarts,
                         unsigned long long seed, long long sweep_budget) {
    if (restarts < 1) throw std::invalid_argument("local_search: restarts >= 1 required");
    long long best = -1;
    std::vector<uint8_t> best_colors;
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < restarts; ++t) {
        std::mt19937_64 rng(seed + static_cast<unsigned long long>(t));
        std::uniform_int_distribution<int> pick(0, r - 1);
        std::vector<uint8_t> colors(static_cast<size_t>(n));
        for (auto& c : colors) c = static_cast<uint8_t>(pick(rng));

        long long big_budget = std::numeric_limits<long long>::max() / 2;
        long long count = mono_count_colors(sys, n, colors, big_budget);
        long long sweeps = 0;
        bool improved = true;
        while (improved && sweeps < sweep_budget) {
            improved = false;
            ++sweeps;
            for (long long v = 1; v <= n; ++v) {
                const uint8_t cur = colors[static_cast<size_t>(v - 1)];
                for (int c = 0; c < r; ++c) {
                    if (c == cur) continue;
                    long long d = flip_delta(sys, n, colors, v, static_cast<uint8_t>(c),
                                             big_budget);
                    if (d < 0) {
                        colors[static_cast<size_t>(v - 1)] = static_cast<uint8_t>(c);
                        count += d;
                        improved = true;
                        break;  // first improving flip in index order
                    }
                }
            }
        }
#pragma omp critical
        {
            if (best < 0 || count < best || (count == best && colors < best_colors)) {
                best = count;
                best_colors = colors;
            }
        }
    }
    return LocalResult{best, Coloring(n, r, std::move(best_colors))};
}

GrowthTable growth_table(const LinearSystem& sys, const std::vector<long long>& n_list,
                         int r, int restarts, unsigned long long seed,
                         long long brute_budget) {
    GrowthTable table;
    for (long long n : n_list) {
        GrowthRow row;
        row.n = n;
        double total = std::pow(static_cast<double>(r), static_cast<double>(n - 1));
        if (total <= static_cast<double>(brute_budget) && n <= 24) {
            row.count = brute_min(sys, n, r, brute_budget).min_count;
            row.method = "brute";
        } else {
            row.count = local_search(sys, n, r, restarts, seed).best_count;
            row.method = "local";
        }
        table.rows.push_back(row);
    }
    bool all_positive = true;
    for (const auto& row : table.rows)
        if (row.count <= 0) all_positive = false;
    if (all_positive && table.rows.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = static_cast<double>(table.rows.size());
        for (const auto& row : table.rows) {
            const double x = std::log(static_cast<double>(row.n));
            const double y = std::log(static_cast<double>(row.count));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        table.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    return table;
}

}  // namespace uncommon
