#include "uncommon/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace uncommon {

namespace {

constexpr int kMaxNaiveK = 6;

// Enumerates assignments of x_1..x_{k-1} and solves for x_k.
template <typename Fn>
void enumerate_solutions(const LinearForm& L, long long n, Fn&& fn) {
    const int k = L.k();
    if (k > kMaxNaiveK)
        throw std::invalid_argument("naive enumeration supports k <= 6; use convolution mode");
    std::vector<long long> x(static_cast<size_t>(k));
    const long long ak = L.coeffs.back();
    // Recursive descent without std::function overhead.
    auto rec = [&](auto&& self, int pos, long long partial) -> void {
        if (pos == k - 1) {
            if (partial % ak != 0) return;
            long long xk = -partial / ak;
            if (xk < 1 || xk > n) return;
            x[static_cast<size_t>(k - 1)] = xk;
            fn(x);
            return;
        }
        for (long long v = 1; v <= n; ++v) {
            x[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, partial + L.coeffs[static_cast<size_t>(pos)] * v);
        }
    };
    rec(rec, 0, 0);
}

bool symmetric_pair_pattern(const LinearForm& L, long long& a, long long& b) {
    if (L.k() != 4) return false;
    std::vector<long long> pos, neg;
    for (long long c : L.coeffs) (c > 0 ? pos : neg).push_back(c);
    if (pos.size() != 2 || neg.size() != 2) return false;
    std::sort(pos.begin(), pos.end());
    std::vector<long long> negabs = {-neg[0], -neg[1]};
    std::sort(negabs.begin(), negabs.end());
    if (pos != negabs) return false;
    a = pos[0];
    b = pos[1];
    return true;
}

}  // namespace

void for_each_solution(const LinearForm& L, long long n,
                       const std::function<void(const std::vector<long long>&)>& fn) {
    enumerate_solutions(L, n, fn);
}

long long count_solutions(const LinearForm& L, long long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    long long count = 0;
    enumerate_solutions(L, n, [&](const std::vector<long long>&) { ++count; });
    return count;
}

Rat weighted_count(const LinearForm& L, const WeightFn& f) {
    Rat total = 0;
    enumerate_solutions(L, f.n, [&](const std::vector<long long>& x) {
        Rat prod = f.at(x[0]);
        for (size_t i = 1; i < x.size(); ++i) prod *= f.at(x[i]);
        total += prod;
    });
    return total;
}

Rat count_via_convolution(const ConvolutionPlan& plan, const WeightFn& f) {
    const long long n = f.n;
    if (!plan.valid_for(n))
        throw std::invalid_argument("convolution modulus too small for n (wraparound possible)");
    const Int D = common_denominator(f.values);
    std::vector<Int> g(static_cast<size_t>(n));
    for (long long x = 1; x <= n; ++x) {
        Rat scaled = f.at(x) * Rat(D);
        g[static_cast<size_t>(x - 1)] = scaled.get_num();  // denominator is 1
    }

    const LinearForm& L = plan.form;
    long long a = 0, b = 0;
    Int acc0;
    if (symmetric_pair_pattern(L, a, b)) {
        // h(s) = sum_{a x1 + b x2 = s} g(x1) g(x2); T * D^4 = sum_s h(s)^2.
        const long long smax = (a + b) * n;
        std::vector<Int> h(static_cast<size_t>(smax + 1));
        for (long long x1 = 1; x1 <= n; ++x1)
            for (long long x2 = 1; x2 <= n; ++x2)
                h[static_cast<size_t>(a * x1 + b * x2)] +=
                    g[static_cast<size_t>(x1 - 1)] * g[static_cast<size_t>(x2 - 1)];
        acc0 = 0;
        for (const Int& v : h) acc0 += v * v;
    } else {
        const long long N = plan.modulus;
        std::vector<Int> acc(static_cast<size_t>(N));
        // acc starts as the dilated sequence of the first coefficient.
        auto dilated = [&](long long coef) {
            std::vector<Int> s(static_cast<size_t>(N));
            for (long long x = 1; x <= n; ++x) {
                long long idx = ((coef * x) % N + N) % N;
                s[static_cast<size_t>(idx)] += g[static_cast<size_t>(x - 1)];
            }
            return s;
        };
        acc = dilated(L.coeffs[0]);
        for (int i = 1; i < L.k(); ++i) {
            std::vector<Int> s = dilated(L.coeffs[static_cast<size_t>(i)]);
            std::vector<Int> next(static_cast<size_t>(N));
#pragma omp parallel for schedule(static)
            for (long long t = 0; t < N; ++t) {
                Int sum = 0;
                for (long long u = 0; u < N; ++u) {
                    const Int& av = acc[static_cast<size_t>(u)];
                    if (av == 0) continue;
                    long long w = t - u;
                    if (w < 0) w += N;
                    sum += av * s[static_cast<size_t>(w)];
                }
                next[static_cast<size_t>(t)] = sum;
            }
            acc = std::move(next);
        }
        acc0 = acc[0];
    }

    Int dk = 1;
    for (int i = 0; i < L.k(); ++i) dk *= D;
    Rat result(acc0, dk);
    result.canonicalize();
    return result;
}

Rat t_density(const LinearForm& L, const WeightFn& f) {
    long long total = count_solutions(L, f.n);
    if (total == 0)
        throw std::domain_error("T_L(1) = 0: n is below the solvability threshold");
    return weighted_count(L, f) / rat(total);
}

long long mono_count(const LinearForm& L, const Coloring& c) {
    long long count = 0;
    enumerate_solutions(L, c.n, [&](const std::vector<long long>& x) {
        uint8_t col = c.at(x[0]);
        for (size_t i = 1; i < x.size(); ++i)
            if (c.at(x[i]) != col) return;
        ++count;
    });
    return count;
}

Rat deficit(const LinearForm& L, const WeightFn& f) {
    if (!f.probability_mode)
        throw std::invalid_argument("deficit requires a probability-mode weight function");
    Rat base = rat(1, 1LL << (L.k() - 1));  // 2^{1-k}
    return t_density(L, f) + t_density(L, f.complement()) - base;
}

}  // namespace uncommon
