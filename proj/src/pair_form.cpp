#include "uncommon/pair_form.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>

namespace uncommon {

namespace {

long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceildiv(long long a, long long b) { return -floordiv(-a, b); }

// |{z in [lo,hi] : z == r (mod m)}| with 0 <= r < m.
long long count_in_ap(long long lo, long long hi, long long r, long long m) {
    if (hi < lo) return 0;
    return floordiv(hi - r, m) - floordiv(lo - 1 - r, m);
}

long long mod_inverse(long long a, long long m) {
    if (m == 1) return 0;
    long long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("not invertible");
    return ((t % m) + m) % m;
}

Int int128_to_mpz(__int128 v) {
    bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v)
                                   : static_cast<unsigned __int128>(v);
    Int hi(static_cast<unsigned long>(u >> 64));
    Int lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    Int result = (hi << 64) + lo;
    return negative ? Int(-result) : result;
}

// Clears denominators: f = g / D with integer g; throws if g does not fit
// the int64 fast path safely.
Int clear_denominators(const std::vector<Rat>& f, long long n,
                       std::vector<long long>& g) {
    Int D = common_denominator(f);
    g.resize(f.size());
    long long maxabs = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        Rat scaled = f[i] * Rat(D);
        Int num = scaled.get_num();
        if (!num.fits_slong_p())
            throw std::overflow_error("cleared weight exceeds int64 fast path");
        g[i] = num.get_si();
        maxabs = std::max(maxabs, std::llabs(g[i]));
    }
    if (maxabs > 0 && n > (9000000000000000000LL / maxabs) / maxabs)
        throw std::overflow_error("n * max(g)^2 exceeds int64 fast path");
    return D;
}

// h(s) = sum_{a x1 + b x2 = s} g(x1) g(x2), s in [0, (a+b)n].
std::vector<long long> pair_sum_profile(const SymmetricPair& p, long long n,
                                        const std::vector<long long>& g) {
    const size_t len = static_cast<size_t>((p.a + p.b) * n + 1);
    std::vector<long long> h(len, 0);
#pragma omp parallel
    {
        std::vector<long long> local(len, 0);
#pragma omp for nowait schedule(static)
        for (long long x1 = 1; x1 <= n; ++x1) {
            const long long gx = g[static_cast<size_t>(x1 - 1)];
            if (gx == 0) continue;
            const long long base = p.a * x1;
            for (long long x2 = 1; x2 <= n; ++x2)
                local[static_cast<size_t>(base + p.b * x2)] +=
                    gx * g[static_cast<size_t>(x2 - 1)];
        }
#pragma omp critical
        for (size_t i = 0; i < len; ++i) h[i] += local[i];
    }
    return h;
}

// k(t) = sum_{a x - b y = t} g(x) g(y), stored with offset t - (a - b n).
std::vector<long long> pair_diff_profile(const SymmetricPair& p, long long n,
                                         const std::vector<long long>& g) {
    const long long tmin = p.a - p.b * n;
    const size_t len = static_cast<size_t>(p.a * n - p.b - tmin + 1);
    std::vector<long long> k(len, 0);
#pragma omp parallel
    {
        std::vector<long long> local(len, 0);
#pragma omp for nowait schedule(static)
        for (long long x = 1; x <= n; ++x) {
            const long long gx = g[static_cast<size_t>(x - 1)];
            if (gx == 0) continue;
            const long long base = p.a * x - tmin;
            for (long long y = 1; y <= n; ++y)
                local[static_cast<size_t>(base - p.b * y)] +=
                    gx * g[static_cast<size_t>(y - 1)];
        }
#pragma omp critical
        for (size_t i = 0; i < len; ++i) k[i] += local[i];
    }
    return k;
}

// Lagged autocorrelation sum_{x - x' = lag} g(x) g(x').
long long lag_product(const std::vector<long long>& g, long long lag) {
    long long n = static_cast<long long>(g.size());
    long long abslag = std::llabs(lag);
    long long acc = 0;
    for (long long i = 0; i + abslag < n; ++i)
        acc += g[static_cast<size_t>(i)] * g[static_cast<size_t>(i + abslag)];
    return acc;
}

}  // namespace

long long PairCounts::c(long long s) const {
    const long long a = pair.a, b = pair.b;
    long long lo = std::max(1LL, ceildiv(s - b * n, a));
    long long hi = std::min(n, floordiv(s - b, a));
    long long r = (mod_inverse(a, b) * ((s % b + b) % b)) % b;
    return count_in_ap(lo, hi, r, b);
}

long long PairCounts::e(long long t) const {
    const long long a = pair.a, b = pair.b;
    long long lo = std::max(1LL, ceildiv(t + b, a));
    long long hi = std::min(n, floordiv(t + b * n, a));
    long long r = (mod_inverse(a, b) * ((t % b + b) % b)) % b;
    return count_in_ap(lo, hi, r, b);
}

long long PairCounts::count_given_xxp(long long x, long long xp) const {
    const long long a = pair.a, b = pair.b;
    if ((x - xp) % b != 0) return 0;
    long long delta = a * (x - xp) / b;
    return std::max(0LL, n - std::llabs(delta));
}

long long PairCounts::count_given_yyp(long long y, long long yp) const {
    const long long a = pair.a, b = pair.b;
    if ((y - yp) % a != 0) return 0;
    long long delta = b * (y - yp) / a;
    return std::max(0LL, n - std::llabs(delta));
}

Int total_count(const SymmetricPair& pair, long long n) {
    PairCounts pc(pair, n);
    __int128 acc = 0;
    for (long long s = pair.a + pair.b; s <= (pair.a + pair.b) * n; ++s) {
        long long cs = pc.c(s);
        acc += static_cast<__int128>(cs) * cs;
    }
    return int128_to_mpz(acc);
}

QuadFormMatrix build_matrix(const SymmetricPair& pair, long long n) {
    PairCounts pc(pair, n);
    Int tl1 = total_count(pair, n);
    if (tl1 == 0) throw std::domain_error("T_L(1) = 0");
    QuadFormMatrix m{pair, n, std::vector<Rat>(static_cast<size_t>(n * n))};
    const Rat denom = Rat(2) * Rat(tl1);
#pragma omp parallel for schedule(static)
    for (long long x = 1; x <= n; ++x) {
        for (long long y = 1; y <= n; ++y) {
            long long num = pc.count_given_xy(x, y) + pc.count_given_xy(y, x) +
                            pc.count_given_xyp(x, y) + pc.count_given_xyp(y, x) +
                            pc.count_given_xxp(x, y) + pc.count_given_yyp(x, y);
            Rat v = rat(num) / denom;
            m.at(x, y) = v;
        }
    }
    return m;
}

Rat xi(const QuadFormMatrix& m, const std::vector<Rat>& f) {
    if (static_cast<long long>(f.size()) != m.n)
        throw std::invalid_argument("dimension mismatch in xi");
    Rat total = 0;
    for (long long x = 1; x <= m.n; ++x) {
        if (f[static_cast<size_t>(x - 1)] == 0) continue;
        Rat row = 0;
        for (long long y = 1; y <= m.n; ++y)
            row += m.at(x, y) * f[static_cast<size_t>(y - 1)];
        total += f[static_cast<size_t>(x - 1)] * row;
    }
    return total;
}

Rat xi_direct(const SymmetricPair& pair, long long n, const std::vector<Rat>& f) {
    if (static_cast<long long>(f.size()) != n)
        throw std::invalid_argument("dimension mismatch in xi_direct");
    std::vector<long long> g;
    Int D = clear_denominators(f, n, g);
    PairCounts pc(pair, n);

    std::vector<long long> h = pair_sum_profile(pair, n, g);
    std::vector<long long> kd = pair_diff_profile(pair, n, g);

    __int128 s1 = 0;
    for (long long s = pair.a + pair.b; s <= (pair.a + pair.b) * n; ++s)
        if (h[static_cast<size_t>(s)] != 0)
            s1 += static_cast<__int128>(pc.c(s)) * h[static_cast<size_t>(s)];

    const long long tmin = pair.a - pair.b * n;
    __int128 s2 = 0;
    for (long long t = tmin; t <= pair.a * n - pair.b; ++t)
        if (kd[static_cast<size_t>(t - tmin)] != 0)
            s2 += static_cast<__int128>(pc.e(t)) * kd[static_cast<size_t>(t - tmin)];

    __int128 sb = 0;  // pairs x == x' (mod b), weight (n - |a d|)_+
    for (long long d = -(n - 1) / pair.b; d <= (n - 1) / pair.b; ++d) {
        long long w = n - std::llabs(pair.a * d);
        if (w <= 0) continue;
        sb += static_cast<__int128>(w) * lag_product(g, pair.b * d);
    }
    __int128 sa = 0;  // pairs y == y' (mod a), weight (n - |b d|)_+
    for (long long d = -(n - 1) / pair.a; d <= (n - 1) / pair.a; ++d) {
        long long w = n - std::llabs(pair.b * d);
        if (w <= 0) continue;
        sa += static_cast<__int128>(w) * lag_product(g, pair.a * d);
    }

    Int numer = int128_to_mpz(2 * s1 + 2 * s2 + sb + sa);
    Int tl1 = total_count(pair, n);
    if (tl1 == 0) throw std::domain_error("T_L(1) = 0");
    Rat result = Rat(numer) / (Rat(2) * Rat(tl1));
    result /= Rat(D * D);
    return result;
}

Int t_integer(const SymmetricPair& pair, long long n, const std::vector<long long>& g) {
    if (static_cast<long long>(g.size()) != n)
        throw std::invalid_argument("dimension mismatch in t_integer");
    long long maxabs = 0;
    for (long long v : g) maxabs = std::max(maxabs, std::llabs(v));
    if (maxabs > 0 && n > (9000000000000000000LL / maxabs) / maxabs)
        throw std::overflow_error("n * max(g)^2 exceeds int64 fast path");
    std::vector<long long> h = pair_sum_profile(pair, n, g);
    __int128 acc = 0;
    for (long long v : h) acc += static_cast<__int128>(v) * v;
    return int128_to_mpz(acc);
}

Rat t_weighted(const SymmetricPair& pair, long long n, const std::vector<Rat>& f) {
    std::vector<long long> g;
    Int D = clear_denominators(f, n, g);
    Int t = t_integer(pair, n, g);
    Int d4 = D * D * D * D;
    Rat result(t, d4);
    result.canonicalize();
    return result;
}

Rat zeta(const SymmetricPair& pair, long long n, const std::vector<Rat>& f) {
    Int tl1 = total_count(pair, n);
    if (tl1 == 0) throw std::domain_error("T_L(1) = 0");
    std::vector<Rat> plus(f.size()), minus(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        plus[i] = Rat(1, 2) + f[i];
        minus[i] = Rat(1, 2) - f[i];
    }
    Rat t_plus = t_weighted(pair, n, plus) / Rat(tl1);
    Rat t_minus = t_weighted(pair, n, minus) / Rat(tl1);
    return t_plus + t_minus - Rat(1, 8) - xi_direct(pair, n, f);
}

Rat zeta_direct(const SymmetricPair& pair, long long n, const std::vector<Rat>& f) {
    Int tl1 = total_count(pair, n);
    if (tl1 == 0) throw std::domain_error("T_L(1) = 0");
    return Rat(2) * t_weighted(pair, n, f) / Rat(tl1);
}

FourierReport fourier_cross_check(const SymmetricPair& pair, long long n,
                                  const std::vector<Rat>& f, double tol) {
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    const long long N = (pair.a + pair.b) * n;
    using Cx = std::complex<double>;
    const double two_pi = 2.0 * 3.14159265358979323846;

    std::vector<double> fd(static_cast<size_t>(n));
    for (long long x = 1; x <= n; ++x) fd[static_cast<size_t>(x - 1)] = rat_to_double(f[static_cast<size_t>(x - 1)]);

    // fhat[t] = (1/N) sum_x f(x) e(-t x / N); ihat likewise for the indicator of [n].
    std::vector<Cx> fhat(static_cast<size_t>(N)), ihat(static_cast<size_t>(N));
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < N; ++t) {
        Cx af = 0, ai = 0;
        for (long long x = 1; x <= n; ++x) {
            double ang = -two_pi * static_cast<double>(t) * static_cast<double>(x) / static_cast<double>(N);
            Cx w(std::cos(ang), std::sin(ang));
            af += fd[static_cast<size_t>(x - 1)] * w;
            ai += w;
        }
        fhat[static_cast<size_t>(t)] = af / static_cast<double>(N);
        ihat[static_cast<size_t>(t)] = ai / static_cast<double>(N);
    }

    auto at = [&](const std::vector<Cx>& v, long long idx) {
        long long m = ((idx % N) + N) % N;
        return v[static_cast<size_t>(m)];
    };

    double xi_sum = 0, z_sum = 0;
    const double n3 = std::pow(static_cast<double>(N), 3);
    for (long long t = 0; t < N; ++t) {
        Cx Fa = at(fhat, pair.a * t), Fma = at(fhat, -pair.a * t);
        Cx Fb = at(fhat, pair.b * t), Fmb = at(fhat, -pair.b * t);
        Cx Ia = at(ihat, pair.a * t), Ima = at(ihat, -pair.a * t);
        Cx Ib = at(ihat, pair.b * t), Imb = at(ihat, -pair.b * t);
        Cx term = Fb * Fmb * Ia * Ima + Fma * Fmb * Ia * Ib + Fa * Fmb * Ima * Ib +
                  Fma * Fb * Ia * Imb + Fa * Fb * Ima * Imb + Fa * Fma * Ib * Imb;
        xi_sum += term.real();
        z_sum += (Fa * Fma * Fb * Fmb).real();
    }
    FourierReport rep;
    rep.xi_exact = xi_direct(pair, n, f);
    rep.zeta_exact = zeta_direct(pair, n, f);
    double tl1 = Rat(total_count(pair, n)).get_d();
    rep.xi_float = n3 / 2.0 * xi_sum / tl1;
    rep.zeta_float = 2.0 * n3 * z_sum / tl1;
    double dev_xi = std::abs(rep.xi_float - rat_to_double(rep.xi_exact));
    double dev_z = std::abs(rep.zeta_float - rat_to_double(rep.zeta_exact));
    rep.max_dev = std::max(dev_xi, dev_z);
    rep.ok = dev_xi <= tol && dev_z <= tol && rep.zeta_float >= -tol;
    return rep;
}

}  // namespace uncommon
