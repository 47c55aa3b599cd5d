#include "ei/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "ei/quadrature.hpp"

namespace ei {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn2Pi = 1.8378770664093453;

// Exact convergent numerator/denominator A_n' and A_n (the n! a_n forms)
// up to index n, returned as a rational A_n'/A_n.
Rational convergent_exact(long n) {
    Integer a_prev(1), a_cur(1);    // A_0, A_1
    Integer p_prev(0), p_cur(1);    // A_0', A_1'
    for (long m = 2; m <= n; ++m) {
        Integer a_next = Integer(2 * m - 1) * a_cur - Integer((m - 1) * (m - 2)) * a_prev;
        Integer p_next = Integer(2 * m - 1) * p_cur - Integer((m - 1) * (m - 2)) * p_prev;
        if (m == 2) p_next -= 1;
        a_prev = std::move(a_cur);
        a_cur = std::move(a_next);
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
    }
    return make_rational(p_cur, a_cur);
}

BigFloat gompertz_convergent_route(long bits) {
    // |G - a_n'/a_n| ~ 2 pi e^{1-4 sqrt n}; pick n with 8 extra bits of slack.
    double need = (static_cast<double>(bits) + 8) * kLn2 + 1.0 + kLn2Pi;
    long n = static_cast<long>(std::ceil(std::pow(need / 4.0, 2.0))) + 2;
    Rational conv = convergent_exact(n);
    return BigFloat::of_rational(conv, static_cast<mpfr_prec_t>(bits));
}

BigFloat gompertz_quadrature_route(const PrecisionPolicy& policy) {
    // int_0^inf e^{-t}/(1+t) dt with t = s/(1-s):
    // int_0^1 e^{-s/(1-s)}/(1-s) ds.
    auto f = [](const BigFloat& s, const BigFloat& oms) {
        return exp(-(s / oms)) / oms;
    };
    return integrate_01(f, policy).value;
}

std::shared_mutex g_cache_mutex;
std::map<long, BigFloat> g_cache;  // keyed by target_bits

}  // namespace

BigFloat gompertz(const PrecisionPolicy& policy) {
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find(policy.target_bits);
        if (it != g_cache.end()) return it->second;
    }
    BigFloat conv = gompertz_convergent_route(policy.working_bits());
    BigFloat quad = gompertz_quadrature_route(policy);
    if (abs(conv - quad) > BigFloat::pow2(-policy.target_bits))
        throw std::runtime_error("gompertz: convergent and quadrature routes disagree");
    BigFloat out(static_cast<mpfr_prec_t>(policy.target_bits));
    mpfr_set(out.raw(), conv.raw(), MPFR_RNDN);
    std::unique_lock lock(g_cache_mutex);
    return g_cache.emplace(policy.target_bits, out).first->second;
}

BigFloat eval(const GAffine& v, const PrecisionPolicy& policy) {
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(policy.working_bits());
    BigFloat g = gompertz(PrecisionPolicy(policy.working_bits(), policy.guard_bits));
    return BigFloat::of_rational(v.p, wp) + BigFloat::of_rational(v.q, wp) * g;
}

namespace {

// One backward sweep from trial values at N, returning (t_n, t_1).
std::pair<BigFloat, BigFloat> miller_sweep(long n, long N, mpfr_prec_t wp) {
    BigFloat t_next = BigFloat::of_long(0, wp);  // t_{N+1}
    BigFloat t_cur = BigFloat::of_long(1, wp);   // t_N
    BigFloat t_n(wp);
    if (n == N) t_n = t_cur;
    // recurrence at index m: t_{m-2} = ((2m-1) t_{m-1} - m t_m)/(m-2)
    for (long m = N + 1; m >= 3; --m) {
        BigFloat t_prev = (t_cur * (2 * m - 1) - t_next * m) / (m - 2);
        t_next = std::move(t_cur);
        t_cur = std::move(t_prev);
        if (m - 2 == n) t_n = t_cur;
    }
    return {t_n, t_cur};  // t_cur now holds t_1
}

long miller_start_index(long n, long bits) {
    // e^{4(sqrt N - sqrt n)} > 2^bits
    double root = std::sqrt(static_cast<double>(n)) + static_cast<double>(bits) * kLn2 / 4.0;
    return static_cast<long>(std::ceil(root * root)) + 2;
}

}  // namespace

BigFloat bn_miller(long n, const PrecisionPolicy& policy) {
    if (n < 0) throw std::invalid_argument("bn_miller: n >= 0 required");
    if (n == 0) return gompertz(policy);
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(policy.working_bits());
    BigFloat g = gompertz(PrecisionPolicy(policy.working_bits(), policy.guard_bits));
    BigFloat norm = g - 1;  // b_1
    BigFloat tol = BigFloat::pow2(-policy.target_bits);

    long N = std::max(miller_start_index(n, policy.working_bits()), n + 2);
    auto [t_n, t_1] = miller_sweep(n, N, wp);
    BigFloat b = t_n * norm / t_1;
    for (int attempt = 0; attempt < policy.max_doublings; ++attempt) {
        N *= 2;
        auto [u_n, u_1] = miller_sweep(n, N, wp);
        BigFloat b2 = u_n * norm / u_1;
        if (abs(b - b2) <= abs(b2) * tol) return b2;
        b = std::move(b2);
    }
    throw std::runtime_error("bn_miller: no agreement after max_doublings");
}

BigFloat bn_quadrature(long n, const PrecisionPolicy& policy) {
    if (n < 1) throw std::invalid_argument("bn_quadrature: n >= 1 required");
    auto f = [n](const BigFloat& s, const BigFloat& oms) {
        BigFloat r = exp(-(s / oms));
        if (n > 1) {
            BigFloat p(s.precision());
            mpfr_pow_ui(p.raw(), s.raw(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
            r = r * p;
        }
        return r;
    };
    return -integrate_01(f, policy).value;
}

BigFloat kummer_M(long a, long b, const BigFloat& z, const PrecisionPolicy& policy) {
    if (b < 1)
        throw std::domain_error("kummer_M: b must be a positive integer");
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(policy.working_bits());
    BigFloat zz(wp);
    mpfr_set(zz.raw(), z.raw(), MPFR_RNDN);
    BigFloat term = BigFloat::of_long(1, wp);
    BigFloat sum = term;
    BigFloat eps = BigFloat::pow2(-(policy.working_bits() + 8), wp);
    const long kmax = 1000000;
    for (long k = 0; k < kmax; ++k) {
        term = term * (a + k) * zz / BigFloat::of_long((b + k) * (k + 1), wp);
        sum = sum + term;
        if (abs(term) < abs(sum) * eps) return sum;
    }
    throw std::runtime_error("kummer_M: series did not converge");
}

BigFloat tricomi_U(long a, long b, const BigFloat& z, const PrecisionPolicy& policy) {
    if (a < 1) throw std::domain_error("tricomi_U: a >= 1 required");
    if (!(z.sign() > 0)) throw std::domain_error("tricomi_U: z > 0 required");
    BigFloat zz(static_cast<mpfr_prec_t>(policy.working_bits()));
    mpfr_set(zz.raw(), z.raw(), MPFR_RNDN);
    auto f = [a, b, &zz](const BigFloat& s, const BigFloat& oms) {
        BigFloat r = exp(-(zz * s / oms));
        if (a > 1) {
            BigFloat p(s.precision());
            mpfr_pow_ui(p.raw(), s.raw(), static_cast<unsigned long>(a - 1), MPFR_RNDN);
            r = r * p;
        }
        if (b != 0) r = r * pow_si(oms, -b);
        return r;
    };
    BigFloat integral = integrate_01(f, policy).value;
    return integral / BigFloat::of_integer(factorial(static_cast<unsigned long>(a - 1)),
                                           integral.precision());
}

namespace {

// sum_{m=0..M} (+-1)^m c_m n^{-m/2} by Horner in x = n^{-1/2}.
BigFloat asym_sum(long n, long M, const std::vector<Rational>& c, bool alternate,
                  mpfr_prec_t wp) {
    if (M < 0 || static_cast<long>(c.size()) <= M)
        throw std::out_of_range("asym: need c_0..c_M");
    BigFloat x = BigFloat::of_long(1, wp) / sqrt(BigFloat::of_long(n, wp));
    BigFloat acc(wp);
    for (long m = M; m >= 0; --m) {
        BigFloat cm = BigFloat::of_rational(c[static_cast<size_t>(m)], wp);
        if (alternate && m % 2 == 1) cm = -cm;
        acc = cm + x * acc;
    }
    return acc;
}

}  // namespace

BigFloat asym_a(long n, long M, const std::vector<Rational>& c, const PrecisionPolicy& policy) {
    if (n < 1) throw std::invalid_argument("asym_a: n >= 1 required");
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(policy.working_bits());
    BigFloat nf = BigFloat::of_long(n, wp);
    BigFloat pref = exp(ldexp(sqrt(nf), 1)) /
                    (ldexp(pow(nf, BigFloat::of_double(0.75, wp)), 1) *
                     sqrt(BigFloat::pi(wp) * BigFloat::euler_e(wp)));
    return pref * asym_sum(n, M, c, false, wp);
}

BigFloat asym_b(long n, long M, const std::vector<Rational>& c, const PrecisionPolicy& policy) {
    if (n < 1) throw std::invalid_argument("asym_b: n >= 1 required");
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(policy.working_bits());
    BigFloat nf = BigFloat::of_long(n, wp);
    BigFloat pref = -sqrt(BigFloat::pi(wp) * BigFloat::euler_e(wp)) /
                    (pow(nf, BigFloat::of_double(0.75, wp)) * exp(ldexp(sqrt(nf), 1)));
    return pref * asym_sum(n, M, c, true, wp);
}

std::vector<BigFloat> bn_forward(long N, const PrecisionPolicy& policy) {
    if (N < 1) throw std::invalid_argument("bn_forward: N >= 1 required");
    // The iteration runs at exactly target_bits: this routine exists to
    // demonstrate the instability of the forward direction, and the
    // growth rate of the inherited rounding error is e^{4 sqrt n} times
    // the precision of the starting values.
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(policy.target_bits);
    BigFloat g = gompertz(PrecisionPolicy(policy.working_bits(), policy.guard_bits));
    std::vector<BigFloat> b;
    b.reserve(static_cast<size_t>(N) + 1);
    BigFloat b0(wp), b1(wp);
    mpfr_set(b0.raw(), g.raw(), MPFR_RNDN);
    b1 = b0 - 1;
    b.push_back(b0);
    b.push_back(b1);
    for (long n = 2; n <= N; ++n) {
        BigFloat v = b[static_cast<size_t>(n - 1)] * (2 * n - 1) -
                     b[static_cast<size_t>(n - 2)] * (n - 2);
        if (n == 2) v = v + 1;
        b.push_back(v / n);
    }
    return b;
}

BigFloat a_forward(long n, const PrecisionPolicy& policy) {
    if (n < 0) throw std::invalid_argument("a_forward: n >= 0 required");
    const mpfr_prec_t wp = static_cast<mpfr_prec_t>(policy.working_bits());
    BigFloat prev = BigFloat::of_long(1, wp), cur = BigFloat::of_long(1, wp);
    for (long m = 2; m <= n; ++m) {
        BigFloat next = (cur * (2 * m - 1) - prev * (m - 2)) / m;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace ei
