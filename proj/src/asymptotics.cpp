#include "ei/asymptotics.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace ei {

namespace {

// Tangent numbers T_1..T_n by the in-place triangle; integer-only, much
// cheaper than the textbook rational recurrence for Bernoulli numbers.
std::vector<Integer> tangent_numbers(long n) {
    std::vector<Integer> t(static_cast<size_t>(n) + 1);
    if (n >= 1) t[1] = 1;
    for (long k = 2; k <= n; ++k) t[static_cast<size_t>(k)] = Integer(k - 1) * t[static_cast<size_t>(k - 1)];
    for (long k = 2; k <= n; ++k)
        for (long j = k; j <= n; ++j)
            t[static_cast<size_t>(j)] = Integer(j - k) * t[static_cast<size_t>(j - 1)] +
                                        Integer(j - k + 2) * t[static_cast<size_t>(j)];
    return t;
}

}  // namespace

std::vector<Rational> bernoulli_even_list(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli_even_list: negative count");
    std::vector<Rational> b;
    b.reserve(static_cast<size_t>(n) + 1);
    b.emplace_back(1);  // B_0
    auto t = tangent_numbers(n);
    // B_{2k} = (-1)^{k-1} T_k * 2k / (4^k (4^k - 1))
    Integer four_k(1);
    for (long k = 1; k <= n; ++k) {
        four_k *= 4;
        Rational v = make_rational(Integer(2 * k) * t[static_cast<size_t>(k)],
                                   four_k * (four_k - 1));
        b.push_back(k % 2 == 1 ? v : -v);
    }
    return b;
}

MuSeries mu_series(long order) {
    if (order < 0) throw std::invalid_argument("mu_series: negative order");

    // (e^h - 1)/h = sum h^k/(k+1)!, inverted to h/(e^h - 1); then
    // mu = (1 - h/(e^h - 1) - h/2) / h.
    long L = order + 1;
    std::vector<Rational> g(static_cast<size_t>(L) + 1);
    Rational inv_fact(1);  // 1/(k+1)!
    for (long k = 0; k <= L; ++k) {
        inv_fact /= (k + 1);
        g[static_cast<size_t>(k)] = inv_fact;
    }
    SeriesQ ghat{std::move(g)};
    SeriesQ num = SeriesQ::one(L) - inverse(ghat) - SeriesQ::monomial(make_rational(1, 2), 1, L);
    SeriesQ mu = num.shift_down();  // order

    // Independent route through Bernoulli numbers.
    long kmax = (order + 1) / 2;  // largest k with 2k-1 <= order
    auto bern = bernoulli_even_list(kmax);
    SeriesQ mu_b(order);
    {
        std::vector<Rational> mb(static_cast<size_t>(order) + 1, Rational(0));
        Rational fact(1);  // (2k)!
        long f_arg = 0;
        for (long k = 1; k <= kmax; ++k) {
            while (f_arg < 2 * k) fact *= ++f_arg;
            mb[static_cast<size_t>(2 * k - 1)] = -bern[static_cast<size_t>(k)] / fact;
        }
        mu_b = SeriesQ(std::move(mb));
    }
    if (!(mu == mu_b))
        throw std::logic_error("mu_series: series and Bernoulli routes disagree");

    return MuSeries{mu, exp(mu)};
}

std::vector<Rational> c_direct(long M) {
    if (M < 0) throw std::invalid_argument("c_direct: negative order");
    SeriesQ expmu = mu_series(M).expmu;
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(M) + 1);
    for (long m = 0; m <= M; ++m) {
        Rational sum(0);
        Rational t(1);  // (m-2j+3/2)_{2j} / (4^j j!), starting at j = 0
        for (long j = 0; j <= m; ++j) {
            if (j > 0)
                t *= (Rational(m - 2 * j) + make_rational(3, 2)) *
                     (Rational(m - 2 * j) + make_rational(5, 2)) / (4 * j);
            sum += expmu.coeff(m - j) * t;
        }
        c.push_back(m % 2 == 0 ? sum : -sum);
    }
    return c;
}

std::vector<Rational> c_recursive(long M) {
    if (M < 0) throw std::invalid_argument("c_recursive: negative order");
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(M) + 1);
    c.emplace_back(1);
    if (M == 0) return c;

    // W_s = exp((2/h)(sqrt(1+s h^2)-1)) to order M+3; one guard
    // coefficient absorbs the division by h.
    const long L = M + 4;
    std::array<SeriesQ, 2> w{SeriesQ(0), SeriesQ(0)};  // +1, -1
    for (int si = 0; si < 2; ++si) {
        int s = si == 0 ? 1 : -1;
        SeriesQ base = SeriesQ::one(L) + SeriesQ::monomial(Rational(s), 2, L);
        SeriesQ e = Rational(2) * (pow(base, make_rational(1, 2)) - SeriesQ::one(L));
        w[static_cast<size_t>(si)] = exp(e.shift_down());
    }
    // Sum and difference columns: for the factor (1+s h^2)^{(1-2j)/4} the
    // h^{2t} coefficient is binom((1-2j)/4, t) s^t, so summing over s
    // pairs even t with W_+ + W_- and odd t with W_+ - W_-.
    std::vector<Rational> wsum(static_cast<size_t>(M) + 4), wdiff(static_cast<size_t>(M) + 4);
    for (long i = 0; i <= M + 3; ++i) {
        wsum[static_cast<size_t>(i)] = w[0].coeff(i) + w[1].coeff(i);
        wdiff[static_cast<size_t>(i)] = w[0].coeff(i) - w[1].coeff(i);
    }

    std::vector<Rational> acc(static_cast<size_t>(M) + 1, Rational(0));
    std::vector<Rational> binom_gamma;  // binom(gamma, t) for the current j
    for (long j = 0; j < M; ++j) {
        const long col_len = M + 3 - j;
        // binom((1-2j)/4, t) for 2t <= col_len
        Rational gamma = make_rational(1 - 2 * j, 4);
        binom_gamma.assign(1, Rational(1));
        for (long t = 1; 2 * t <= col_len; ++t)
            binom_gamma.push_back(binom_gamma.back() * (gamma - (t - 1)) / t);

        for (long m = j + 1; m <= M; ++m) {
            const long i = m + 3 - j;
            Rational q(0);
            for (long t = 0; 2 * t <= i; ++t) {
                const auto& wv = (t % 2 == 0) ? wsum : wdiff;
                q += binom_gamma[static_cast<size_t>(t)] * wv[static_cast<size_t>(i - 2 * t)];
            }
            acc[static_cast<size_t>(m)] += c[static_cast<size_t>(j)] * q;
        }
        c.push_back(acc[static_cast<size_t>(j) + 1] / (j + 1));
    }
    return c;
}

std::vector<Rational> d_convolution(long K, const std::vector<Rational>& c) {
    if (K < 0) throw std::invalid_argument("d_convolution: negative order");
    if (static_cast<long>(c.size()) < 2 * K + 1)
        throw std::out_of_range("d_convolution: need c_0..c_{2K}");
    std::vector<Rational> d;
    d.reserve(static_cast<size_t>(K) + 1);
    for (long k = 0; k <= K; ++k) {
        Rational sum(0);
        for (long j = 0; j <= 2 * k; ++j) {
            Rational t = c[static_cast<size_t>(j)] * c[static_cast<size_t>(2 * k - j)];
            if (j % 2 == 0)
                sum += t;
            else
                sum -= t;
        }
        d.push_back(std::move(sum));
    }
    return d;
}

std::vector<Rational> d_recursive(long K) {
    if (K < 0) throw std::invalid_argument("d_recursive: negative order");
    std::vector<Rational> d;
    d.reserve(static_cast<size_t>(K) + 1);
    d.emplace_back(1);
    if (K == 0) return d;

    static constexpr std::array<long, 4> B{-6, 13, -7, 1};
    static constexpr std::array<long, 4> C{6, -19, 17, -3};
    static constexpr std::array<long, 4> D{-2, 11, -17, 6};

    // acc[i] accumulates [h^i] of sum_j d_j h^j (B S_1 + C S_2 + D S_3),
    // with S_m = (1-mh)^{-(j+1/2)}; columns are streamed as each d_j
    // becomes available.
    std::vector<Rational> acc(static_cast<size_t>(K) + 3, Rational(0));
    std::vector<Rational> s1, s2, s3;

    auto add_column = [&](long j) {
        const long len = K + 2 - j;  // highest local power of h needed
        const Rational tau = Rational(j) + make_rational(1, 2);
        s1.assign(1, Rational(1));
        s2.assign(1, Rational(1));
        s3.assign(1, Rational(1));
        for (long i = 1; i <= len; ++i) {
            Rational step = (tau + (i - 1)) / i;  // (tau+i-1)/i
            s1.push_back(s1.back() * step);
            s2.push_back(s2.back() * 2 * step);
            s3.push_back(s3.back() * 3 * step);
        }
        const Rational& dj = d[static_cast<size_t>(j)];
        for (long i = 0; i <= len; ++i) {
            Rational v(0);
            for (long t = 0; t < 4 && t <= i; ++t) {
                const Rational& x1 = s1[static_cast<size_t>(i - t)];
                const Rational& x2 = s2[static_cast<size_t>(i - t)];
                const Rational& x3 = s3[static_cast<size_t>(i - t)];
                v += Rational(B[static_cast<size_t>(t)]) * x1 +
                     Rational(C[static_cast<size_t>(t)]) * x2 +
                     Rational(D[static_cast<size_t>(t)]) * x3;
            }
            acc[static_cast<size_t>(j + i)] += dj * v;
        }
    };

    add_column(0);
    for (long k = 1; k <= K; ++k) {
        d.push_back(-acc[static_cast<size_t>(k) + 2] / (8 * k));
        if (k < K) add_column(k);
    }
    return d;
}

namespace {

// Integer weights of the four Pochhammer terms in alpha_{j,k}.
std::array<Integer, 4> alpha_weights(long m) {
    Integer two_m, three_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(m));
    mpz_ui_pow_ui(three_m.get_mpz_t(), 3, static_cast<unsigned long>(m));
    Integer two_m1 = two_m / 2;  // 2^{m-1}, m >= 1
    return {
        Integer(-1) + 3 * two_m1 - 2 * three_m,
        Integer(7) - 17 * two_m + 17 * three_m,
        Integer(-13) + 38 * two_m - 33 * three_m,
        6 * (Integer(1) - 4 * two_m + 3 * three_m),
    };
}

}  // namespace

Rational alpha(long j, long k) {
    if (j < 0 || j >= k)
        throw std::domain_error("alpha: requires 0 <= j < k");
    const long m = k - j;
    const Rational tau = Rational(j) + make_rational(1, 2);
    auto w = alpha_weights(m);
    // (tau)_{m-1}/(m-1)!, then three incremental steps.
    Rational p = pochhammer(tau, static_cast<unsigned long>(m - 1)) /
                 Rational(factorial(static_cast<unsigned long>(m - 1)));
    Rational sum = Rational(w[0]) * p;
    p *= (tau + (m - 1)) / m;
    sum += Rational(w[1]) * p;
    p *= (tau + m) / (m + 1);
    sum += Rational(w[2]) * p;
    p *= (tau + m + 1) / (m + 2);
    sum += Rational(w[3]) * p;
    return sum;
}

Rational beta(long j, long k) {
    Rational a = alpha(j, k);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 8, static_cast<unsigned long>(2 * (k - j) - 1));
    return a * Rational(scale);
}

namespace {

// Shared driver for the alpha/beta recurrences: for each k, walk
// m = k-j from 1 to k carrying (j+1/2)_{m-1}/(m-1)! and the power
// weights incrementally, so the whole table costs O(K^2) operations.
// With scale_beta the weights pick up the factor 8^{2m-1} and the
// division by 8k drops to a division by k, yielding r instead of d.
std::vector<Rational> alpha_recurrence(long K, bool scale_beta) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(K) + 1);
    out.emplace_back(1);
    for (long k = 1; k <= K; ++k) {
        Rational p(1);  // (j+1/2)_{m-1}/(m-1)! at m = 1 (j = k-1)
        Integer two_m(1), three_m(1);
        Rational pow8(8);  // 8^{2m-1} at m = 1 is 8
        Rational sum(0);
        const Rational half = make_rational(1, 2);
        const Rational km_half = Rational(k) - half;       // k - 1/2
        const Rational kp_half = Rational(k) + half;       // k + 1/2
        const Rational kp3_half = Rational(k) + 3 * half;  // k + 3/2
        for (long m = 1; m <= k; ++m) {
            two_m *= 2;
            three_m *= 3;
            Integer two_m1 = two_m / 2;
            Rational t = p;
            Rational term = Rational(Integer(-1) + 3 * two_m1 - 2 * three_m) * t;
            t *= km_half / m;
            term += Rational(Integer(7) - 17 * two_m + 17 * three_m) * t;
            t *= kp_half / (m + 1);
            term += Rational(Integer(-13) + 38 * two_m - 33 * three_m) * t;
            t *= kp3_half / (m + 2);
            term += Rational(6 * (Integer(1) - 4 * two_m + 3 * three_m)) * t;
            if (scale_beta) term *= pow8;
            sum += term * out[static_cast<size_t>(k - m)];
            // advance to m+1: (j+1/2)_{m-1}/(m-1)! with j = k-m-1
            p *= (Rational(k - m) - half) / m;
            pow8 *= 64;
        }
        out.push_back(scale_beta ? sum / k : sum / (8 * k));
    }
    return out;
}

}  // namespace

std::vector<Rational> d_alpha(long K) {
    if (K < 0) throw std::invalid_argument("d_alpha: negative order");
    return alpha_recurrence(K, false);
}

std::vector<Rational> r_seq(long K) {
    if (K < 0) throw std::invalid_argument("r_seq: negative order");
    auto d = d_recursive(K);
    std::vector<Rational> r;
    r.reserve(static_cast<size_t>(K) + 1);
    Integer scale(1);
    for (long k = 0; k <= K; ++k) {
        r.push_back(d[static_cast<size_t>(k)] * Rational(scale));
        scale <<= 6;
    }
    auto r2 = alpha_recurrence(K, true);
    for (long k = 0; k <= K; ++k)
        if (r[static_cast<size_t>(k)] != r2[static_cast<size_t>(k)])
            throw std::logic_error("r_seq: 2^{6k} d_k and beta-recurrence routes disagree at k=" +
                                   std::to_string(k));
    return r;
}

std::vector<Rational> R_seq(long K) {
    auto r = r_seq(K);
    Integer kfact(1);
    for (long k = 0; k <= K; ++k) {
        if (k > 0) kfact *= k;
        r[static_cast<size_t>(k)] *= Rational(kfact);
    }
    return r;
}

Rational bessel_e(long k, long nu) {
    if (k < 0) throw std::invalid_argument("bessel_e: negative k");
    Rational poch = pochhammer(Rational(nu - k) + make_rational(1, 2),
                               static_cast<unsigned long>(2 * k));
    Rational e = poch * Rational(binomial(static_cast<unsigned long>(2 * k),
                                          static_cast<unsigned long>(k))) /
                 Rational(pow2(static_cast<unsigned long>(2 * k)));
    if (k % 2 == 1) e = -e;
    if (nu == 0) {
        Integer f2k = factorial(static_cast<unsigned long>(2 * k));
        Integer fk = factorial(static_cast<unsigned long>(k));
        Rational closed = make_rational(f2k * f2k * f2k,
                                        pow2(static_cast<unsigned long>(6 * k)) * fk * fk * fk * fk);
        if (e != closed)
            throw std::logic_error("bessel_e: nu=0 specialization mismatch at k=" +
                                   std::to_string(k));
    }
    return e;
}

}  // namespace ei
