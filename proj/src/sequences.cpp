#include "ei/sequences.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace ei {

namespace {

void require_nonnegative(long n, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": negative index");
}

}  // namespace

std::vector<Rational> a_seq(long N) {
    require_nonnegative(N, "a_seq");
    std::vector<Rational> a;
    a.reserve(static_cast<size_t>(N) + 1);
    a.emplace_back(1);
    if (N >= 1) a.emplace_back(1);
    for (long n = 2; n <= N; ++n) {
        Rational v = (Rational(2 * n - 1) * a[static_cast<size_t>(n - 1)] -
                      Rational(n - 2) * a[static_cast<size_t>(n - 2)]) /
                     n;
        a.push_back(std::move(v));
    }
    return a;
}

std::vector<Rational> aprime_seq(long N) {
    require_nonnegative(N, "aprime_seq");
    std::vector<Rational> a;
    a.reserve(static_cast<size_t>(N) + 1);
    a.emplace_back(0);
    if (N >= 1) a.emplace_back(1);
    for (long n = 2; n <= N; ++n) {
        Rational v = Rational(2 * n - 1) * a[static_cast<size_t>(n - 1)] -
                     Rational(n - 2) * a[static_cast<size_t>(n - 2)];
        if (n == 2) v -= 1;
        a.push_back(v / n);
    }
    return a;
}

// Integer forms A_n = n! a_n avoid rational arithmetic entirely:
// A_n = (2n-1) A_{n-1} - (n-1)(n-2) A_{n-2} (minus (n-1)! once at n=2
// for the primed variant).
std::vector<Integer> fact_a_seq(long N) {
    require_nonnegative(N, "fact_a_seq");
    std::vector<Integer> a;
    a.reserve(static_cast<size_t>(N) + 1);
    a.emplace_back(1);
    if (N >= 1) a.emplace_back(1);
    for (long n = 2; n <= N; ++n)
        a.push_back(Integer(2 * n - 1) * a[static_cast<size_t>(n - 1)] -
                    Integer((n - 1) * (n - 2)) * a[static_cast<size_t>(n - 2)]);
    return a;
}

std::vector<Integer> fact_aprime_seq(long N) {
    require_nonnegative(N, "fact_aprime_seq");
    std::vector<Integer> a;
    a.reserve(static_cast<size_t>(N) + 1);
    a.emplace_back(0);
    if (N >= 1) a.emplace_back(1);
    for (long n = 2; n <= N; ++n) {
        Integer v = Integer(2 * n - 1) * a[static_cast<size_t>(n - 1)] -
                    Integer((n - 1) * (n - 2)) * a[static_cast<size_t>(n - 2)];
        if (n == 2) v -= 1;
        a.push_back(std::move(v));
    }
    return a;
}

Rational a_closed(long n) {
    if (n < 1) throw std::domain_error("a_closed: defined for n >= 1 only");
    Rational sum(0);
    Rational inv_kfact(1);
    for (long k = 1; k <= n; ++k) {
        inv_kfact /= k;
        sum += Rational(binomial(static_cast<unsigned long>(n - 1),
                                 static_cast<unsigned long>(k - 1))) *
               inv_kfact;
    }
    return sum;
}

GAffine b_affine(long n) {
    require_nonnegative(n, "b_affine");
    auto a = a_seq(n);
    auto ap = aprime_seq(n);
    return GAffine(-ap.back(), a.back());
}

GAffine rho_affine(long n) {
    require_nonnegative(n, "rho_affine");
    auto a = a_seq(n);
    auto ap = aprime_seq(n);
    const Rational& an = a.back();
    return GAffine(-an * ap.back(), an * an);
}

GAffine sigma_affine(long n) {
    return Rational(n) * rho_affine(n);
}

VerificationReport check_rho_recurrence(long N) {
    if (N < 3) throw std::invalid_argument("check_rho_recurrence: N >= 3 required");
    auto t0 = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.check_name = "rho_sigma_recurrences";
    rep.range_lo = 3;
    rep.range_hi = N;
    rep.config = "{\"N\": " + std::to_string(N) + "}";

    auto a = a_seq(N);
    auto ap = aprime_seq(N);
    std::vector<GAffine> rho(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        const Rational& an = a[static_cast<size_t>(n)];
        rho[static_cast<size_t>(n)] = GAffine(-an * ap[static_cast<size_t>(n)], an * an);
    }

    for (long n = 3; n <= N; ++n) {
        const GAffine& r0 = rho[static_cast<size_t>(n)];
        const GAffine& r1 = rho[static_cast<size_t>(n - 1)];
        const GAffine& r2 = rho[static_cast<size_t>(n - 2)];
        const GAffine& r3 = rho[static_cast<size_t>(n - 3)];
        Rational w = Rational(3) * n * n - 5 * n + 1;

        GAffine lhs = Rational(n) * n * (n - 1) * (2 * n - 3) * r0;
        GAffine rhs = (Rational(n - 1) * (2 * n - 1) * w) * r1 -
                      (Rational(n - 2) * (2 * n - 3) * w) * r2 +
                      (Rational(n - 2) * (n - 3) * (n - 3) * (2 * n - 1)) * r3;
        if (!(lhs == rhs))
            rep.add_failure(n, "rho: " + to_string(rhs), to_string(lhs));

        // sigma_n = n rho_n
        GAffine s0 = Rational(n) * r0;
        GAffine s1 = Rational(n - 1) * r1;
        GAffine s2 = Rational(n - 2) * r2;
        GAffine s3 = Rational(n - 3) * r3;
        GAffine slhs = Rational(n) * (n - 1) * (2 * n - 3) * s0;
        GAffine srhs = (Rational(2 * n - 1) * w) * s1 - (Rational(2 * n - 3) * w) * s2 +
                       (Rational(n - 2) * (n - 3) * (2 * n - 1)) * s3;
        if (!(slhs == srhs))
            rep.add_failure(n, "sigma: " + to_string(srhs), to_string(slhs));
    }

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::vector<Rational> gompertz_convergents(long N) {
    if (N < 1) throw std::invalid_argument("gompertz_convergents: N >= 1 required");
    auto a = a_seq(N);
    auto ap = aprime_seq(N);
    std::vector<Rational> conv;
    conv.reserve(static_cast<size_t>(N));
    for (long n = 1; n <= N; ++n)
        conv.push_back(ap[static_cast<size_t>(n)] / a[static_cast<size_t>(n)]);
    return conv;
}

Rational bala_cf_convergent(long n) {
    if (n < 1) throw std::invalid_argument("bala_cf_convergent: n >= 1 required");
    Rational tail(0);
    for (long k = n - 1; k >= 1; --k)
        tail = Rational(k * (k + 1)) / (Rational(2 * k + 3) - tail);
    return Rational(1) / (Rational(3) - tail);
}

Rational laguerre_at_minus1(long n) {
    require_nonnegative(n, "laguerre_at_minus1");
    // (m+1) L_{m+1}^{(alpha)}(x) = (2m+alpha+1-x) L_m - (m+alpha) L_{m-1},
    // specialized to alpha = x = -1.
    Rational lm1(1), l(1);  // L_0, L_1
    if (n == 0) return lm1;
    for (long m = 1; m < n; ++m) {
        Rational next = (Rational(2 * m + 1) * l - Rational(m - 1) * lm1) / (m + 1);
        lm1 = l;
        l = next;
    }
    return l;
}

}  // namespace ei
