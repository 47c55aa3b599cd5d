// Exact computation of the Maclaurin coefficient sequences of
// f0(z) = exp(z/(1-z)) and f1(z) = e^x E1(x), x = 1/(1-z):
//
//   a_n  = [z^n] f0   (rational),
//   b_n  = [z^n] f1   = a_n*G - a_n'  (exact affine in G),
//   rho_n = a_n b_n,  sigma_n = n rho_n,
//
// together with the convergents a_n'/a_n -> G, their continued-fraction
// counterpart, and exact recurrence verification over GAffine.
//
// a_n satisfies n a_n = (2n-1) a_{n-1} - (n-2) a_{n-2}, a_0 = a_1 = 1;
// a_n' the same with a one-shot inhomogeneity -1 at n = 2, a_0' = 0,
// a_1' = 1.  n! a_n is OEIS A000262; n! a_n' is A321942.

#pragma once

#include <vector>

#include "ei/gaffine.hpp"
#include "ei/rational.hpp"
#include "ei/report.hpp"

namespace ei {

// [a_0 .. a_N]
std::vector<Rational> a_seq(long N);

// [a_0' .. a_N']
std::vector<Rational> aprime_seq(long N);

// n! a_n as exact integers, [0 .. N].
std::vector<Integer> fact_a_seq(long N);

// n! a_n' as exact integers, [0 .. N].
std::vector<Integer> fact_aprime_seq(long N);

// Closed form a_n = sum_{k=1..n} binom(n-1, k-1)/k!; valid for n >= 1
// only (throws std::domain_error at n = 0, where the sum gives 0 != 1).
Rational a_closed(long n);

// b_n = a_n G - a_n' as an exact GAffine value.
GAffine b_affine(long n);

// rho_n = a_n b_n and sigma_n = n rho_n, exact.
GAffine rho_affine(long n);
GAffine sigma_affine(long n);

// Verifies, in exact GAffine arithmetic for 3 <= n <= N, the four-term
//   n^2(n-1)(2n-3) rho_n = (n-1)(2n-1)(3n^2-5n+1) rho_{n-1}
//                        - (n-2)(2n-3)(3n^2-5n+1) rho_{n-2}
//                        + (n-2)(n-3)^2(2n-1) rho_{n-3}
// and the companion three-coefficient recurrence for sigma_n = n rho_n.
// Throws std::invalid_argument for N < 3.
VerificationReport check_rho_recurrence(long N);

// Convergents a_n'/a_n for 1 <= n <= N.
std::vector<Rational> gompertz_convergents(long N);

// n-th convergent of the continued fraction
//   1 - G = 1/(3 - 2/(5 - 6/(7 - ... - k(k+1)/(2k+3) - ...)))
// evaluated bottom-up in exact arithmetic (innermost partial quotient
// (n-1)n / (2n+1)).  Satisfies 1 - convergent(n) = a_{n+1}'/a_{n+1}.
Rational bala_cf_convergent(long n);

// L_n^{(-1)}(-1) via the classical three-term Laguerre recurrence;
// equals a_n.
Rational laguerre_at_minus1(long n);

}  // namespace ei
