// Exact expansion coefficients for the large-n behaviour of a_n, b_n
// and of their product rho_n = a_n b_n:
//
//   a_n ~ e^{2 sqrt n} / (2 n^{3/4} sqrt(pi e)) * sum_m c_m n^{-m/2},
//   b_n ~ -sqrt(pi e) / (n^{3/4} e^{2 sqrt n}) * sum_m (-1)^m c_m n^{-m/2},
//   rho_n ~ -1/(2 n^{3/2}) * sum_k d_k n^{-k},
//
// with every coefficient an exact rational.  Each family is computable
// by independent routes (c: direct formula vs. coefficient-extraction
// recursion; d: convolution of c, a series recursion, and an explicit
// recurrence with weights alpha_{j,k}), which is what makes the
// integrality checks on r_k = 2^{6k} d_k meaningful.

#pragma once

#include <vector>

#include "ei/rational.hpp"
#include "ei/series.hpp"

namespace ei {

// [B_0, B_2, B_4, ..., B_{2n}] computed exactly via tangent numbers.
std::vector<Rational> bernoulli_even_list(long n);

struct MuSeries {
    SeriesQ mu;      // odd series, mu = -h/12 + h^3/720 - ...
    SeriesQ expmu;   // exp(mu) = 1 - h/12 + h^2/288 + 67 h^3/51840 + ...
};

// mu(h) = 1/h - 1/(e^h - 1) - 1/2 as a truncated series, built by series
// inversion of (e^h - 1)/h and cross-checked coefficient-by-coefficient
// against the Bernoulli form -sum B_{2k}/(2k)! h^{2k-1}.
MuSeries mu_series(long order);

// c_0..c_M by the direct formula
//   c_m = (-1)^m sum_{j=0..m} [h^{m-j}] exp(mu(h)) * (m-2j+3/2)_{2j} / (4^j j!).
std::vector<Rational> c_direct(long M);

// c_0..c_M by the recursion
//   m c_m = [h^{m+3}] sum_{j<m} c_j h^j sum_{s=+-1}
//           (1+s h^2)^{(1-2j)/4} exp((2/h)(sqrt(1+s h^2)-1)).
std::vector<Rational> c_recursive(long M);

// d_0..d_K from the Cauchy-type convolution d_k = sum_{j=0..2k} (-1)^j c_j c_{2k-j}.
// Requires c to have at least 2K+1 entries (throws std::out_of_range).
std::vector<Rational> d_convolution(long K, const std::vector<Rational>& c);

// d_0..d_K from the series recursion
//   8k d_k = -[h^{k+2}] sum_{j<k} d_j h^j ( B(h)(1-h)^{-(j+1/2)}
//            + C(h)(1-2h)^{-(j+1/2)} + D(h)(1-3h)^{-(j+1/2)} ),
// with B = -6+13h-7h^2+h^3, C = 6-19h+17h^2-3h^3, D = -2+11h-17h^2+6h^3.
// This is the fastest route and the production default.
std::vector<Rational> d_recursive(long K);

// Explicit recurrence weight alpha_{j,k} (four Pochhammer terms with
// integer weights in 2^m, 3^m, m = k-j, tau = j+1/2).  Requires
// 0 <= j < k (throws std::domain_error otherwise).
Rational alpha(long j, long k);

// beta_{j,k} = 8^{2(k-j)-1} alpha_{j,k}.
Rational beta(long j, long k);

// d_0..d_K via 8k d_k = sum_{j<k} alpha_{j,k} d_j.
std::vector<Rational> d_alpha(long K);

// r_k = 2^{6k} d_k, computed from d_recursive and independently through
// the scaled recurrence k r_k = sum_{j<k} beta_{j,k} r_j; the two routes
// are compared entry by entry (std::logic_error on mismatch).
std::vector<Rational> r_seq(long K);

// R_k = k! r_k.
std::vector<Rational> R_seq(long K);

// Coefficients of the modified-Bessel product expansion
//   I_nu(x) K_nu(x) ~ 1/(2x) sum_k e_{k,nu} x^{-2k},
//   e_{k,nu} = (-1)^k 2^{-2k} (nu-k+1/2)_{2k} binom(2k,k).
// For nu = 0 the value is checked against the closed form
// (2k)!^3 / (2^{6k} k!^4).
Rational bessel_e(long k, long nu);

}  // namespace ei
