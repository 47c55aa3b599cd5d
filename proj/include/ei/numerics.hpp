// High-precision floating-point evaluation: the Euler-Gompertz constant,
// b_n by backward (Miller) recurrence and by quadrature, the Kummer
// functions M and U at the integer parameters used here, and truncated
// asymptotic values of a_n and b_n.

#pragma once

#include <vector>

#include "ei/bigfloat.hpp"
#include "ei/gaffine.hpp"
#include "ei/rational.hpp"

namespace ei {

// G = e E1(1) = 0.5963...  Evaluated through the exact convergents
// a_n'/a_n with n chosen from the error law |G - a_n'/a_n| ~ 2 pi e^{1-4 sqrt n},
// then cross-checked against quadrature of int_0^inf e^{-t}/(1+t) dt;
// throws std::runtime_error if the two routes disagree beyond
// 2^{-target}.  Results are cached per precision.
BigFloat gompertz(const PrecisionPolicy& policy);

// p + q*G at the policy's working precision.
BigFloat eval(const GAffine& v, const PrecisionPolicy& policy);

// b_n by Miller's backward recurrence: trial values t_{N+1} = 0, t_N = 1
// far enough out that the contaminating dominant solution decays by
// 2^{-(target+guard)} between N and n, backward to index 1, then
// normalized by b_1 = G-1.  N doubles (up to max_doublings) until two
// successive starts agree to 2^{-target} relative.
BigFloat bn_miller(long n, const PrecisionPolicy& policy);

// b_n = -int_0^1 e^{-s/(1-s)} s^{n-1} ds, n >= 1; the independent
// oracle for bn_miller.
BigFloat bn_quadrature(long n, const PrecisionPolicy& policy);

// Kummer M(a,b,z) = sum (a)_k z^k / ((b)_k k!); requires b >= 1 (M is
// undefined at zero or negative integer b).  All terms positive for the
// parameters used here, so plain summation is stable.
BigFloat kummer_M(long a, long b, const BigFloat& z, const PrecisionPolicy& policy);

// Tricomi U(a,b,z) for integer a >= 1, z > 0, via the integral
// representation (DLMF 13.4.4) mapped onto (0,1):
//   Gamma(a) U(a,b,z) = int_0^1 e^{-z s/(1-s)} s^{a-1} (1-s)^{-b} ds.
BigFloat tricomi_U(long a, long b, const BigFloat& z, const PrecisionPolicy& policy);

// Truncated asymptotic values (sum over m = 0..M of the n^{-m/2} terms):
//   asym_a: e^{2 sqrt n}/(2 n^{3/4} sqrt(pi e)) sum c_m n^{-m/2}
//   asym_b: -sqrt(pi e)/(n^{3/4} e^{2 sqrt n}) sum (-1)^m c_m n^{-m/2}
BigFloat asym_a(long n, long M, const std::vector<Rational>& c, const PrecisionPolicy& policy);
BigFloat asym_b(long n, long M, const std::vector<Rational>& c, const PrecisionPolicy& policy);

// Forward iteration of the b recurrence from (b_0, b_1) = (G, G-1),
// carried out at exactly target_bits.  Numerically unstable: the
// inherited rounding error grows like e^{4 sqrt n} relative to b_n,
// which is the point of the demonstration.  Returns [b_0 .. b_N].
std::vector<BigFloat> bn_forward(long N, const PrecisionPolicy& policy);

// a_n by forward recurrence in floating point (stable: a_n is the
// dominant solution), for n far beyond exact-arithmetic reach.
BigFloat a_forward(long n, const PrecisionPolicy& policy);

}  // namespace ei
