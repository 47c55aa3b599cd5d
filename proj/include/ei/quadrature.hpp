// Tanh-sinh quadrature over (0,1) at arbitrary precision.
//
// The substitution s(u) = 1/(1 + e^{-pi sinh u}) pushes both endpoints
// out double-exponentially, so integrands with essential decay or mild
// blow-up at the endpoints converge geometrically per level halving.
// The integrand receives both s and 1-s, each computed directly (never
// as a difference), so endpoint-sensitive factors stay fully accurate.

#pragma once

#include <functional>

#include "ei/bigfloat.hpp"

namespace ei {

using Integrand01 = std::function<BigFloat(const BigFloat& s, const BigFloat& one_minus_s)>;

struct QuadratureResult {
    BigFloat value;
    BigFloat error_estimate;  // difference of the last two levels
    int levels = 0;
    long evaluations = 0;
};

// Integrates f over (0,1) until two successive level refinements agree
// to ~2^{-(target+guard/2)} relative; throws std::runtime_error if the
// level cap is reached first.
QuadratureResult integrate_01(const Integrand01& f, const PrecisionPolicy& policy);

}  // namespace ei
