#include "ei/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ei {

namespace {

struct Node {
    BigFloat s, one_minus_s, weight;
    bool negligible = false;  // weight underflowed; the tail is done
};

// Abscissa and weight at u: s = 1/(1+e^{-pi sinh u}), w = pi cosh(u) s (1-s).
Node node_at(const BigFloat& u, const BigFloat& pi_wp, mpfr_prec_t wp) {
    Node n{BigFloat(wp), BigFloat(wp), BigFloat(wp)};
    BigFloat x = pi_wp * sinh(u);
    BigFloat one = BigFloat::of_long(1, wp);
    n.s = one / (one + exp(-x));
    n.one_minus_s = one / (one + exp(x));
    n.weight = pi_wp * cosh(u) * n.s * n.one_minus_s;
    n.negligible = n.weight.is_zero();
    return n;
}

}  // namespace

QuadratureResult integrate_01(const Integrand01& f, const PrecisionPolicy& policy) {
    const mpfr_prec_t wp =
        static_cast<mpfr_prec_t>(policy.working_bits() + 24);
    const BigFloat pi_wp = BigFloat::pi(wp);
    const double u_cap = 10.0;  // pi sinh(10) ~ 2^{-49900}: past any wp here
    const int max_level = 15;
    const int min_level = 3;

    QuadratureResult res{BigFloat(wp), BigFloat(wp), 0, 0};
    BigFloat sum(wp);  // running sum of w_k f_k over all points so far
    BigFloat prev(wp); // previous level value
    bool have_prev = false;

    const BigFloat cutoff_scale = BigFloat::pow2(-(policy.working_bits() + 16), wp);
    auto add_point = [&](double uk) {
        // returns true when the contribution was negligible
        BigFloat u = BigFloat::of_double(uk, wp);
        Node nd = node_at(u, pi_wp, wp);
        ++res.evaluations;
        if (nd.negligible) return true;
        BigFloat term = nd.weight * f(nd.s, nd.one_minus_s);
        sum = sum + term;
        return term.is_zero() ||
               (!sum.is_zero() && abs(term) < abs(sum) * cutoff_scale);
    };

    for (int level = 0; level <= max_level; ++level) {
        const double h = std::ldexp(1.0, -level);
        const long kstep = level == 0 ? 1 : 2;  // levels > 0 add the odd multiples

        if (level == 0) add_point(0.0);
        for (int side = 0; side < 2; ++side) {
            long zeros_in_a_row = 0;
            for (long k = 1; k * h <= u_cap; k += kstep) {
                bool tiny = add_point(side == 0 ? k * h : -k * h);
                zeros_in_a_row = tiny ? zeros_in_a_row + 1 : 0;
                if (zeros_in_a_row >= 2) break;
            }
        }

        BigFloat value = BigFloat::of_double(h, wp) * sum;
        if (have_prev) {
            BigFloat diff = abs(value - prev);
            res.error_estimate = diff;
            bool small_enough =
                diff <= abs(value) * BigFloat::pow2(-(policy.target_bits + policy.guard_bits / 2), wp);
            bool both_zero = value.is_zero() && prev.is_zero();
            if (level >= min_level && (small_enough || both_zero)) {
                res.value = value;
                res.levels = level;
                return res;
            }
        }
        prev = value;
        have_prev = true;
    }
    throw std::runtime_error("integrate_01: tolerance not reached at level cap");
}

}  // namespace ei
