// Exact rational arithmetic substrate.
//
// All exact sequence values and series coefficients in this library are
// GMP rationals (mpq_class).  Arithmetic results are always canonical
// (reduced, positive denominator), so equality is plain comparison.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ei {

using Rational = mpq_class;
using Integer = mpz_class;

// num/den reduced to lowest terms; den must be nonzero.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

inline bool is_even_integer(const Rational& q) {
    return is_integer(q) && mpz_even_p(q.get_num().get_mpz_t());
}

// True iff den(q) is a power of two (1 counts).
inline bool is_dyadic(const Rational& q) {
    const Integer& d = q.get_den();
    // scan_1 returns the index of the lowest set bit; a power of two has
    // exactly one set bit, at position sizeinbase-1.
    return mpz_scan1(d.get_mpz_t(), 0) == mpz_sizeinbase(d.get_mpz_t(), 2) - 1;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Ascending factorial (x)_n = x(x+1)...(x+n-1) over exact rationals.
inline Rational pochhammer(const Rational& x, unsigned long n) {
    Rational acc(1);
    Rational term(x);
    for (unsigned long i = 0; i < n; ++i) {
        acc *= term;
        term += 1;
    }
    return acc;
}

// "num/den", den omitted when 1.  Lossless and round-trippable.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace ei
