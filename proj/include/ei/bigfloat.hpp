// Arbitrary-precision binary floating point on top of MPFR.
//
// Values carry their own precision; binary operations round to the
// larger operand precision, always to nearest.  Algorithms set a working
// precision (target + guard bits) on every operand they create, so all
// intermediate rounding happens at the declared working precision.

#pragma once

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ei/rational.hpp"

namespace ei {

struct PrecisionPolicy {
    long target_bits = 256;
    long guard_bits = 32;
    int max_doublings = 8;

    PrecisionPolicy() = default;
    explicit PrecisionPolicy(long target, long guard = 32, int doublings = 8)
        : target_bits(target), guard_bits(guard), max_doublings(doublings) {
        if (target_bits < 16)
            throw std::invalid_argument("PrecisionPolicy: target_bits >= 16 required");
    }

    long working_bits() const { return target_bits + guard_bits; }
};

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigFloat of_long(long x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat of_double(double x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat of_integer(const Integer& x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat of_rational(const Rational& x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    // 2^e, exact.
    static BigFloat pow2(long e, mpfr_prec_t prec = 64) {
        BigFloat r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat euler_e(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, 1, MPFR_RNDN);
        mpfr_exp(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }

    // Decimal rendering; digits = 0 picks the full precision of the value.
    std::string to_string(size_t digits = 0) const;

private:
    mpfr_t v_;
};

namespace detail {
inline mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace detail

#define EI_BIGFLOAT_BINOP(op, fn)                                        \
    inline BigFloat operator op(const BigFloat& a, const BigFloat& b) {  \
        BigFloat r(detail::join(a, b));                                  \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                        \
        return r;                                                        \
    }                                                                    \
    inline BigFloat operator op(const BigFloat& a, long b) {             \
        BigFloat r(a.precision());                                       \
        fn##_si(r.raw(), a.raw(), b, MPFR_RNDN);                         \
        return r;                                                        \
    }

EI_BIGFLOAT_BINOP(+, mpfr_add)
EI_BIGFLOAT_BINOP(-, mpfr_sub)
EI_BIGFLOAT_BINOP(*, mpfr_mul)
EI_BIGFLOAT_BINOP(/, mpfr_div)
#undef EI_BIGFLOAT_BINOP

inline BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

#define EI_BIGFLOAT_UNARY(name, fn)                 \
    inline BigFloat name(const BigFloat& a) {       \
        BigFloat r(a.precision());                  \
        fn(r.raw(), a.raw(), MPFR_RNDN);            \
        return r;                                   \
    }

EI_BIGFLOAT_UNARY(abs, mpfr_abs)
EI_BIGFLOAT_UNARY(sqrt, mpfr_sqrt)
EI_BIGFLOAT_UNARY(exp, mpfr_exp)
EI_BIGFLOAT_UNARY(log, mpfr_log)
EI_BIGFLOAT_UNARY(cosh, mpfr_cosh)
EI_BIGFLOAT_UNARY(sinh, mpfr_sinh)
#undef EI_BIGFLOAT_UNARY

inline BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(detail::join(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat pow_si(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

// a * 2^e
inline BigFloat ldexp(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

inline int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }

}  // namespace ei
