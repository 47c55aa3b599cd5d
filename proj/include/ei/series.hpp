// Truncated formal power series over exact rationals.
//
// A SeriesQ of order n stores exactly the coefficients of h^0..h^n.
// Every operation truncates to the smaller operand order; nothing ever
// extends a series silently.  Orders are fixed up front by the caller
// (the coefficient extractions downstream all know their target order
// in advance, plus one guard coefficient wherever a division by h
// occurs, since that shortens the series by one).

#pragma once

#include <vector>

#include "ei/rational.hpp"

namespace ei {

class SeriesQ {
public:
    // Zero series of the given truncation order.
    explicit SeriesQ(long order);
    // Takes ownership of an explicit coefficient list (order = size - 1).
    explicit SeriesQ(std::vector<Rational> coeffs);

    static SeriesQ constant(const Rational& c, long order);
    static SeriesQ one(long order) { return constant(Rational(1), order); }
    // c * h^power, truncated to `order`.
    static SeriesQ monomial(const Rational& c, long power, long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    // Coefficient of h^k; throws std::out_of_range outside [0, order].
    const Rational& coeff(long k) const;

    // Copy truncated to new_order (must be <= order()).
    SeriesQ truncated(long new_order) const;

    // Division by h: requires coeff(0) == 0, drops the order by one.
    SeriesQ shift_down() const;

    // Substitute h -> s*h^2 with s in {-1,+1}; result keeps this order.
    SeriesQ subst_h_to_sh2(int s) const;

    bool operator==(const SeriesQ& rhs) const { return coeffs_ == rhs.coeffs_; }

    friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator*(const Rational& c, const SeriesQ& a);
    friend SeriesQ operator-(const SeriesQ& a);

private:
    std::vector<Rational> coeffs_;
};

// Formal exponential; requires zero constant term.
SeriesQ exp(const SeriesQ& a);

// Binomial series a^e for rational e; requires constant term 1.
SeriesQ pow(const SeriesQ& a, const Rational& e);

// Reciprocal; requires nonzero constant term.
SeriesQ inverse(const SeriesQ& a);

// True when a and b agree on coefficients of h^0..h^order.
bool equal_to_order(const SeriesQ& a, const SeriesQ& b, long order);

}  // namespace ei
