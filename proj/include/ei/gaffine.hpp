// Exact values of the form p + q*G, where G = e*E1(1) is the
// Euler-Gompertz constant kept symbolic.
//
// The representation is formal: two values are equal iff both rational
// components are.  Closed under addition and rational scaling only
// (a product of two GAffine values would need G^2).

#pragma once

#include <string>

#include "ei/rational.hpp"

namespace ei {

struct GAffine {
    Rational p;  // rational part
    Rational q;  // coefficient of G

    GAffine() : p(0), q(0) {}
    GAffine(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {}

    static GAffine gompertz() { return GAffine(Rational(0), Rational(1)); }

    bool operator==(const GAffine& rhs) const { return p == rhs.p && q == rhs.q; }

    GAffine operator+(const GAffine& rhs) const { return {p + rhs.p, q + rhs.q}; }
    GAffine operator-(const GAffine& rhs) const { return {p - rhs.p, q - rhs.q}; }
    GAffine operator-() const { return {-p, -q}; }

    friend GAffine operator*(const Rational& c, const GAffine& v) {
        return {c * v.p, c * v.q};
    }
};

// "p+q*G" with each rational as num/den (den omitted when 1); the pure
// cases collapse: "0", "G", "-G", "3/2", "9/2*G", "-1+G", "-3+9/2*G".
inline std::string to_string(const GAffine& v) {
    if (v.q == 0) return to_string(v.p);
    std::string gpart;
    if (v.q == 1)
        gpart = "G";
    else if (v.q == -1)
        gpart = "-G";
    else
        gpart = to_string(v.q) + "*G";
    if (v.p == 0) return gpart;
    std::string s = to_string(v.p);
    if (sgn(v.q) > 0) s += "+";
    s += gpart;
    return s;
}

}  // namespace ei
