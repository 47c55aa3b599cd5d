#include "ei/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ei {

SeriesQ::SeriesQ(long order) {
    if (order < 0) throw std::invalid_argument("SeriesQ: negative order");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

SeriesQ::SeriesQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("SeriesQ: empty coefficient list");
}

SeriesQ SeriesQ::constant(const Rational& c, long order) {
    SeriesQ s(order);
    s.coeffs_[0] = c;
    return s;
}

SeriesQ SeriesQ::monomial(const Rational& c, long power, long order) {
    if (power < 0) throw std::invalid_argument("SeriesQ::monomial: negative power");
    SeriesQ s(order);
    if (power <= order) s.coeffs_[static_cast<size_t>(power)] = c;
    return s;
}

const Rational& SeriesQ::coeff(long k) const {
    if (k < 0 || k > order())
        throw std::out_of_range("SeriesQ::coeff: index " + std::to_string(k) +
                                " outside order " + std::to_string(order()));
    return coeffs_[static_cast<size_t>(k)];
}

SeriesQ SeriesQ::truncated(long new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::out_of_range("SeriesQ::truncated: bad order");
    return SeriesQ(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

SeriesQ SeriesQ::shift_down() const {
    if (coeffs_[0] != 0)
        throw std::domain_error("SeriesQ::shift_down: nonzero constant term");
    if (order() == 0)
        throw std::domain_error("SeriesQ::shift_down: order would become negative");
    return SeriesQ(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

SeriesQ SeriesQ::subst_h_to_sh2(int s) const {
    if (s != 1 && s != -1)
        throw std::invalid_argument("SeriesQ::subst_h_to_sh2: s must be +1 or -1");
    SeriesQ r(order());
    int sign = 1;
    for (long i = 0; 2 * i <= order(); ++i) {
        r.coeffs_[static_cast<size_t>(2 * i)] = sign > 0 ? coeffs_[static_cast<size_t>(i)]
                                                         : -coeffs_[static_cast<size_t>(i)];
        sign *= s;
    }
    return r;
}

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
    long n = std::min(a.order(), b.order());
    SeriesQ r(n);
    for (long i = 0; i <= n; ++i)
        r.coeffs_[static_cast<size_t>(i)] =
            a.coeffs_[static_cast<size_t>(i)] + b.coeffs_[static_cast<size_t>(i)];
    return r;
}

SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) {
    long n = std::min(a.order(), b.order());
    SeriesQ r(n);
    for (long i = 0; i <= n; ++i)
        r.coeffs_[static_cast<size_t>(i)] =
            a.coeffs_[static_cast<size_t>(i)] - b.coeffs_[static_cast<size_t>(i)];
    return r;
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
    long n = std::min(a.order(), b.order());
    SeriesQ r(n);
    Rational t;
    for (long i = 0; i <= n; ++i) {
        if (a.coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; i + j <= n; ++j) {
            if (b.coeffs_[static_cast<size_t>(j)] == 0) continue;
            t = a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
            r.coeffs_[static_cast<size_t>(i + j)] += t;
        }
    }
    return r;
}

SeriesQ operator*(const Rational& c, const SeriesQ& a) {
    SeriesQ r(a.order());
    for (long i = 0; i <= a.order(); ++i)
        r.coeffs_[static_cast<size_t>(i)] = c * a.coeffs_[static_cast<size_t>(i)];
    return r;
}

SeriesQ operator-(const SeriesQ& a) {
    return Rational(-1) * a;
}

SeriesQ exp(const SeriesQ& a) {
    if (a.coeff(0) != 0)
        throw std::domain_error("exp(SeriesQ): nonzero constant term");
    long n = a.order();
    std::vector<Rational> f(static_cast<size_t>(n) + 1, Rational(0));
    f[0] = 1;
    // f' = a' f  =>  k f_k = sum_{m=1..k} m a_m f_{k-m}
    for (long k = 1; k <= n; ++k) {
        Rational acc(0);
        for (long m = 1; m <= k; ++m) {
            const Rational& am = a.coeff(m);
            if (am == 0) continue;
            acc += Rational(m) * am * f[static_cast<size_t>(k - m)];
        }
        f[static_cast<size_t>(k)] = acc / k;
    }
    return SeriesQ(std::move(f));
}

SeriesQ pow(const SeriesQ& a, const Rational& e) {
    if (a.coeff(0) != 1)
        throw std::domain_error("pow(SeriesQ): constant term must be 1");
    long n = a.order();
    std::vector<Rational> f(static_cast<size_t>(n) + 1, Rational(0));
    f[0] = 1;
    // f' a = e a' f  =>  k f_k = sum_{m=1..k} ((e+1)m - k) a_m f_{k-m}
    for (long k = 1; k <= n; ++k) {
        Rational acc(0);
        for (long m = 1; m <= k; ++m) {
            const Rational& am = a.coeff(m);
            if (am == 0) continue;
            acc += ((e + 1) * m - k) * am * f[static_cast<size_t>(k - m)];
        }
        f[static_cast<size_t>(k)] = acc / k;
    }
    return SeriesQ(std::move(f));
}

SeriesQ inverse(const SeriesQ& a) {
    const Rational& a0 = a.coeff(0);
    if (a0 == 0)
        throw std::domain_error("inverse(SeriesQ): zero constant term");
    long n = a.order();
    std::vector<Rational> f(static_cast<size_t>(n) + 1, Rational(0));
    f[0] = 1 / a0;
    for (long k = 1; k <= n; ++k) {
        Rational acc(0);
        for (long m = 1; m <= k; ++m) {
            const Rational& am = a.coeff(m);
            if (am == 0) continue;
            acc += am * f[static_cast<size_t>(k - m)];
        }
        f[static_cast<size_t>(k)] = -acc / a0;
    }
    return SeriesQ(std::move(f));
}

bool equal_to_order(const SeriesQ& a, const SeriesQ& b, long order) {
    if (order > a.order() || order > b.order()) return false;
    for (long i = 0; i <= order; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

}  // namespace ei
