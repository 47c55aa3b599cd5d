#include <doctest.h>

#include "ei/sequences.hpp"

using ei::GAffine;
using ei::Rational;

namespace {

Rational Q(const char* s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("a_n values") {
    auto a = ei::a_seq(5);
    std::vector<Rational> expect = {Q("1"), Q("1"), Q("3/2"), Q("13/6"), Q("73/24"), Q("167/40")};
    CHECK(a == expect);
    CHECK(ei::a_seq(0) == std::vector<Rational>{Q("1")});
}

TEST_CASE("n! a_n are the A000262 integers") {
    auto f = ei::fact_a_seq(6);
    std::vector<ei::Integer> expect = {1, 1, 3, 13, 73, 501, 4051};
    CHECK(f == expect);
    // consistency with the rational table
    auto a = ei::a_seq(6);
    ei::Integer kfact(1);
    for (long n = 0; n <= 6; ++n) {
        if (n > 0) kfact *= n;
        CHECK(a[n] * Rational(kfact) == Rational(f[n]));
    }
}

TEST_CASE("closed form equals the recurrence") {
    CHECK(ei::a_closed(1) == 1);
    CHECK(ei::a_closed(2) == Q("3/2"));
    auto a = ei::a_seq(50);
    for (long n = 1; n <= 50; ++n) CHECK(ei::a_closed(n) == a[n]);
    CHECK_THROWS_AS(ei::a_closed(0), std::domain_error);
}

TEST_CASE("a_n' values") {
    auto ap = ei::aprime_seq(6);
    std::vector<Rational> expect = {Q("0"), Q("1"),   Q("1"),     Q("4/3"),
                                    Q("11/6"), Q("5/2"), Q("121/36")};
    CHECK(ap == expect);
    CHECK(ap[2] == 1);  // 2 a_2' = 3*1 - 0 - 1
    auto f = ei::fact_aprime_seq(4);
    std::vector<ei::Integer> fexpect = {0, 1, 2, 8, 44};
    CHECK(f == fexpect);
}

TEST_CASE("b_n as an affine value in G") {
    CHECK(ei::b_affine(0) == GAffine(Q("0"), Q("1")));
    CHECK(ei::b_affine(1) == GAffine(Q("-1"), Q("1")));
    CHECK(ei::b_affine(2) == GAffine(Q("-1"), Q("3/2")));
}

TEST_CASE("b recurrence holds exactly over GAffine") {
    long N = 100;
    auto a = ei::a_seq(N);
    auto ap = ei::aprime_seq(N);
    for (long n = 2; n <= N; ++n) {
        GAffine lhs = Rational(n) * GAffine(-ap[n], a[n]) -
                      Rational(2 * n - 1) * GAffine(-ap[n - 1], a[n - 1]) +
                      Rational(n - 2) * GAffine(-ap[n - 2], a[n - 2]);
        GAffine expect = n == 2 ? GAffine(Q("1"), Q("0")) : GAffine();
        CHECK(lhs == expect);
    }
}

TEST_CASE("rho and sigma") {
    CHECK(ei::rho_affine(2) == GAffine(Q("-3/2"), Q("9/4")));   // (9G-6)/4
    CHECK(ei::sigma_affine(2) == GAffine(Q("-3"), Q("9/2")));   // 9G/2 - 3
    CHECK(ei::sigma_affine(0) == GAffine(Q("0"), Q("0")));
    CHECK(ei::rho_affine(0) == GAffine::gompertz());
    CHECK(ei::rho_affine(1) == GAffine(Q("-1"), Q("1")));
}

TEST_CASE("four-term rho and sigma recurrences verify exactly") {
    auto rep = ei::check_rho_recurrence(3);
    CHECK(rep.passed);
    CHECK(rep.range_lo == 3);
    rep = ei::check_rho_recurrence(100);
    CHECK(rep.passed);
    CHECK(rep.range_hi == 100);
    CHECK(rep.failures.empty());
    CHECK_THROWS_AS(ei::check_rho_recurrence(2), std::invalid_argument);
}

TEST_CASE("convergents to G") {
    auto conv = ei::gompertz_convergents(5);
    std::vector<Rational> expect = {Q("1"), Q("2/3"), Q("8/13"), Q("44/73"), Q("100/167")};
    CHECK(conv == expect);
}

TEST_CASE("continued-fraction convergents and their identity") {
    CHECK(ei::bala_cf_convergent(1) == Q("1/3"));
    CHECK(ei::bala_cf_convergent(2) == Q("5/13"));
    // The third convergent comes out 29/73 in exact arithmetic; the
    // value 1 - 29/73 = 44/73 matches a_4'/a_4, as the identity below
    // requires.  (Printed lists elsewhere give 28/73 and 45/73, which
    // fail both the identity and monotone convergence to 1-G.)
    CHECK(ei::bala_cf_convergent(3) == Q("29/73"));
    CHECK(ei::bala_cf_convergent(4) == Q("201/501"));  // = 67/167 reduced

    auto a = ei::a_seq(51);
    auto ap = ei::aprime_seq(51);
    for (long n = 1; n <= 50; ++n)
        CHECK(Rational(1) - ei::bala_cf_convergent(n) == ap[n + 1] / a[n + 1]);
}

TEST_CASE("Laguerre specialization reproduces a_n") {
    auto a = ei::a_seq(100);
    for (long n = 0; n <= 100; ++n) CHECK(ei::laguerre_at_minus1(n) == a[n]);
}

TEST_CASE("GAffine rendering") {
    CHECK(ei::to_string(GAffine::gompertz()) == "G");
    CHECK(ei::to_string(ei::b_affine(1)) == "-1+G");
    CHECK(ei::to_string(ei::sigma_affine(2)) == "-3+9/2*G");
    CHECK(ei::to_string(GAffine()) == "0");
    CHECK(ei::to_string(GAffine(Q("0"), Q("-1"))) == "-G");
    CHECK(ei::to_string(GAffine(Q("2"), Q("-3/2"))) == "2-3/2*G");
}

}  // TEST_SUITE
