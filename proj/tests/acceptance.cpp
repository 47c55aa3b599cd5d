// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run with --only N to execute a single criterion.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "ei/asymptotics.hpp"
#include "ei/numerics.hpp"
#include "ei/sequences.hpp"
#include "ei/verify.hpp"

namespace {

using ei::BigFloat;
using ei::PrecisionPolicy;
using ei::Rational;

Rational Q(const char* s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

bool check(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

// 1. Exact reproduction of the published (OEIS) sequence/coefficient values.
bool criterion1(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<Rational> a_expect = {Q("1"), Q("1"), Q("3/2"), Q("13/6"), Q("73/24"), Q("167/40")};
    ok &= check(ei::a_seq(5) == a_expect, "a_0..a_5", detail);
    std::vector<Rational> ap_expect = {Q("0"), Q("1"), Q("1"), Q("4/3"), Q("11/6"), Q("5/2"),
                                       Q("121/36")};
    ok &= check(ei::aprime_seq(6) == ap_expect, "a'_0..a'_6", detail);
    std::vector<Rational> c_expect = {Q("1"),
                                      Q("-5/48"),
                                      Q("-479/4608"),
                                      Q("-15313/3317760"),
                                      Q("710401/127401984"),
                                      Q("-3532731539/214035333120")};
    ok &= check(ei::c_direct(5) == c_expect, "c_0..c_5", detail);
    std::vector<Rational> d_expect = {Q("1"), Q("-7/32"), Q("43/2048"), Q("-915/65536")};
    ok &= check(ei::d_recursive(3) == d_expect, "d_0..d_3", detail);
    std::vector<Rational> r_expect = {Q("1"),      Q("-14"),       Q("86"),          Q("-3660"),
                                      Q("-1042202"), Q("-247948260"), Q("-108448540420")};
    ok &= check(ei::r_seq(6) == r_expect, "r_0..r_6", detail);
    auto ms = ei::mu_series(3);
    ok &= check(ms.expmu.coeff(0) == Q("1") && ms.expmu.coeff(1) == Q("-1/12") &&
                    ms.expmu.coeff(2) == Q("1/288") && ms.expmu.coeff(3) == Q("67/51840"),
                "exp(mu) to h^3", detail);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    ok &= check(elapsed < 1000, "runtime < 1 s (got " + std::to_string(elapsed) + " ms)", detail);
    return ok;
}

// 2. Cross-method exactness: c to 200, d (three routes) to 300.
bool criterion2(std::string& detail) {
    bool ok = true;
    auto cd = ei::c_direct(600);
    auto cr = ei::c_recursive(200);
    for (long m = 0; m <= 200 && ok; ++m)
        ok &= check(cd[static_cast<size_t>(m)] == cr[static_cast<size_t>(m)],
                    "c_direct != c_recursive at m=" + std::to_string(m), detail);
    auto dr = ei::d_recursive(300);
    auto dc = ei::d_convolution(300, cd);
    auto da = ei::d_alpha(300);
    ok &= check(dr == dc, "d_recursive != d_convolution", detail);
    ok &= check(dr == da, "d_recursive != d_alpha", detail);
    return ok;
}

// 3. Conjecture battery at paper scale (K = 1000).
bool criterion3(std::string& detail) {
    ei::VerifyContext ctx;
    bool ok = true;
    auto r1 = ei::verify_conjecture_r_integer(1000, &ctx);
    ok &= check(r1.passed, "r_k integrality failed", detail);
    auto r2 = ei::verify_congruence_mod32(1000, &ctx);
    ok &= check(r2.passed, "mod-32 congruence failed", detail);
    auto r3 = ei::verify_signs(1000, &ctx);
    ok &= check(r3.passed, "sign pattern failed", detail);
    auto r4 = ei::verify_theorem_Rk(1000, &ctx);
    ok &= check(r4.passed, "k! r_k in 2Z failed", detail);
    return ok;
}

// 4. Exact recurrence identities.
bool criterion4(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    const long N = 500;
    auto a = ei::a_seq(N);
    auto ap = ei::aprime_seq(N);
    for (long n = 2; n <= N && ok; ++n) {
        ei::GAffine lhs = Rational(n) * ei::GAffine(-ap[static_cast<size_t>(n)], a[static_cast<size_t>(n)]) -
                          Rational(2 * n - 1) * ei::GAffine(-ap[static_cast<size_t>(n - 1)], a[static_cast<size_t>(n - 1)]) +
                          Rational(n - 2) * ei::GAffine(-ap[static_cast<size_t>(n - 2)], a[static_cast<size_t>(n - 2)]);
        ei::GAffine expect = n == 2 ? ei::GAffine(Rational(1), Rational(0)) : ei::GAffine();
        ok &= check(lhs == expect, "b recurrence at n=" + std::to_string(n), detail);
    }
    ok &= check(ei::check_rho_recurrence(N).passed, "rho/sigma recurrences", detail);
    for (long n = 1; n <= N && ok; ++n)
        ok &= check(ei::a_closed(n) == a[static_cast<size_t>(n)],
                    "closed form at n=" + std::to_string(n), detail);
    for (long n = 0; n <= 100 && ok; ++n)
        ok &= check(ei::laguerre_at_minus1(n) == a[static_cast<size_t>(n)],
                    "Laguerre identity at n=" + std::to_string(n), detail);
    for (long n = 1; n <= 200 && ok; ++n)
        ok &= check(Rational(1) - ei::bala_cf_convergent(n) ==
                        ap[static_cast<size_t>(n + 1)] / a[static_cast<size_t>(n + 1)],
                    "continued-fraction identity at n=" + std::to_string(n), detail);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    ok &= check(elapsed < 30000, "runtime < 30 s (got " + std::to_string(elapsed) + " ms)", detail);
    return ok;
}

// 5. Kummer identities at the stated tolerances.
bool criterion5(std::string& detail) {
    bool ok = true;
    PrecisionPolicy p(128);
    BigFloat one = BigFloat::of_long(1, p.working_bits());
    BigFloat inv_e = one / BigFloat::euler_e(p.working_bits());
    auto a = ei::a_seq(50);
    BigFloat tol64 = BigFloat::pow2(-64);
    for (long n = 1; n <= 50 && ok; ++n) {
        BigFloat lhs = inv_e * ei::kummer_M(n + 1, 2, one, p);
        BigFloat ref = BigFloat::of_rational(a[static_cast<size_t>(n)], p.working_bits());
        ok &= check(abs(lhs - ref) < ref * tol64, "M identity at n=" + std::to_string(n), detail);
    }
    BigFloat tol48 = BigFloat::pow2(-48);
    for (long n = 1; n <= 30 && ok; ++n) {
        BigFloat u = ei::tricomi_U(n, 0, one, p);
        BigFloat gamma_n = BigFloat::of_integer(ei::factorial(static_cast<unsigned long>(n - 1)),
                                                p.working_bits());
        BigFloat b = ei::bn_miller(n, p);
        ok &= check(abs(-gamma_n * u - b) < abs(b) * tol48,
                    "U identity at n=" + std::to_string(n), detail);
    }
    return ok;
}

// 6. Forward instability vs. Miller/quadrature consensus at 128 bits.
bool criterion6(std::string& detail) {
    PrecisionPolicy p(128);
    auto fwd = ei::bn_forward(200, p);
    long bad = -1;
    for (long n = 3; n <= 200; ++n) {
        BigFloat ref = ei::bn_miller(n, p);
        if (abs(fwd[static_cast<size_t>(n)] - ref) > abs(ref) * BigFloat::pow2(-64)) {
            bad = n;
            break;
        }
    }
    if (!check(bad > 0, "forward recurrence never left the consensus by 2^-64 for n <= 200",
               detail))
        return false;
    BigFloat m = ei::bn_miller(bad, p);
    BigFloat q = ei::bn_quadrature(bad, p);
    bool ok = check(abs(m - q) <= abs(q) * BigFloat::pow2(-96),
                    "miller/quadrature disagree at n=" + std::to_string(bad), detail);
    if (ok) detail = "divergence at n=" + std::to_string(bad);
    return ok;
}

// 7. Asymptotic error orders and the leading Perron constant.
bool criterion7(std::string& detail) {
    auto rep = ei::verify_asymptotics(10000, 40000, {0, 2, 4}, PrecisionPolicy(256), 1000000);
    if (!rep.passed && !rep.failures.empty())
        detail = "index " + std::to_string(rep.failures[0].index) + ": expected " +
                 rep.failures[0].expected + ", got " + rep.failures[0].got;
    return rep.passed;
}

// 8. Bessel-product analogue, exact.
bool criterion8(std::string& detail) {
    bool ok = true;
    for (long k = 0; k <= 200 && ok; ++k) {
        try {
            ei::bessel_e(k, 0);  // internally asserts the closed form
        } catch (const std::exception& e) {
            ok = check(false, e.what(), detail);
        }
    }
    for (long nu = -10; nu <= 10 && ok; ++nu)
        for (long k = 0; k <= 100 && ok; ++k) {
            Rational scaled = ei::bessel_e(k, nu) *
                              Rational(ei::pow2(4 * static_cast<unsigned long>(k)));
            ok &= check(ei::is_integer(scaled),
                        "2^{4k} e_{k,nu} not integral at k=" + std::to_string(k) +
                            ", nu=" + std::to_string(nu),
                        detail);
        }
    return ok;
}

// 9. Byte-exact b-file output across runs.
bool criterion9(std::string& detail) {
    auto run = [](std::string& out) {
        out.clear();
        std::string cmd = std::string(EISEQ_BIN) + " seq fact_a --max 6 --format bfile";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return -1;
        char buf[1024];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        int status = pclose(pipe);
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const std::string expect = "0 1\n1 1\n2 3\n3 13\n4 73\n5 501\n6 4051\n";
    std::string out1, out2;
    bool ok = check(run(out1) == 0 && run(out2) == 0, "CLI invocation failed", detail);
    ok &= check(out1 == expect, "b-file bytes differ from the frozen form", detail);
    ok &= check(out1 == out2, "b-file bytes differ between runs", detail);
    return ok;
}

struct Criterion {
    int id;
    const char* name;
    bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "tabulated-value reproduction (exact)", criterion1},
    {2, "cross-method exactness (c to 200, d to 300)", criterion2},
    {3, "conjecture battery at K=1000", criterion3},
    {4, "recurrence identities (n <= 500)", criterion4},
    {5, "Kummer identities (numeric)", criterion5},
    {6, "forward-instability demonstration", criterion6},
    {7, "asymptotic error orders and Perron constant", criterion7},
    {8, "Bessel-product analogue", criterion8},
    {9, "b-file byte-exactness", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc - 1; ++i)
        if (std::strcmp(argv[i], "--only") == 0) only = std::atoi(argv[i + 1]);

    int failures = 0;
    for (const auto& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("%s criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    static_cast<long long>(ms), detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
