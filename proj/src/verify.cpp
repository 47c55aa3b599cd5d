#include "ei/verify.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "ei/asymptotics.hpp"
#include "ei/numerics.hpp"
#include "ei/sequences.hpp"

namespace ei {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string config_K(long K) {
    return nlohmann::json{{"K", K}}.dump();
}

}  // namespace

const std::vector<Rational>& VerifyContext::c_upto(long M) {
    if (static_cast<long>(c_.size()) < M + 1) c_ = c_direct(M);
    return c_;
}

const std::vector<Rational>& VerifyContext::d_upto(long K) {
    if (static_cast<long>(d_.size()) < K + 1) d_ = d_recursive(K);
    return d_;
}

const std::vector<Rational>& VerifyContext::r_upto(long K) {
    if (static_cast<long>(r_.size()) < K + 1) r_ = r_seq(K);
    return r_;
}

void check_r_integer(const std::vector<Rational>& r, VerificationReport& rep) {
    for (long k = rep.range_lo; k <= rep.range_hi; ++k) {
        const Rational& v = r[static_cast<size_t>(k)];
        if (!is_integer(v))
            rep.add_failure(k, "integer r_k", to_string(v));
    }
}

void check_r_congruence_mod32(const std::vector<Rational>& r, VerificationReport& rep) {
    for (long k = rep.range_lo; k <= rep.range_hi; ++k) {
        const Rational& v = r[static_cast<size_t>(k)];
        if (!is_integer(v)) {
            rep.add_failure(k, "integer r_k", to_string(v));
            continue;
        }
        Integer diff = v.get_num() - binomial(static_cast<unsigned long>(2 * k),
                                              static_cast<unsigned long>(k));
        Integer rem;
        mpz_mod_ui(rem.get_mpz_t(), diff.get_mpz_t(), 32);
        if (rem != 0)
            rep.add_failure(k, "r_k = binom(2k,k) (mod 32)",
                            "r_k - binom = " + diff.get_str() + ", mod 32 = " + rem.get_str());
    }
}

VerificationReport verify_conjecture_r_integer(long K, VerifyContext* ctx) {
    if (K < 0) throw std::invalid_argument("verify_conjecture_r_integer: K >= 0");
    auto t0 = Clock::now();
    VerifyContext local;
    const auto& r = (ctx ? *ctx : local).r_upto(K);
    VerificationReport rep;
    rep.check_name = "conjecture_r_integer";
    rep.range_lo = 0;
    rep.range_hi = K;
    rep.config = config_K(K);
    check_r_integer(r, rep);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport verify_congruence_mod32(long K, VerifyContext* ctx) {
    if (K < 3) throw std::invalid_argument("verify_congruence_mod32: K >= 3 required");
    auto t0 = Clock::now();
    VerifyContext local;
    const auto& r = (ctx ? *ctx : local).r_upto(K);
    VerificationReport rep;
    rep.check_name = "congruence_mod32";
    rep.range_lo = 3;
    rep.range_hi = K;
    rep.config = config_K(K);
    check_r_congruence_mod32(r, rep);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport verify_signs(long K, VerifyContext* ctx) {
    if (K < 0) throw std::invalid_argument("verify_signs: K >= 0");
    auto t0 = Clock::now();
    VerifyContext local;
    VerifyContext& cx = ctx ? *ctx : local;
    const auto& c = cx.c_upto(K);
    const auto& r = cx.r_upto(K);
    VerificationReport rep;
    rep.check_name = "signs";
    rep.range_lo = 0;
    rep.range_hi = K;
    rep.config = config_K(K);
    for (long k = 0; k <= K; ++k) {
        const Rational& v = c[static_cast<size_t>(k)];
        bool positive_exception = (k == 0 || k == 4);
        if (positive_exception ? !(v > 0) : !(v < 0))
            rep.add_failure(k, positive_exception ? "c_k > 0" : "c_k < 0", to_string(v));
    }
    for (long k = 3; k <= K; ++k)
        if (!(r[static_cast<size_t>(k)] < 0))
            rep.add_failure(k, "r_k < 0", to_string(r[static_cast<size_t>(k)]));
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport verify_theorem_Rk(long K, VerifyContext* ctx) {
    if (K < 0) throw std::invalid_argument("verify_theorem_Rk: K >= 0");
    auto t0 = Clock::now();
    VerifyContext local;
    const auto& r = (ctx ? *ctx : local).r_upto(K);
    VerificationReport rep;
    rep.check_name = "theorem_k_factorial_r";
    rep.range_lo = 0;
    rep.range_hi = K;
    rep.config = config_K(K);
    Integer kfact(1);
    for (long k = 0; k <= K; ++k) {
        if (k > 0) kfact *= k;
        Rational R = r[static_cast<size_t>(k)] * Rational(kfact);
        if (!is_integer(R))
            rep.add_failure(k, "k! r_k integer", to_string(R));
        else if (k >= 1 && !is_even_integer(R))
            rep.add_failure(k, "k! r_k even", to_string(R));
    }
    const long beta_hi = std::min<long>(K, 100);
    for (long k = 1; k <= beta_hi; ++k)
        for (long j = 0; j < k; ++j)
            if (!is_even_integer(beta(j, k)))
                rep.add_failure(k, "beta_{j,k} even integer",
                                "j=" + std::to_string(j) + ": " + to_string(beta(j, k)));
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport verify_cross_methods(long K, VerifyContext* ctx, long c_cross_cap) {
    if (K < 0) throw std::invalid_argument("verify_cross_methods: K >= 0");
    auto t0 = Clock::now();
    VerifyContext local;
    VerifyContext& cx = ctx ? *ctx : local;
    VerificationReport rep;
    rep.check_name = "cross_methods";
    rep.range_lo = 0;
    rep.range_hi = K;
    const long Mc = std::min(2 * K, c_cross_cap);
    rep.config = nlohmann::json{{"K", K}, {"c_range", 2 * K}, {"c_cross_range", Mc}}.dump();

    const auto& cd = cx.c_upto(2 * K);
    auto cr = c_recursive(Mc);
    for (long m = 0; m <= Mc; ++m)
        if (cd[static_cast<size_t>(m)] != cr[static_cast<size_t>(m)])
            rep.add_failure(m, "c_direct = c_recursive: " + to_string(cd[static_cast<size_t>(m)]),
                            to_string(cr[static_cast<size_t>(m)]));

    const auto& dr = cx.d_upto(K);
    auto dc = d_convolution(K, cd);
    auto da = d_alpha(K);
    for (long k = 0; k <= K; ++k) {
        if (dc[static_cast<size_t>(k)] != dr[static_cast<size_t>(k)])
            rep.add_failure(k, "d_convolution = d_recursive: " + to_string(dc[static_cast<size_t>(k)]),
                            to_string(dr[static_cast<size_t>(k)]));
        if (da[static_cast<size_t>(k)] != dr[static_cast<size_t>(k)])
            rep.add_failure(k, "d_alpha = d_recursive: " + to_string(dr[static_cast<size_t>(k)]),
                            to_string(da[static_cast<size_t>(k)]));
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport verify_asymptotics(long n_lo, long n_hi, const std::vector<long>& Ms,
                                      const PrecisionPolicy& policy, long perron_n) {
    if (n_lo < 100 || n_hi <= n_lo)
        throw std::invalid_argument("verify_asymptotics: need 100 <= n_lo < n_hi");
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_name = "asymptotic_error_orders";
    rep.range_lo = n_lo;
    rep.range_hi = n_hi;

    long maxM = 0;
    for (long M : Ms) maxM = std::max(maxM, M);
    auto c = c_direct(maxM + 1);

    BigFloat ref_lo = bn_miller(n_lo, policy);
    BigFloat ref_hi = bn_miller(n_hi, policy);
    double log_n_ratio = std::log(static_cast<double>(n_hi) / static_cast<double>(n_lo));

    nlohmann::json measured = nlohmann::json::array();
    for (long M : Ms) {
        BigFloat e_lo = abs((asym_b(n_lo, M, c, policy) - ref_lo) / ref_lo);
        BigFloat e_hi = abs((asym_b(n_hi, M, c, policy) - ref_hi) / ref_hi);
        double slope = (log(e_hi) - log(e_lo)).to_double() / log_n_ratio;
        double expected = -(static_cast<double>(M) + 1.0) / 2.0;
        measured.push_back({{"M", M}, {"slope", slope}, {"expected", expected}});
        if (std::abs(slope - expected) > 0.3)
            rep.add_failure(M, "slope " + std::to_string(expected) + " +- 0.3",
                            std::to_string(slope));
    }

    // Leading-constant check: a_n (stable forward recurrence in floats)
    // against the one-term asymptotic form.
    double perron_ratio = 0.0;
    if (perron_n > 0) {
        BigFloat an = a_forward(perron_n, policy);
        BigFloat lead = asym_a(perron_n, 0, c, policy);
        perron_ratio = (an / lead).to_double();
        if (std::abs(perron_ratio - 1.0) > 0.01)
            rep.add_failure(perron_n, "a_n / leading-term ratio within 1% of 1",
                            std::to_string(perron_ratio));
    }

    rep.config = nlohmann::json{{"n_lo", n_lo},
                                {"n_hi", n_hi},
                                {"Ms", Ms},
                                {"target_bits", policy.target_bits},
                                {"perron_n", perron_n},
                                {"measured", measured},
                                {"perron_ratio", perron_ratio}}
                     .dump();
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

std::vector<VerificationReport> run_battery(const std::string& battery,
                                            const VerifyOptions& opts) {
    long K = opts.extended ? std::max(opts.K, 1000L) : opts.K;
    VerifyContext ctx;
    std::vector<VerificationReport> out;

    auto want = [&](const char* name) { return battery == "all" || battery == name; };
    bool known = battery == "all";

    if (want("conjecture")) {
        known = true;
        out.push_back(verify_conjecture_r_integer(K, &ctx));
    }
    if (want("congruence")) {
        known = true;
        out.push_back(verify_congruence_mod32(std::max<long>(K, 3), &ctx));
    }
    if (want("signs")) {
        known = true;
        out.push_back(verify_signs(K, &ctx));
    }
    if (want("theorem")) {
        known = true;
        out.push_back(verify_theorem_Rk(K, &ctx));
    }
    if (want("cross")) {
        known = true;
        out.push_back(verify_cross_methods(K, &ctx));
    }
    if (battery == "all") {
        // exact rho/sigma recurrence identities ride along with the full battery
        out.push_back(check_rho_recurrence(500));
    }
    if (want("asymptotics")) {
        known = true;
        out.push_back(verify_asymptotics(10000, 40000, {0, 2, 4}, opts.policy));
    }
    if (!known) throw std::invalid_argument("run_battery: unknown battery '" + battery + "'");
    return out;
}

}  // namespace ei
