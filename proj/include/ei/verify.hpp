// The verification battery: exact integrality/sign/congruence checks on
// the r_k = 2^{6k} d_k scaling, exact cross-method agreement of the c
// and d routes, and numeric validation of the asymptotic error orders.
//
// Each check returns a machine-readable VerificationReport; a failed
// index always lands in the report as a concrete counterexample rather
// than an exception.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ei/bigfloat.hpp"
#include "ei/rational.hpp"
#include "ei/report.hpp"

namespace ei {

// Shares the expensive coefficient tables across the checks of one
// battery run; every table is still produced by its own route
// (c: direct formula, d: series recursion, r: scaled d cross-checked
// against the beta recurrence).
class VerifyContext {
public:
    const std::vector<Rational>& c_upto(long M);
    const std::vector<Rational>& d_upto(long K);
    const std::vector<Rational>& r_upto(long K);

private:
    std::vector<Rational> c_, d_, r_;
};

// Core predicates over precomputed tables (exposed so tests can feed
// doctored data and watch counterexamples get recorded).
void check_r_integer(const std::vector<Rational>& r, VerificationReport& rep);
void check_r_congruence_mod32(const std::vector<Rational>& r, VerificationReport& rep);

// r_k in Z for 0 <= k <= K.  Conjectural, which is why it is a check
// that records counterexamples rather than an assertion.
VerificationReport verify_conjecture_r_integer(long K, VerifyContext* ctx = nullptr);

// r_k = binom(2k,k) (mod 32) for 3 <= k <= K.  Requires K >= 3.
VerificationReport verify_congruence_mod32(long K, VerifyContext* ctx = nullptr);

// c_k < 0 for k <= K except k in {0,4} (those are positive);
// r_k < 0 for 3 <= k <= K.
VerificationReport verify_signs(long K, VerifyContext* ctx = nullptr);

// R_k = k! r_k in Z for k <= K, and in 2Z for k >= 1 (this holds
// unconditionally); beta_{j,k} in 2Z for j < k <= min(K, 100).
VerificationReport verify_theorem_Rk(long K, VerifyContext* ctx = nullptr);

// c_direct vs c_recursive to min(2K, c_cross_cap), and the three d
// routes (convolution over c_direct(2K), series recursion, alpha
// recurrence) to K; exact equality demanded.  The c cross-check is
// capped because the recursive route costs O(M^3).
VerificationReport verify_cross_methods(long K, VerifyContext* ctx = nullptr,
                                        long c_cross_cap = 600);

// Measures the two-point slope of the log relative error of the b_n
// asymptotic truncations between n_lo and n_hi for each M in Ms
// (expected -(M+1)/2 +- 0.3, the Poincare error order), and the leading
// Perron constant ratio at perron_n (expected 1 +- 1%).
VerificationReport verify_asymptotics(long n_lo, long n_hi, const std::vector<long>& Ms,
                                      const PrecisionPolicy& policy, long perron_n = 1000000);

struct VerifyOptions {
    long K = 300;
    bool extended = false;  // raises K to 1000
    PrecisionPolicy policy{256};
};

// battery: one of all, conjecture, congruence, signs, theorem, cross,
// asymptotics.  Throws std::invalid_argument for unknown names.
std::vector<VerificationReport> run_battery(const std::string& battery,
                                            const VerifyOptions& opts);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace ei
