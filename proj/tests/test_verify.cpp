#include <doctest.h>

#include "ei/report.hpp"
#include "ei/verify.hpp"

#include <json.hpp>

using ei::Rational;
using ei::VerificationReport;

TEST_SUITE("verify") {

TEST_CASE("conjecture check passes at small scale") {
    auto rep = ei::verify_conjecture_r_integer(6);
    CHECK(rep.passed);
    CHECK(rep.range_lo == 0);
    CHECK(rep.range_hi == 6);
    CHECK(rep.failures.empty());
    CHECK(ei::verify_conjecture_r_integer(0).passed);  // r_0 = 1
}

TEST_CASE("congruence check and its range") {
    auto rep = ei::verify_congruence_mod32(10);
    CHECK(rep.passed);
    CHECK(rep.range_lo == 3);  // r_2 = 86 > 0 sits outside the claim
    CHECK_THROWS_AS(ei::verify_congruence_mod32(2), std::invalid_argument);
}

TEST_CASE("sign check honors the c_0, c_4 exceptions") {
    auto rep = ei::verify_signs(10);
    CHECK(rep.passed);
}

TEST_CASE("k! r_k integrality and evenness") {
    auto rep = ei::verify_theorem_Rk(30);
    CHECK(rep.passed);
}

TEST_CASE("cross-method agreement at small scale") {
    auto rep = ei::verify_cross_methods(8);
    CHECK(rep.passed);
    auto j = nlohmann::json::parse(rep.config);
    CHECK(j["c_range"] == 16);
}

TEST_CASE("doctored data produces concrete counterexamples") {
    std::vector<Rational> r = {Rational(1), Rational(-14), ei::make_rational(1, 3),
                               Rational(-3661)};
    VerificationReport rep;
    rep.check_name = "conjecture_r_integer";
    rep.range_lo = 0;
    rep.range_hi = 3;
    ei::check_r_integer(r, rep);
    REQUIRE_FALSE(rep.passed);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].index == 2);
    CHECK(rep.failures[0].got == "1/3");

    VerificationReport rep2;
    rep2.check_name = "congruence_mod32";
    rep2.range_lo = 3;
    rep2.range_hi = 3;
    ei::check_r_congruence_mod32(r, rep2);  // -3661 != binom(6,3) = 20 (mod 32)
    CHECK_FALSE(rep2.passed);
    REQUIRE(rep2.failures.size() == 1);
    CHECK(rep2.failures[0].index == 3);
}

TEST_CASE("reports serialize to the documented schema") {
    auto rep = ei::verify_conjecture_r_integer(4);
    auto j = nlohmann::json::parse(ei::report_to_json_text(rep));
    CHECK(j["check_name"] == "conjecture_r_integer");
    CHECK(j["range"]["lo"] == 0);
    CHECK(j["range"]["hi"] == 4);
    CHECK(j["passed"] == true);
    CHECK(j["failures"].is_array());
    CHECK(j.contains("elapsed_ms"));
    CHECK(j["config"]["K"] == 4);
}

TEST_CASE("reports are reproducible") {
    auto a = ei::verify_signs(12);
    auto b = ei::verify_signs(12);
    CHECK(a.passed == b.passed);
    CHECK(a.failures.size() == b.failures.size());
    CHECK(a.range_hi == b.range_hi);
}

TEST_CASE("shared context reuses tables across a battery") {
    ei::VerifyContext ctx;
    auto r1 = ei::verify_conjecture_r_integer(12, &ctx);
    auto r2 = ei::verify_congruence_mod32(12, &ctx);
    auto r3 = ei::verify_theorem_Rk(12, &ctx);
    CHECK(r1.passed);
    CHECK(r2.passed);
    CHECK(r3.passed);
}

TEST_CASE("asymptotic error-order slopes at reduced scale") {
    auto rep = ei::verify_asymptotics(400, 1600, {0, 1}, ei::PrecisionPolicy(128), 50000);
    CHECK(rep.passed);
    auto j = nlohmann::json::parse(rep.config);
    CHECK(j["measured"].size() == 2);
    double slope0 = j["measured"][0]["slope"];
    CHECK(slope0 == doctest::Approx(-0.5).epsilon(0.6));
}

TEST_CASE("unknown battery name is rejected") {
    ei::VerifyOptions opts;
    CHECK_THROWS_AS(ei::run_battery("bogus", opts), std::invalid_argument);
}

TEST_CASE("single battery runs end to end") {
    ei::VerifyOptions opts;
    opts.K = 12;
    auto reports = ei::run_battery("theorem", opts);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].check_name == "theorem_k_factorial_r");
    CHECK(ei::all_passed(reports));
}

}  // TEST_SUITE
