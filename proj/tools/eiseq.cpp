// eiseq: exact sequences, constants, and verification batteries for the
// Maclaurin coefficients of exp(z/(1-z)) and e^x E1(x), their Hadamard
// product, and the integer-sequence checks on the asymptotic expansion
// coefficients.
//
// Exit codes: 0 success, 1 verification/accuracy failure, 2 usage error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ei/asymptotics.hpp"
#include "ei/numerics.hpp"
#include "ei/sequences.hpp"
#include "ei/verify.hpp"

namespace {

long default_precision_bits() {
    if (const char* env = std::getenv("GOMPERTZ_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 16) return v;
    }
    return 256;
}

size_t decimal_digits(long bits) {
    return static_cast<size_t>(std::floor(static_cast<double>(bits) * 0.30103)) + 1;
}

const std::vector<std::string> kSeqKinds = {"a",  "aprime", "fact_a", "fact_aprime",
                                            "b",  "rho",    "sigma",  "c",
                                            "d",  "r",      "R",      "e_bessel"};

struct SeqValues {
    std::vector<std::string> text;  // rendered values, index 0..max
    bool integer_valued = false;    // eligible for b-file output
};

SeqValues collect_seq(const std::string& kind, long max_index, long nu, long precision_bits,
                      bool decimal) {
    SeqValues out;
    auto rationals = [&](const std::vector<ei::Rational>& v) {
        for (const auto& q : v)
            out.text.push_back(decimal
                                   ? ei::BigFloat::of_rational(q, precision_bits).to_string()
                                   : ei::to_string(q));
    };
    auto affines = [&](auto&& gen) {
        ei::PrecisionPolicy policy(precision_bits);
        for (long n = 0; n <= max_index; ++n) {
            ei::GAffine v = gen(n);
            out.text.push_back(decimal ? ei::eval(v, policy).to_string() : ei::to_string(v));
        }
    };

    if (kind == "a") {
        rationals(ei::a_seq(max_index));
    } else if (kind == "aprime") {
        rationals(ei::aprime_seq(max_index));
    } else if (kind == "fact_a") {
        for (const auto& z : ei::fact_a_seq(max_index)) out.text.push_back(z.get_str());
        out.integer_valued = true;
    } else if (kind == "fact_aprime") {
        for (const auto& z : ei::fact_aprime_seq(max_index)) out.text.push_back(z.get_str());
        out.integer_valued = true;
    } else if (kind == "b") {
        affines([](long n) { return ei::b_affine(n); });
    } else if (kind == "rho") {
        affines([](long n) { return ei::rho_affine(n); });
    } else if (kind == "sigma") {
        affines([](long n) { return ei::sigma_affine(n); });
    } else if (kind == "c") {
        rationals(ei::c_direct(max_index));
    } else if (kind == "d") {
        rationals(ei::d_recursive(max_index));
    } else if (kind == "r" || kind == "R") {
        auto v = kind == "r" ? ei::r_seq(max_index) : ei::R_seq(max_index);
        out.integer_valued = true;
        for (const auto& q : v) {
            if (!ei::is_integer(q))
                throw std::runtime_error(kind + "_k non-integer at some k <= " +
                                         std::to_string(max_index) + " (conjecture failure?)");
            out.text.push_back(ei::to_string(q));
        }
    } else if (kind == "e_bessel") {
        std::vector<ei::Rational> v;
        for (long k = 0; k <= max_index; ++k) v.push_back(ei::bessel_e(k, nu));
        rationals(v);
    }
    return out;
}

void emit_seq(const SeqValues& v, const std::string& kind, const std::string& format,
              std::ostream& os) {
    if (format == "plain") {
        for (const auto& s : v.text) os << s << "\n";
    } else if (format == "csv") {
        os << "n,value\n";
        for (size_t n = 0; n < v.text.size(); ++n) os << n << "," << v.text[n] << "\n";
    } else if (format == "bfile") {
        for (size_t n = 0; n < v.text.size(); ++n) os << n << " " << v.text[n] << "\n";
    } else {  // json
        nlohmann::json j{{"name", kind}, {"values", v.text}};
        os << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sequences and asymptotic-coefficient checks around the "
                 "Euler-Gompertz constant"};
    app.require_subcommand(1);
    long precision_bits = default_precision_bits();

    // --- seq ---
    auto* seq = app.add_subcommand("seq", "Stream a named sequence");
    std::string seq_kind, seq_format = "plain";
    long seq_max = 10, seq_nu = 0;
    seq->add_option("name", seq_kind, "sequence name")
        ->required()
        ->check(CLI::IsMember(kSeqKinds));
    seq->add_option("--max", seq_max, "largest index to print")->check(CLI::NonNegativeNumber);
    seq->add_option("--nu", seq_nu, "order nu for e_bessel");
    seq->add_option("--format", seq_format, "plain|csv|json|bfile")
        ->check(CLI::IsMember({"plain", "csv", "json", "bfile"}));
    auto* seq_prec = seq->add_option("--precision-bits", precision_bits,
                                     "render values as decimals at this precision");

    // --- gompertz ---
    auto* gom = app.add_subcommand("gompertz", "Print the Euler-Gompertz constant G");
    long gom_convergents = 0;
    bool gom_check = false;
    std::string gom_format = "plain";
    gom->add_option("--precision-bits", precision_bits, "target precision in bits");
    gom->add_option("--convergents", gom_convergents, "also print a_n'/a_n for n = 1..N");
    gom->add_flag("--check", gom_check, "report the dual-route consistency check");
    gom->add_option("--format", gom_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    // --- bn ---
    auto* bn = app.add_subcommand("bn", "Evaluate b_n");
    long bn_n = 1;
    std::string bn_method = "miller";
    bool bn_compare = false;
    bn->add_option("--n", bn_n, "index n")->required()->check(CLI::NonNegativeNumber);
    bn->add_option("--method", bn_method, "miller|quadrature|affine")
        ->check(CLI::IsMember({"miller", "quadrature", "affine"}));
    bn->add_flag("--compare", bn_compare, "run all three methods and compare");
    auto* bn_prec = bn->add_option("--precision-bits", precision_bits, "target precision in bits");

    // --- verify ---
    auto* ver = app.add_subcommand("verify", "Run a verification battery");
    std::string battery = "all", out_path;
    long ver_K = 300;
    bool extended = false;
    ver->add_option("battery", battery, "all|conjecture|congruence|signs|theorem|cross|asymptotics")
        ->check(CLI::IsMember({"all", "conjecture", "congruence", "signs", "theorem", "cross",
                               "asymptotics"}));
    ver->add_option("--K", ver_K, "check range (default 300)")->check(CLI::NonNegativeNumber);
    ver->add_flag("--extended", extended, "full scale: K = 1000");
    ver->add_option("--precision-bits", precision_bits, "numeric checks' target precision");
    ver->add_option("--out", out_path, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seq->parsed()) {
            SeqValues v = collect_seq(seq_kind, seq_max, seq_nu, precision_bits,
                                      seq_prec->count() > 0);
            if (seq_format == "bfile" && !v.integer_valued)
                throw CLI::ValidationError("--format bfile requires an integer-valued sequence "
                                           "(fact_a, fact_aprime, r, R)");
            emit_seq(v, seq_kind, seq_format, std::cout);
            return 0;
        }

        if (gom->parsed()) {
            ei::PrecisionPolicy policy(precision_bits);
            ei::BigFloat g = ei::gompertz(policy);  // throws if the two routes disagree
            if (gom_format == "json") {
                nlohmann::json j{{"precision_bits", precision_bits},
                                 {"value", g.to_string(decimal_digits(precision_bits))}};
                if (gom_check) j["dual_route_check"] = "ok";
                if (gom_convergents > 0) {
                    nlohmann::json conv = nlohmann::json::array();
                    auto cs = ei::gompertz_convergents(gom_convergents);
                    for (size_t i = 0; i < cs.size(); ++i)
                        conv.push_back(ei::to_string(cs[i]));
                    j["convergents"] = conv;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << g.to_string(decimal_digits(precision_bits)) << "\n";
                if (gom_check) std::cout << "OK: convergent and quadrature routes agree to 2^-"
                                         << precision_bits << "\n";
                if (gom_convergents > 0) {
                    auto cs = ei::gompertz_convergents(gom_convergents);
                    for (size_t i = 0; i < cs.size(); ++i)
                        std::cout << (i + 1) << " " << ei::to_string(cs[i]) << "\n";
                }
            }
            return 0;
        }

        if (bn->parsed()) {
            ei::PrecisionPolicy policy(precision_bits);
            size_t digits = decimal_digits(precision_bits);
            if (bn_compare) {
                if (bn_n < 1) throw CLI::ValidationError("--compare requires --n >= 1");
                ei::BigFloat miller = ei::bn_miller(bn_n, policy);
                ei::BigFloat quad = ei::bn_quadrature(bn_n, policy);
                ei::BigFloat affine = ei::eval(ei::b_affine(bn_n), policy);
                std::cout << "miller     " << miller.to_string(digits) << "\n";
                std::cout << "quadrature " << quad.to_string(digits) << "\n";
                std::cout << "affine     " << affine.to_string(digits) << "\n";
                ei::BigFloat scale = abs(miller);
                ei::BigFloat worst = abs(miller - quad);
                if (abs(miller - affine) > worst) worst = abs(miller - affine);
                if (abs(quad - affine) > worst) worst = abs(quad - affine);
                worst = worst / scale;
                std::cout << "max relative difference " << worst.to_string(8) << "\n";
                long tol_bits = std::max<long>(16, precision_bits - 64);
                if (worst > ei::BigFloat::pow2(-tol_bits)) {
                    std::cerr << "disagreement beyond 2^-" << tol_bits << "\n";
                    return 1;
                }
                return 0;
            }
            if (bn_method == "affine") {
                ei::GAffine v = ei::b_affine(bn_n);
                if (bn_prec->count() > 0)
                    std::cout << ei::eval(v, policy).to_string(digits) << "\n";
                else
                    std::cout << ei::to_string(v) << "\n";
            } else {
                ei::BigFloat v = bn_method == "miller" ? ei::bn_miller(bn_n, policy)
                                                       : ei::bn_quadrature(bn_n, policy);
                std::cout << v.to_string(digits) << "\n";
            }
            return 0;
        }

        if (ver->parsed()) {
            ei::VerifyOptions opts;
            opts.K = ver_K;
            opts.extended = extended;
            opts.policy = ei::PrecisionPolicy(precision_bits);
            auto reports = ei::run_battery(battery, opts);
            for (const auto& r : reports)
                std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_name << " ("
                          << r.elapsed_ms << " ms)\n";
            std::string text = ei::reports_to_json_text(reports);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw std::runtime_error("cannot open " + out_path);
                f << text << "\n";
            } else {
                std::cout << text << "\n";
            }
            return ei::all_passed(reports) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
