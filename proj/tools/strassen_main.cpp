#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "strassen/bench.hpp"
#include "strassen/demo.hpp"
#include "strassen/io.hpp"
#include "strassen/property_suite.hpp"
#include "strassen/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;  // verification / validation failures
constexpr int kUsage = 2;        // usage, parse and malformed-input errors

strassen::FieldDesc parse_field(const std::string& text) {
    if (text == "rational") return strassen::FieldDesc::rationals();
    unsigned long long p = 0;
    try {
        std::size_t used = 0;
        p = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::logic_error&) {
        throw strassen::ParseError("field must be \"rational\" or a prime modulus, got '" + text + "'");
    }
    return strassen::FieldDesc::prime(p);  // rejects composites with its own message
}

int cmd_gen(const std::string& params_path, const std::string& out_path) {
    strassen::Params p = strassen::load_params(params_path);
    auto report = strassen::validate_params(p);
    if (!report.valid()) {
        std::cerr << "parameters rejected:\n";
        for (const auto& f : report.failures) std::cerr << "  " << f << "\n";
        return kCheckFailed;
    }
    strassen::save_algorithm(strassen::build_algorithm(p), out_path);
    std::cout << "wrote " << out_path << "\n";
    return kOk;
}

int cmd_verify(const std::string& alg_path) {
    auto alg = strassen::load_algorithm(alg_path);
    auto report = strassen::verify_bilinear(alg);
    if (report.passed) {
        std::cout << "verified: all " << report.checked_count << " basis pairs correct\n";
        return kOk;
    }
    std::cout << "verification failed on " << report.failures.size() << " of " << report.checked_count
              << " basis pairs\n";
    for (const auto& f : report.failures) std::cout << "  " << f.str() << "\n";
    return kCheckFailed;
}

int cmd_multiply(const std::string& alg_path, const std::string& a_path, const std::string& b_path,
                 std::size_t cutoff, bool use_doubles) {
    auto alg = strassen::load_algorithm(alg_path);
    if (use_doubles) {
        auto a = strassen::load_matrix_csv_double(a_path);
        auto b = strassen::load_matrix_csv_double(b_path);
        std::cout << strassen::matrix_to_csv(strassen::multiply_recursive(alg, a, b, cutoff).first);
    } else {
        auto a = strassen::load_matrix_csv(a_path, alg.field());
        auto b = strassen::load_matrix_csv(b_path, alg.field());
        std::cout << strassen::matrix_to_csv(strassen::multiply_recursive(alg, a, b, cutoff).first);
    }
    return kOk;
}

int cmd_suite(std::uint64_t seed, int trials, const std::string& field_text) {
    auto report = strassen::run_property_suite(seed, trials, parse_field(field_text));
    std::cout << report.str();
    std::cout << (report.all_passed() ? "all checks passed" : "some checks FAILED") << " (seed " << seed
              << ", " << trials << " trials, " << report.field.str() << ")\n";
    return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_bench(std::size_t n, std::size_t cutoff, int reps, const std::string& alg_path) {
    auto alg = alg_path.empty()
                   ? strassen::build_algorithm(strassen::strassen_params(strassen::FieldDesc::rationals()))
                   : strassen::load_algorithm(alg_path);
    auto report = strassen::bench(alg, n, cutoff, reps);
    if (!report.coeffs_exact)
        std::cerr << "note: scheme coefficients rounded when converted to double\n";
    std::cout << report.csv();
    return kOk;
}

int cmd_export(const std::string& alg_path, const std::string& out_path) {
    auto alg = strassen::load_algorithm(alg_path);
    auto f = strassen::to_factor_matrices(alg);
    if (!strassen::brent_check(f.u, f.v, f.w)) {
        std::cerr << "factor matrices fail the coefficient check\n";
        return kCheckFailed;
    }
    strassen::write_file(out_path, strassen::factor_matrices_to_json(alg));
    std::cout << "wrote " << out_path << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-7 2x2 multiplication schemes: generate, verify, run, benchmark"};
    app.require_subcommand(1);

    std::string params_path, alg_path, out_path, a_path, b_path;
    std::string field_text = "rational";
    std::size_t n = 256, cutoff = 64;
    int reps = 5, trials = 100;
    std::uint64_t seed = 0;
    bool use_doubles = false;

    auto* gen = app.add_subcommand("gen", "build a scheme from a parameter file");
    gen->add_option("params", params_path, "parameter JSON file")->required();
    gen->add_option("out", out_path, "output scheme JSON file")->required();

    auto* verify = app.add_subcommand("verify", "check a scheme on all 16 basis pairs");
    verify->add_option("scheme", alg_path, "scheme JSON file")->required();

    app.add_subcommand("demo", "derive the classical scheme step by step");

    auto* multiply = app.add_subcommand("multiply", "multiply two CSV matrices with a scheme");
    multiply->add_option("scheme", alg_path, "scheme JSON file")->required();
    multiply->add_option("a", a_path, "left matrix CSV")->required();
    multiply->add_option("b", b_path, "right matrix CSV")->required();
    multiply->add_option("--cutoff", cutoff, "block size at which recursion switches to naive")
        ->check(CLI::PositiveNumber);
    multiply->add_flag("--float", use_doubles, "double-precision path instead of exact scalars");

    auto* suite = app.add_subcommand("suite", "run the randomized identity checks");
    suite->add_option("--seed", seed, "random seed");
    suite->add_option("--trials", trials, "trials per randomized check");
    suite->add_option("--field", field_text, "rational (default) or a prime modulus");

    auto* bench_cmd = app.add_subcommand("bench", "time recursive vs naive double multiplication");
    bench_cmd->add_option("--n", n, "matrix dimension")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--cutoff", cutoff, "recursion cutoff")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--reps", reps, "samples per path")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--scheme", alg_path, "scheme JSON file (default: canonical)");

    auto* export_cmd = app.add_subcommand("export", "write the factor-matrix (u,v,w) form");
    export_cmd->add_option("scheme", alg_path, "scheme JSON file")->required();
    export_cmd->add_option("out", out_path, "output JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(params_path, out_path);
        if (verify->parsed()) return cmd_verify(alg_path);
        if (app.get_subcommand("demo")->parsed()) {
            std::cout << strassen::demo_text();
            return kOk;
        }
        if (multiply->parsed()) return cmd_multiply(alg_path, a_path, b_path, cutoff, use_doubles);
        if (suite->parsed()) {
            if (trials < 1) {
                std::cerr << "usage error: --trials must be >= 1\n";
                return kUsage;
            }
            return cmd_suite(seed, trials, field_text);
        }
        if (bench_cmd->parsed()) return cmd_bench(n, cutoff, reps, alg_path);
        if (export_cmd->parsed()) return cmd_export(alg_path, out_path);
    } catch (const strassen::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const strassen::DimensionMismatch& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const strassen::DivisionByZero& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const strassen::UnverifiedAlgorithm& e) {
        std::cerr << e.what() << "\n";
        return kCheckFailed;
    } catch (const strassen::InvalidParams& e) {
        std::cerr << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
