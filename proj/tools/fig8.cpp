// fig8: enumerate SL(2,C) representation classes of 1/n surgeries on the
// figure-eight knot, compute Reidemeister torsion and torsion polynomials,
// and verify the results against the built-in reference tables.

#include "fig8/fig8.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct NRange {
    int lo = 0, hi = 0;
};

// "-n 3" or "-n 1..10"
NRange parse_range(const std::string& text) {
    NRange r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("-n expects an integer or a range like 1..10");
    }
    if (r.lo > r.hi) std::swap(r.lo, r.hi);
    return r;
}

void add_common_flags(CLI::App* cmd, fig8::RunConfig& cfg, std::string& nspec, bool* no_cache) {
    cmd->add_option("-n,--surgery", nspec, "surgery coefficient n (integer or range a..b)")
        ->required();
    cmd->add_option("--format", cfg.output_format, "output format: markdown, csv or json");
    cmd->add_option("--precision", cfg.precision_bits,
                    "working precision in bits (rounded up to 128/256/512)");
    cmd->add_option("--tol-residual", cfg.tol_residual, "acceptance residual for solutions");
    cmd->add_option("--tol-dedup", cfg.tol_dedup, "conjugacy-class dedup tolerance");
    cmd->add_option("--tol-table", cfg.tol_table, "golden table match tolerance");
    cmd->add_option("--tol-round", cfg.tol_round, "coefficient rounding tolerance");
    cmd->add_option("--tol-class", cfg.tol_class, "SU(2)/SL(2,R) classification tolerance");
    cmd->add_flag("--all", cfg.show_all, "also list suppressed conjugate classes");
    cmd->add_option("--cache-dir", cfg.cache_dir, "report cache directory");
    cmd->add_option("--data-dir", cfg.data_dir, "golden fixture directory");
    if (no_cache) cmd->add_flag("--no-cache", *no_cache, "bypass the report cache");
}

fig8::EnumerationReport get_report(int n, const fig8::RunConfig& cfg, bool no_cache) {
    if (no_cache || cfg.cache_dir.empty()) return fig8::run_surgery_report_any(n, cfg);
    return fig8::report_with_cache(n, cfg).first;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"figure-eight 1/n surgery: SL(2,C) classes and Reidemeister torsion"};
    app.require_subcommand(1);

    fig8::RunConfig cfg;
    std::string nspec;
    bool no_cache = false;

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "enumerate conjugacy classes");
    add_common_flags(cmd_enum, cfg, nspec, &no_cache);
    CLI::App* cmd_sigma = app.add_subcommand("sigma", "print the torsion polynomial");
    add_common_flags(cmd_sigma, cfg, nspec, &no_cache);
    CLI::App* cmd_verify = app.add_subcommand("verify", "check results against golden tables");
    add_common_flags(cmd_verify, cfg, nspec, &no_cache);
    CLI::App* cmd_casson = app.add_subcommand("casson", "Casson invariant report");
    add_common_flags(cmd_casson, cfg, nspec, &no_cache);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return (e.get_exit_code() == 0) ? kExitOk : kExitUsage;
    }

    try {
        cfg.validate();
        NRange range = parse_range(nspec);

        if (cmd_sigma->parsed() && range.lo == 0 && range.hi == 0) {
            // sigma_0 = 1 by convention, no enumeration behind it
            std::cout << "sigma_0(t) = 1\n";
            return kExitOk;
        }

        for (int n = range.lo; n <= range.hi; ++n) {
            if (n == 0) {
                std::cerr << "error: n = 0 is not a surgery coefficient here\n";
                return kExitUsage;
            }
        }

        if (cmd_casson->parsed()) {
            for (int n = range.lo; n <= range.hi; ++n) {
                const fig8::CassonReport& c = get_report(n, cfg, no_cache).casson;
                std::cout << "n = " << n << ": lambda = " << c.lambda
                          << ", lambda_SL2C = " << c.lambda_sl2c << "; observed "
                          << c.observed_su2 << " SU(2) of " << c.observed_total << " classes ("
                          << (c.consistent ? "consistent" : "inconsistent") << ")\n";
            }
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            bool all_ok = true;
            for (int n = range.lo; n <= range.hi; ++n) {
                fig8::VerifyOutcome v = fig8::verify_surgery_any(n, cfg);
                std::cout << "n = " << n << ": " << (v.ok ? "ok" : "MISMATCH") << "\n";
                for (const auto& f : v.failures) std::cout << "  fail: " << f << "\n";
                for (const auto& m : v.notes) std::cout << "  note: " << m << "\n";
                all_ok = all_ok && v.ok;
            }
            return all_ok ? kExitOk : kExitVerifyMismatch;
        }

        for (int n = range.lo; n <= range.hi; ++n) {
            fig8::EnumerationReport rep = get_report(n, cfg, no_cache);
            if (cmd_enum->parsed()) {
                std::cout << fig8::render_report(rep, cfg.output_format, cfg.show_all);
            } else {  // sigma
                if (cfg.output_format == "json") {
                    fig8::ojson j = fig8::to_json(rep);
                    std::cout << j["sigma"].dump(1) << "\n";
                } else {
                    std::string exact = fig8::render_sigma_exact(rep.sigma);
                    std::cout << "sigma_" << n << "(t) = ";
                    if (!exact.empty()) std::cout << exact << "\n";
                    else std::cout << "(rounding incomplete)\n";
                    std::cout << "  ~ " << fig8::render_sigma_scientific(rep.sigma) << "\n";
                }
            }
        }
        return kExitOk;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fig8::RootFindError<fig8::RealOf<128>>& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
