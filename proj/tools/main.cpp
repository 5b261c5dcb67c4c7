#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "disktrace/cli.hpp"
#include "disktrace/errors.hpp"

namespace {

void add_family_flags(CLI::App* cmd, disktrace::cli::Scenario& sc) {
    cmd->add_option("--family", sc.family,
                    "weight family: one, n, n_plus_1, n2_nminus1, inv_n, inv_n_plus_1, "
                    "gamma_log, gamma_log_deriv");
    cmd->add_option("--params", sc.params,
                    "family parameters (gamma_log: gamma,beta; gamma_log_deriv: gamma,beta,k)")
        ->delimiter(',');
}

} // namespace

int main(int argc, char** argv) {
    using disktrace::cli::Scenario;

    CLI::App app{"weighted-shift commutator traces, reproducing kernels and disk quadrature "
                 "on rotation-invariant spaces over the unit disk"};
    app.set_version_flag("--version", std::string(disktrace::cli::kToolVersion));
    app.require_subcommand(1);

    std::string out_path;
    bool csv = false;
    app.add_option("--out", out_path, "write a structured report file to this path");
    app.add_flag("--csv", csv, "emit flat CSV rows on stdout instead of the aligned table");

    Scenario sc;

    auto* classify = app.add_subcommand("classify", "test the weight-family hypotheses");
    add_family_flags(classify, sc);
    classify->add_option("--nmax", sc.n_max, "window end for the scan (default 10000)");
    classify->add_option("--tol", sc.tol, "second-difference tolerance (default 1e-12)");

    auto* tracec = app.add_subcommand("trace", "commutator trace of (S^dag)^m S^m - S^m (S^dag)^m");
    add_family_flags(tracec, sc);
    tracec->add_option("--r", sc.r, "shift weights: unit, n_over_n_plus_1, one_minus_inv_sq, custom:<file>");
    tracec->add_option("--m-max", sc.m_max, "compute traces for m = 1..m_max")->required();
    tracec->add_option("--tol", sc.tol, "doubling tolerance (default 1e-6)");
    tracec->add_option("--nmax", sc.n_max, "term cap for the series (default 2^27)");

    auto* bilinear = app.add_subcommand("bilinear", "<<f,g>> vs the derivative area form");
    add_family_flags(bilinear, sc);
    bilinear->add_option("--r", sc.r, "shift weights");
    bilinear->add_option("--f", sc.f_coeffs, "coefficients of f, lowest degree first")->required();
    bilinear->add_option("--g", sc.g_coeffs, "coefficients of g, lowest degree first")->required();
    bilinear->add_option("--tol", sc.tol, "agreement tolerance (default 1e-8)");

    auto* kernel = app.add_subcommand("kernel", "kernel series vs tabled closed form on a grid");
    add_family_flags(kernel, sc);
    kernel->add_option("--grid", sc.grid, "zeta grid, rmin:rmax:rstep@phases (default 0.1:0.9:0.1@8)");
    kernel->add_option("--tol", sc.tol, "series summation tolerance (default 1e-13)");

    auto* quad = app.add_subcommand("quadrature-check", "disk moments vs the tabled weights");
    quad->add_option("--gamma", sc.gamma, "radial power, > -2")->required();
    quad->add_option("--beta", sc.beta, "log power, > -1")->required();
    quad->add_option("--k", sc.k, "derivative order, >= 0")->required();
    quad->add_option("--nmax", sc.n_max, "largest moment index (default 10)");
    quad->add_option("--tol", sc.tol, "agreement tolerance (default 1e-8)");

    auto* verify = app.add_subcommand("verify-all", "run the full verification matrix");
    verify->add_option("--tol", sc.tol, "recorded in the report; thresholds stay pinned");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    sc.command = app.get_subcommands().front()->get_name();

    disktrace::cli::Report rep;
    try {
        rep = disktrace::cli::run(sc);
    } catch (const disktrace::numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (csv)
        disktrace::cli::write_csv(rep, std::cout);
    else
        disktrace::cli::write_table(rep, std::cout);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return 2;
        }
        disktrace::cli::write_report_file(rep, out);
    }
    return rep.pass() ? 0 : 1;
}
