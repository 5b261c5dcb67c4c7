#ifndef DISKTRACE_CLI_HPP
#define DISKTRACE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "disktrace/series.hpp"

namespace disktrace::cli {

inline constexpr const char* kToolVersion = "disktrace 1.0.0";

/// A fully specified run of one subcommand.  Fields a command does not use
/// are ignored; zero tolerances select per-command defaults, and the
/// defaults actually applied are echoed into the report.
struct Scenario {
    std::string command; // classify | trace | bilinear | kernel | quadrature-check | verify-all
    std::string family = "one";
    std::vector<double> params;
    std::string r = "unit";
    std::string f_coeffs;
    std::string g_coeffs;
    int m_max = 5;
    double tol = 0.0;
    std::int64_t n_max = 0;
    std::string grid = "0.1:0.9:0.1@8";
    double gamma = 0.0;
    double beta = 0.0;
    int k = 0;
};

struct Report {
    std::string tool_version;
    std::string command;
    std::vector<std::pair<std::string, std::string>> scenario; // echo, defaults filled in
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
    int checks_passed = 0;
    int checks_total = 0;
    double elapsed_ms = 0.0;

    bool pass() const { return checks_passed == checks_total; }
};

/// Dispatch a scenario to the owning module and collect rows.  Throws
/// std::invalid_argument / std::domain_error on unusable input; numeric
/// non-convergence is folded into failing rows instead of thrown.
Report run(const Scenario& sc);

void write_table(const Report& r, std::ostream& os);
void write_csv(const Report& r, std::ostream& os);
/// Self-describing text format: [report] key = value lines, a [rows]
/// section with a columns header and CSV payload, then [summary].
void write_report_file(const Report& r, std::ostream& os);

/// Polynomials on the command line: comma-separated coefficients, lowest
/// degree first, each "re", "imi" or "re+imi" (e.g. "0,1,0,2" is z + 2z^3,
/// "1-2i" is allowed).  Errors are std::invalid_argument.
series::PowerSeries parse_polynomial(const std::string& text);
std::vector<series::Complex> parse_complex_list(const std::string& text);
std::string format_complex(series::Complex z);

/// zeta grids, written "rmin:rmax:rstep@phases".
struct GridSpec {
    double r_min = 0.1;
    double r_max = 0.9;
    double r_step = 0.1;
    int phases = 8;

    static GridSpec parse(const std::string& text);
};

} // namespace disktrace::cli

#endif
