#include <cmath>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "disktrace/cli.hpp"

using namespace disktrace::cli;
using disktrace::series::Complex;

TEST_CASE("complex coefficient parsing") {
    CHECK(parse_complex_list("1")[0] == Complex(1.0, 0.0));
    CHECK(parse_complex_list("-2.5")[0] == Complex(-2.5, 0.0));
    CHECK(parse_complex_list("2i")[0] == Complex(0.0, 2.0));
    CHECK(parse_complex_list("-i")[0] == Complex(0.0, -1.0));
    CHECK(parse_complex_list("i")[0] == Complex(0.0, 1.0));
    CHECK(parse_complex_list("1+2i")[0] == Complex(1.0, 2.0));
    CHECK(parse_complex_list("1.5-0.5i")[0] == Complex(1.5, -0.5));
    CHECK(parse_complex_list("2e-3+1e-2i")[0] == Complex(2e-3, 1e-2));
    CHECK(parse_complex_list("1e+2")[0] == Complex(100.0, 0.0));

    const auto v = parse_complex_list("0,1,0,2");
    REQUIRE(v.size() == 4);
    CHECK(v[1] == Complex(1.0, 0.0));
    CHECK(v[3] == Complex(2.0, 0.0));

    CHECK_THROWS_AS(parse_complex_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex_list("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex_list("1,,2"), std::invalid_argument);

    // z + 2z^3
    const auto f = parse_polynomial("0,1,0,2");
    CHECK(f.degree() == 3);
    CHECK(f.coeff(3) == Complex(2.0, 0.0));
}

TEST_CASE("grid spec parsing") {
    const auto g = GridSpec::parse("0.1:0.9:0.1@8");
    CHECK(g.r_min == 0.1);
    CHECK(g.r_max == 0.9);
    CHECK(g.phases == 8);
    CHECK_THROWS_AS(GridSpec::parse("0.1:0.9@8"), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::parse("0.1:1.5:0.1@8"), std::invalid_argument);
}

TEST_CASE("classify scenario reports and passes for a tabled family") {
    Scenario sc;
    sc.command = "classify";
    sc.family = "n_plus_1";
    sc.n_max = 1000;
    const Report rep = run(sc);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0][4] == "affine");
    CHECK(rep.pass());
    CHECK(rep.checks_total == 3);
}

TEST_CASE("trace scenario: Hardy family is exact") {
    Scenario sc;
    sc.command = "trace";
    sc.family = "one";
    sc.m_max = 3;
    sc.tol = 1e-12;
    const Report rep = run(sc);
    CHECK(rep.rows.size() == 3);
    CHECK(rep.pass());
    CHECK(rep.rows[2][4] == "3"); // %.17g of exactly 3.0
}

TEST_CASE("trace scenario: tiny term cap yields a failing report, not a throw") {
    Scenario sc;
    sc.command = "trace";
    sc.family = "gamma_log";
    sc.params = {1.0, 2.0};
    sc.m_max = 1;
    sc.tol = 1e-10;
    sc.n_max = 512;
    const Report rep = run(sc);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("bilinear scenario agrees with the oracle") {
    Scenario sc;
    sc.command = "bilinear";
    sc.family = "n_plus_1";
    sc.f_coeffs = "0,1,0,2";
    sc.g_coeffs = "0,0,0,1";
    const Report rep = run(sc);
    CHECK(rep.pass());
    REQUIRE(rep.rows.size() == 1);
    // <<z + 2z^3, z^3>> = 3 * 2 = 6
    CHECK(std::stod(rep.rows[0][3]) == doctest::Approx(6.0).epsilon(1e-7));
}

TEST_CASE("kernel scenario checks closed forms on the grid") {
    Scenario sc;
    sc.command = "kernel";
    sc.family = "n";
    sc.grid = "0.1:0.5:0.2@4";
    const Report rep = run(sc);
    CHECK(rep.pass());
    CHECK(rep.rows.size() == 12); // 3 radii x 4 phases
}

TEST_CASE("quadrature-check scenario reports the factor-2 ratio") {
    Scenario sc;
    sc.command = "quadrature-check";
    sc.gamma = 0.0;
    sc.beta = 1.0;
    sc.k = 0;
    sc.n_max = 6;
    const Report rep = run(sc);
    CHECK(rep.pass());
    for (const auto& row : rep.rows)
        CHECK(std::stod(row[7]) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("unknown command throws a usage error") {
    Scenario sc;
    sc.command = "frobnicate";
    CHECK_THROWS_AS(run(sc), std::invalid_argument);
}

TEST_CASE("report writers produce deterministic payloads") {
    Scenario sc;
    sc.command = "trace";
    sc.family = "n_plus_1";
    sc.m_max = 2;
    sc.tol = 1e-6;
    const Report a = run(sc);
    const Report b = run(sc);

    std::ostringstream csv_a, csv_b;
    write_csv(a, csv_a);
    write_csv(b, csv_b);
    CHECK(csv_a.str() == csv_b.str());

    std::ostringstream table;
    write_table(a, table);
    CHECK(table.str().find("checks: 2/2 pass") != std::string::npos);

    std::ostringstream file;
    write_report_file(a, file);
    CHECK(file.str().find("[report]") != std::string::npos);
    CHECK(file.str().find("[rows]") != std::string::npos);
    CHECK(file.str().find("status = pass") != std::string::npos);
}
