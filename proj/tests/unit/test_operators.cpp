#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "disktrace/operators.hpp"

using namespace disktrace::operators;
using disktrace::series::Complex;
using disktrace::series::PowerSeries;
using disktrace::weights::WeightSequence;

namespace {

ShiftOperator unilateral(const char* family) {
    return ShiftOperator(WeightSequence::builtin(family));
}

PowerSeries random_poly(std::mt19937& rng, int max_deg, std::int64_t min_support) {
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    std::vector<Complex> c(static_cast<std::size_t>(max_deg) + 1);
    for (std::int64_t n = 0; n <= max_deg; ++n)
        c[static_cast<std::size_t>(n)] =
            n >= min_support ? Complex(box(rng), box(rng)) : Complex(0.0, 0.0);
    return PowerSeries(std::move(c));
}

// dense oracle for the banded algebra
std::vector<std::vector<Complex>> to_dense(const BandedTruncation& b) {
    const auto n = static_cast<std::size_t>(b.dim());
    std::vector<std::vector<Complex>> d(n, std::vector<Complex>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            d[r][c] = b.entry(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c));
    return d;
}

} // namespace

TEST_CASE("shift weight families") {
    CHECK(ShiftWeights::unit().at(17) == Complex(1.0, 0.0));
    CHECK(ShiftWeights::n_over_n_plus_1().at(1) == Complex(0.5, 0.0));
    CHECK(ShiftWeights::one_minus_inv_sq().at(0) == Complex(0.75, 0.0));
    CHECK_THROWS_AS(ShiftWeights::parse("bogus"), std::invalid_argument);

    const auto t = ShiftWeights::table({{0.5, 0.0}, {0.0, 1.0}});
    CHECK(t.at(0) == Complex(0.5, 0.0));
    CHECK(t.at(1) == Complex(0.0, 1.0));
    CHECK(t.at(99) == Complex(0.0, 1.0)); // last value repeats
}

TEST_CASE("shift weights load from a table file") {
    const std::string path = "r_table_test.txt";
    {
        std::ofstream out(path);
        out << "0.5\n";
        out << "0.25 -1.0\n";
        out << "\n";
        out << "0.9\n";
    }
    const auto r = ShiftWeights::parse("custom:" + path);
    CHECK(r.at(0) == Complex(0.5, 0.0));
    CHECK(r.at(1) == Complex(0.25, -1.0));
    CHECK(r.at(2) == Complex(0.9, 0.0));
    CHECK(r.at(1000) == Complex(0.9, 0.0)); // reuse past the end
    std::remove(path.c_str());

    CHECK_THROWS_AS(ShiftWeights::parse("custom:/no/such/file"), std::invalid_argument);
}

TEST_CASE("shift_power_action") {
    const auto hardy = unilateral("one");
    const auto a = shift_power_action(hardy, 2, 3);
    CHECK(a.target == 5);
    CHECK(a.coefficient == Complex(1.0, 0.0));

    const ShiftOperator op(WeightSequence::builtin("one"), ShiftWeights::n_over_n_plus_1());
    const auto b = shift_power_action(op, 1, 1);
    CHECK(b.target == 2);
    CHECK(b.coefficient == Complex(0.5, 0.0));

    const auto d0 = ShiftOperator(WeightSequence::builtin("n"));
    const auto c = shift_power_action(d0, 1, 1);
    CHECK(c.target == 2);
    CHECK(c.coefficient == Complex(1.0, 0.0));

    CHECK_THROWS_AS(shift_power_action(d0, 1, 0), std::domain_error);
}

TEST_CASE("adjoint_power_action") {
    const auto hardy = unilateral("one");
    CHECK(adjoint_power_action(hardy, 1, 0).coefficient == Complex(0.0, 0.0));

    const auto dirichlet = unilateral("n_plus_1");
    const auto a = adjoint_power_action(dirichlet, 1, 2);
    CHECK(a.target == 1);
    CHECK(a.coefficient == Complex(1.5, 0.0));

    // weighted: coefficient conj(r_{n-1}) alpha_n/alpha_{n-m}; for
    // r_n = n/(n+1), m=1, n=2 on alpha=1 that is r_1 = 1/2
    const ShiftOperator op(WeightSequence::builtin("one"), ShiftWeights::n_over_n_plus_1());
    const auto b = adjoint_power_action(op, 1, 2);
    CHECK(b.target == 1);
    CHECK(b.coefficient == Complex(0.5, 0.0));

    // cross-check against the pairing <S z^1, z^2> = <z^1, S^dag z^2>
    const Complex lhs = shift_power_action(op, 1, 1).coefficient; // r_1 <z^2,z^2> = r_1
    CHECK(std::abs(lhs - std::conj(b.coefficient)) < 1e-15);
}

TEST_CASE("adjoint_apply") {
    const auto hardy = unilateral("one");
    const auto back = adjoint_apply(hardy, PowerSeries::monomial(1));
    CHECK(back.degree() == 0);
    CHECK(back.coeff(0) == Complex(1.0, 0.0));

    const auto dirichlet = unilateral("n_plus_1");
    const auto b = adjoint_apply(dirichlet, PowerSeries::monomial(2));
    CHECK(b.degree() == 1);
    CHECK(b.coeff(1) == Complex(1.5, 0.0));

    CHECK(adjoint_apply(dirichlet, PowerSeries::monomial(0)).is_zero());
    const auto d20 = unilateral("n2_nminus1");
    CHECK(adjoint_apply(d20, PowerSeries::monomial(2)).is_zero());
    CHECK_THROWS_AS(adjoint_apply(d20, PowerSeries::monomial(1)), std::domain_error);
}

TEST_CASE("adjoint_pairing_check examples") {
    const auto hardy = unilateral("one");
    const auto [a1, a2] =
        adjoint_pairing_check(hardy, PowerSeries::monomial(1), PowerSeries::monomial(2));
    CHECK(a1 == Complex(1.0, 0.0));
    CHECK(a2 == Complex(1.0, 0.0));

    const auto dirichlet = unilateral("n_plus_1");
    const auto [b1, b2] =
        adjoint_pairing_check(dirichlet, PowerSeries::monomial(0), PowerSeries::monomial(1));
    CHECK(b1 == Complex(2.0, 0.0));
    CHECK(b2 == Complex(2.0, 0.0));

    const auto [c1, c2] = adjoint_pairing_check(hardy, PowerSeries{}, PowerSeries::monomial(1));
    CHECK(c1 == Complex(0.0, 0.0));
    CHECK(c2 == Complex(0.0, 0.0));
}

TEST_CASE("adjoint pairing holds on random polynomials, unilateral and weighted") {
    std::mt19937 rng(42);
    for (const char* name : {"one", "n", "n_plus_1", "n2_nminus1", "inv_n", "inv_n_plus_1"}) {
        const auto w = WeightSequence::builtin(name);
        for (const bool weighted : {false, true}) {
            const ShiftOperator op(w, weighted ? ShiftWeights::n_over_n_plus_1()
                                               : ShiftWeights::unit());
            for (int t = 0; t < 100; ++t) {
                const auto f = random_poly(rng, 10, w.start_index());
                const auto g = random_poly(rng, 10, w.start_index());
                const auto [lhs, rhs] = adjoint_pairing_check(op, f, g);
                CHECK(std::abs(lhs - rhs) <=
                      1e-12 * (1.0 + std::max(std::abs(lhs), std::abs(rhs))));
            }
        }
    }
}

TEST_CASE("norm_bound certificates") {
    CHECK(norm_bound(unilateral("one"), 100).value == 1.0);
    CHECK(norm_bound(unilateral("n_plus_1"), 100).value == doctest::Approx(std::sqrt(2.0)));

    const ShiftOperator op(WeightSequence::builtin("one"), ShiftWeights::n_over_n_plus_1());
    const auto nb = norm_bound(op, 50);
    CHECK(nb.value == doctest::Approx(50.0 / 51.0));
    CHECK(nb.window_end == 50);
}

TEST_CASE("boundedness: ||Sf||^2 <= bound^2 ||f||^2") {
    std::mt19937 rng(4242);
    for (const char* name : {"one", "n", "n_plus_1", "inv_n_plus_1"}) {
        const auto w = WeightSequence::builtin(name);
        const ShiftOperator op(w);
        for (int t = 0; t < 100; ++t) {
            const auto f = random_poly(rng, 10, w.start_index());
            const double nf = disktrace::series::norm(f, w);
            const double nsf = disktrace::series::norm(shift_apply(op, f), w);
            const double bound = norm_bound(op, 10 + w.start_index() + 2).value;
            CHECK(nsf * nsf <= bound * bound * nf * nf + 1e-12);
        }
    }
}

TEST_CASE("commutator_diagonal examples and case split") {
    CHECK(commutator_diagonal(unilateral("one"), 1, 0) == 1.0);
    CHECK(commutator_diagonal(unilateral("one"), 1, 5) == 0.0);
    CHECK(commutator_diagonal(unilateral("n_plus_1"), 1, 2) ==
          doctest::Approx(4.0 / 3.0 - 3.0 / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(commutator_diagonal(unilateral("n"), 1, 0), std::domain_error);
}

TEST_CASE("commutator diagonality: composed actions reproduce the closed-form scalar") {
    for (const char* name : {"one", "n", "n_plus_1", "n2_nminus1", "inv_n", "inv_n_plus_1"}) {
        const auto w = WeightSequence::builtin(name);
        for (const bool weighted : {false, true}) {
            const ShiftOperator op(w, weighted ? ShiftWeights::one_minus_inv_sq()
                                               : ShiftWeights::unit());
            for (int m = 1; m <= 6; ++m) {
                for (std::int64_t n = w.start_index(); n <= 200; ++n) {
                    // (S^dag)^m S^m z^n via composed index actions
                    const auto up = shift_power_action(op, m, n);
                    const auto updown = adjoint_power_action(op, m, up.target);
                    Complex composed = up.coefficient * updown.coefficient;
                    // minus S^m (S^dag)^m z^n
                    const auto down = adjoint_power_action(op, m, n);
                    if (down.coefficient != Complex(0.0, 0.0)) {
                        const auto downup = shift_power_action(op, m, down.target);
                        composed -= down.coefficient * downup.coefficient;
                    }
                    const double expect = commutator_diagonal(op, m, n);
                    CHECK(std::abs(composed - Complex(expect, 0.0)) <=
                          1e-13 * (1.0 + std::fabs(expect)));
                }
            }
        }
    }
}

TEST_CASE("banded truncation examples") {
    SUBCASE("f = z on the Hardy shift: subdiagonal of ones") {
        const auto b =
            truncate_polynomial_calculus(PowerSeries::monomial(1), unilateral("one"), false, 4);
        for (std::int64_t n = 0; n + 1 < 4; ++n)
            CHECK(b.entry(n + 1, n) == Complex(1.0, 0.0));
        CHECK(b.entry(0, 0) == Complex(0.0, 0.0));
    }

    SUBCASE("dagger of z on alpha = n+1: superdiagonal of ratios") {
        const auto b = truncate_polynomial_calculus(PowerSeries::monomial(1),
                                                    unilateral("n_plus_1"), true, 4);
        CHECK(b.entry(0, 1) == Complex(2.0, 0.0));
        CHECK(b.entry(1, 2) == Complex(1.5, 0.0));
        CHECK(std::abs(b.entry(2, 3) - Complex(4.0 / 3.0, 0.0)) < 1e-15);
    }

    SUBCASE("f = 1: identity band from the start index") {
        const auto b = truncate_polynomial_calculus(PowerSeries::monomial(0),
                                                    unilateral("n2_nminus1"), false, 5);
        CHECK(b.entry(0, 0) == Complex(0.0, 0.0));
        CHECK(b.entry(1, 1) == Complex(0.0, 0.0));
        CHECK(b.entry(2, 2) == Complex(1.0, 0.0));
        CHECK(b.entry(4, 4) == Complex(1.0, 0.0));
    }

    SUBCASE("dimension error") {
        CHECK_THROWS_AS(
            truncate_polynomial_calculus(PowerSeries::monomial(6), unilateral("one"), false, 6),
            std::invalid_argument);
    }
}

TEST_CASE("banded multiply/subtract agree with a dense oracle") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    const std::int64_t dim = 12;

    for (int trial = 0; trial < 20; ++trial) {
        BandedTruncation a(dim), b(dim);
        for (int e = 0; e < 30; ++e) {
            const auto r = static_cast<std::int64_t>(rng() % dim);
            const auto c = static_cast<std::int64_t>(rng() % dim);
            a.add_entry(r, c, Complex(box(rng), box(rng)));
            b.add_entry(c, r, Complex(box(rng), box(rng)));
        }
        const auto prod = a.multiply(b);
        const auto diff = a.subtract(b);

        const auto da = to_dense(a), db = to_dense(b);
        for (std::int64_t r = 0; r < dim; ++r) {
            for (std::int64_t c = 0; c < dim; ++c) {
                Complex acc(0.0, 0.0);
                for (std::int64_t k = 0; k < dim; ++k)
                    acc += da[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                           db[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                CHECK(std::abs(prod.entry(r, c) - acc) <= 1e-13);
                CHECK(std::abs(diff.entry(r, c) -
                               (da[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                                db[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) <=
                      1e-15);
            }
        }
    }
}

TEST_CASE("truncation interior rows match the index-level action") {
    std::mt19937 rng(11);
    const auto w = WeightSequence::builtin("n_plus_1");
    const ShiftOperator op(w, ShiftWeights::n_over_n_plus_1());
    const std::int64_t dim = 32;
    const auto f = random_poly(rng, 5, 0);

    const auto plain = truncate_polynomial_calculus(f, op, false, dim);
    const auto dag = truncate_polynomial_calculus(f, op, true, dim);

    for (std::int64_t n = 0; n < dim; ++n) {
        for (std::int64_t d = 1; d <= f.degree(); ++d) {
            if (n + d < dim) {
                const auto act = shift_power_action(op, static_cast<int>(d), n);
                CHECK(std::abs(plain.entry(act.target, n) - f.coeff(d) * act.coefficient) <=
                      1e-14);
            }
            if (n - d >= 0) {
                const auto act = adjoint_power_action(op, static_cast<int>(d), n);
                CHECK(std::abs(dag.entry(act.target, n) -
                               std::conj(f.coeff(d)) * act.coefficient) <= 1e-14);
            }
        }
    }
}
