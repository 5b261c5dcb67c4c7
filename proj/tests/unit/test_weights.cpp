#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "disktrace/gamma.hpp"
#include "disktrace/weights.hpp"

using disktrace::weights::Shape;
using disktrace::weights::WeightSequence;

TEST_CASE("gamma_fn agrees with std::tgamma and exact factorials") {
    CHECK(disktrace::special::gamma_fn(1.0) == 1.0);
    CHECK(disktrace::special::gamma_fn(5.0) == 24.0);
    CHECK(disktrace::special::gamma_fn(13.0) == 479001600.0);
    for (double x : {0.1, 0.5, 1.5, 2.5, 3.25, 7.75, 12.3, 25.0 + 0.125, 49.5}) {
        const double mine = disktrace::special::gamma_fn(x);
        const double ref = std::tgamma(x);
        CHECK(std::fabs(mine - ref) <= 1e-13 * std::fabs(ref));
    }
    CHECK_THROWS_AS(disktrace::special::gamma_fn(0.0), std::domain_error);
}

TEST_CASE("weight_at matches the tabled generators") {
    CHECK(WeightSequence::builtin("n_plus_1").at(0) == 1.0);
    CHECK(WeightSequence::builtin("n").at(0) == 0.0); // start_index 1
    CHECK(WeightSequence::builtin("n2_nminus1").at(3) == 18.0);

    const auto one = WeightSequence::builtin("one");
    CHECK(one.at(123456) == 1.0);

    SUBCASE("start indices") {
        CHECK(WeightSequence::builtin("one").start_index() == 0);
        CHECK(WeightSequence::builtin("n").start_index() == 1);
        CHECK(WeightSequence::builtin("n_plus_1").start_index() == 0);
        CHECK(WeightSequence::builtin("n2_nminus1").start_index() == 2);
        CHECK(WeightSequence::builtin("inv_n").start_index() == 1);
        CHECK(WeightSequence::builtin("inv_n_plus_1").start_index() == 0);
        const std::vector<double> p = {0.0, 0.0, 3.0};
        CHECK(WeightSequence::builtin("gamma_log_deriv", p).start_index() == 3);
    }

    SUBCASE("gamma_log at gamma=0, beta=0 is 1/(2n+2)") {
        const std::vector<double> p = {0.0, 0.0};
        const auto w = WeightSequence::builtin("gamma_log", p);
        for (std::int64_t n = 0; n <= 20; ++n)
            CHECK(w.at(n) == doctest::Approx(1.0 / (2.0 * n + 2.0)).epsilon(1e-14));
    }

    SUBCASE("gamma_log_deriv at k=1 is n/(2n+2)") {
        const std::vector<double> p = {0.0, 0.0, 1.0};
        const auto w = WeightSequence::builtin("gamma_log_deriv", p);
        CHECK(w.at(0) == 0.0);
        for (std::int64_t n = 1; n <= 20; ++n)
            CHECK(w.at(n) ==
                  doctest::Approx(static_cast<double>(n) / (2.0 * n + 2.0)).epsilon(1e-14));
    }

    SUBCASE("gamma_log_deriv beta=2, k=3 matches 2(n-2)(n-1)^2 n^2/(gamma+2n+2)^3") {
        const std::vector<double> p = {1.0, 2.0, 3.0};
        const auto w = WeightSequence::builtin("gamma_log_deriv", p);
        CHECK(w.at(2) == 0.0);
        for (std::int64_t n = 3; n <= 12; ++n) {
            const double d = 1.0 + 2.0 * n + 2.0;
            const double expect = 2.0 * (n - 2.0) * (n - 1.0) * (n - 1.0) * n * n / (d * d * d);
            CHECK(w.at(n) == doctest::Approx(expect).epsilon(1e-13));
        }
    }
}

TEST_CASE("builtin rejects unknown families and bad parameters") {
    CHECK_THROWS_AS(WeightSequence::builtin("nope"), std::invalid_argument);
    const std::vector<double> bad_gamma = {-2.0, 0.0};
    CHECK_THROWS_AS(WeightSequence::builtin("gamma_log", bad_gamma), std::invalid_argument);
    const std::vector<double> bad_beta = {0.0, -1.0};
    CHECK_THROWS_AS(WeightSequence::builtin("gamma_log", bad_beta), std::invalid_argument);
    const std::vector<double> frac_k = {0.0, 0.0, 1.5};
    CHECK_THROWS_AS(WeightSequence::builtin("gamma_log_deriv", frac_k), std::invalid_argument);
    const std::vector<double> extra = {1.0};
    CHECK_THROWS_AS(WeightSequence::builtin("one", extra), std::invalid_argument);
}

TEST_CASE("ratio values and domain") {
    CHECK(WeightSequence::builtin("one").ratio(7) == 1.0);
    CHECK(WeightSequence::builtin("n_plus_1").ratio(0) == 2.0);
    CHECK(WeightSequence::builtin("inv_n").ratio(1) == doctest::Approx(0.5));
    CHECK_THROWS_AS(WeightSequence::builtin("n").ratio(0), std::domain_error);
}

TEST_CASE("classify shapes and limit flags") {
    SUBCASE("n_plus_1 is affine with ratio limit") {
        const auto c = classify(WeightSequence::builtin("n_plus_1"), 1000, 1e-12);
        CHECK(c.shape == Shape::affine);
        CHECK(c.ratio_limit_ok);
        CHECK(c.window_begin == 0);
        CHECK(c.window_end == 1000);
    }

    SUBCASE("inv_n_plus_1: second differences 2/(n(n+1)(n+2)) > 0, hence convex") {
        // independent oracle: scan the closed-form second difference directly
        const auto w = WeightSequence::builtin("inv_n_plus_1");
        for (std::int64_t n = 1; n < 50; ++n) {
            const double d2 = w.at(n + 1) - 2.0 * w.at(n) + w.at(n - 1);
            const double expect = 2.0 / (static_cast<double>(n) * (n + 1.0) * (n + 2.0));
            CHECK(d2 == doctest::Approx(expect).epsilon(1e-10));
        }
        const auto c = classify(w, 1000, 1e-12);
        CHECK(c.shape == Shape::convex);
        CHECK(c.ratio_limit_ok);
    }

    SUBCASE("n2_nminus1 is convex") {
        const auto c = classify(WeightSequence::builtin("n2_nminus1"), 1000, 1e-12);
        CHECK(c.shape == Shape::convex);
        CHECK(c.ratio_limit_ok);
    }

    SUBCASE("window too small") {
        CHECK_THROWS_AS(classify(WeightSequence::builtin("n2_nminus1"), 4, 1e-12),
                        std::invalid_argument);
    }

    SUBCASE("a geometric custom family fails the limit tests") {
        const auto w = WeightSequence::custom(
            "geometric2", 0, [](std::int64_t n) { return std::pow(2.0, static_cast<double>(n)); });
        const auto c = classify(w, 200, 1e-12);
        CHECK_FALSE(c.ratio_limit_ok);
        CHECK_FALSE(c.root_limsup_ok);
        CHECK(c.shape == Shape::convex);
    }
}

TEST_CASE("built-in families: positivity, ratio limit, root test on the long window") {
    std::vector<WeightSequence> fams;
    for (const char* name : {"one", "n", "n_plus_1", "n2_nminus1", "inv_n", "inv_n_plus_1"})
        fams.push_back(WeightSequence::builtin(name));
    for (double g : {-1.0, 0.0, 1.0})
        for (double b : {0.0, 1.0, 2.0}) {
            const std::vector<double> p = {g, b};
            fams.push_back(WeightSequence::builtin("gamma_log", p));
        }

    for (const auto& w : fams) {
        CAPTURE(w.name());
        bool positive = true;
        for (std::int64_t n = w.start_index(); n <= 10000; ++n)
            positive = positive && w.at(n) > 0.0 && w.ratio(n) > 0.0;
        CHECK(positive);
        CHECK(std::fabs(w.ratio(10000) - 1.0) < 1e-3);
        CHECK(std::fabs(std::pow(w.at(10000), 1.0 / 10000.0) - 1.0) < 1e-2);
    }
}

TEST_CASE("classify is order-stable in the window length") {
    for (const char* name : {"one", "n", "n_plus_1", "n2_nminus1", "inv_n", "inv_n_plus_1"}) {
        const auto w = WeightSequence::builtin(name);
        const auto c1 = classify(w, 100, 1e-12);
        const auto c2 = classify(w, 1000, 1e-12);
        const auto c3 = classify(w, 10000, 1e-12);
        // enlarging the window never flips convex <-> concave
        const auto flip = [](Shape a, Shape b) {
            return (a == Shape::convex && b == Shape::concave) ||
                   (a == Shape::concave && b == Shape::convex);
        };
        CHECK_FALSE(flip(c1.shape, c2.shape));
        CHECK_FALSE(flip(c2.shape, c3.shape));
    }
}
