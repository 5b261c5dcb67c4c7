#include "disktrace/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace disktrace::special {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kSqrtTwoPi = 2.5066282746310002;

double lanczos_gamma(double x) {
    // Valid for x >= 0.5; callers below 0.5 go through the recurrence.
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        acc += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0))
        throw std::domain_error("gamma_fn: argument must be positive");
    const double r = std::round(x);
    if (r == x && r <= 171.0) {
        double f = 1.0;
        for (double k = 2.0; k < r; k += 1.0)
            f *= k;
        return f;
    }
    if (x < 0.5)
        return lanczos_gamma(x + 1.0) / x;
    return lanczos_gamma(x);
}

} // namespace disktrace::special
