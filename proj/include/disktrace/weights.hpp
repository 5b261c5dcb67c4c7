#ifndef DISKTRACE_WEIGHTS_HPP
#define DISKTRACE_WEIGHTS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace disktrace::weights {

enum class FamilyId {
    one,             // alpha_n = 1
    n,               // alpha_n = n                         (starts at 1)
    n_plus_1,        // alpha_n = n+1
    n2_nminus1,      // alpha_n = n^2 (n-1)                 (starts at 2)
    inv_n,           // alpha_n = 1/n                       (starts at 1)
    inv_n_plus_1,    // alpha_n = 1/(n+1)
    gamma_log,       // alpha_n = Gamma(beta+1)/(gamma+2n+2)^(1+beta)
    gamma_log_deriv, // alpha_n = (n-k+1) Gamma(beta+1)/(gamma+2n+2)^(1+beta)
                     //           * prod_{i=2..k} (n-k+i)^2 (starts at k)
    custom,
};

/// A weight sequence alpha = (alpha_n): strictly positive from start_index
/// on, identically zero below it.  The generator is a pure function of n and
/// returns bit-identical values on repeated calls.
class WeightSequence {
public:
    /// Construct one of the built-in families by name.  gamma_log takes
    /// params (gamma, beta) with gamma > -2, beta > -1; gamma_log_deriv
    /// takes (gamma, beta, k) with integral k >= 0.  The other families
    /// take no params.
    static WeightSequence builtin(std::string_view name,
                                  std::span<const double> params = {});

    /// Wrap an arbitrary generator.  The caller asserts positivity from
    /// start_index and determinism.
    static WeightSequence custom(std::string name, std::int64_t start_index,
                                 std::function<double(std::int64_t)> generator);

    /// alpha_n; zero below start_index.  Total.  Inline: this sits in the
    /// innermost loop of the trace series summation.
    double at(std::int64_t n) const {
        if (n < start_)
            return 0.0;
        const double x = static_cast<double>(n);
        switch (id_) {
        case FamilyId::one:
            return 1.0;
        case FamilyId::n:
            return x;
        case FamilyId::n_plus_1:
            return x + 1.0;
        case FamilyId::n2_nminus1:
            return x * x * (x - 1.0);
        case FamilyId::inv_n:
            return 1.0 / x;
        case FamilyId::inv_n_plus_1:
            return 1.0 / (x + 1.0);
        case FamilyId::gamma_log:
            return gamma_beta1_ / pow_1beta(gamma_ + 2.0 * x + 2.0);
        case FamilyId::gamma_log_deriv: {
            double v = (x - static_cast<double>(k_) + 1.0) * gamma_beta1_ /
                       pow_1beta(gamma_ + 2.0 * x + 2.0);
            for (std::int64_t i = 2; i <= k_; ++i) {
                const double t = x - static_cast<double>(k_) + static_cast<double>(i);
                v *= t * t;
            }
            return v;
        }
        case FamilyId::custom:
            return generator_(n);
        }
        return 0.0; // unreachable
    }

    /// alpha_{n+1}/alpha_n for n >= start_index, else std::domain_error.
    double ratio(std::int64_t n) const;

    std::int64_t start_index() const { return start_; }
    FamilyId id() const { return id_; }
    const std::string& name() const { return name_; }
    const std::vector<double>& params() const { return params_; }

private:
    WeightSequence() = default;

    FamilyId id_ = FamilyId::custom;
    std::string name_;
    std::vector<double> params_;
    std::int64_t start_ = 0;

    // gamma_log / gamma_log_deriv precomputation
    double gamma_ = 0.0;
    double beta_ = 0.0;
    std::int64_t k_ = 0;
    double gamma_beta1_ = 1.0;  // Gamma(beta+1)
    bool exp_integral_ = false; // 1+beta is a small integer
    std::int64_t exp_int_ = 1;

    std::function<double(std::int64_t)> generator_;

    double pow_1beta(double base) const {
        if (exp_integral_) {
            double acc = 1.0;
            double b = base;
            for (std::int64_t k = exp_int_; k > 0; k >>= 1) {
                if (k & 1)
                    acc *= b;
                if (k > 1)
                    b *= b;
            }
            return acc;
        }
        return std::pow(base, 1.0 + beta_);
    }
};

enum class Shape { convex, concave, affine, neither };

const char* shape_name(Shape s);

/// Numeric evidence for the hypotheses the trace computations rely on,
/// gathered on the window [start_index, window_end].
struct WeightClass {
    bool ratio_limit_ok = false;   // alpha_{n+1}/alpha_n -> 1
    Shape shape = Shape::neither;  // sign pattern of second differences
    bool root_limsup_ok = false;   // alpha_n^(1/n) -> 1
    std::int64_t window_begin = 0;
    std::int64_t window_end = 0;
};

/// Classify on [start_index, n_test].  Requires n_test >= start_index + 3.
///
/// Shape: second differences alpha_{n+1} - 2 alpha_n + alpha_{n-1} scanned
/// on the interior; affine when all lie within +-tol of zero, convex when
/// all >= -tol, concave when all <= +tol, neither otherwise.
///
/// The two limit flags compare the window-end deviation from 1 against the
/// mid-window deviation: the limit is accepted when the deviation has
/// decayed (end <= 0.75 * mid + tol for the ratio, 0.8 for the root test)
/// or is below tol outright.  A plain "deviation < tol" test would reject
/// every sequence whose ratio approaches 1 like 1/n, whatever the window.
WeightClass classify(const WeightSequence& w, std::int64_t n_test, double tol);

} // namespace disktrace::weights

#endif
