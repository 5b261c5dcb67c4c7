#include "disktrace/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "disktrace/gamma.hpp"

namespace disktrace::weights {

namespace {

void require_params(std::string_view name, std::size_t got, std::size_t want) {
    if (got != want)
        throw std::invalid_argument("weight family '" + std::string(name) + "' expects " +
                                    std::to_string(want) + " parameter(s), got " +
                                    std::to_string(got));
}

} // namespace

WeightSequence WeightSequence::builtin(std::string_view name, std::span<const double> params) {
    WeightSequence w;
    w.name_ = std::string(name);
    w.params_.assign(params.begin(), params.end());

    if (name == "one") {
        require_params(name, params.size(), 0);
        w.id_ = FamilyId::one;
        w.start_ = 0;
    } else if (name == "n") {
        require_params(name, params.size(), 0);
        w.id_ = FamilyId::n;
        w.start_ = 1;
    } else if (name == "n_plus_1") {
        require_params(name, params.size(), 0);
        w.id_ = FamilyId::n_plus_1;
        w.start_ = 0;
    } else if (name == "n2_nminus1") {
        require_params(name, params.size(), 0);
        w.id_ = FamilyId::n2_nminus1;
        w.start_ = 2;
    } else if (name == "inv_n") {
        require_params(name, params.size(), 0);
        w.id_ = FamilyId::inv_n;
        w.start_ = 1;
    } else if (name == "inv_n_plus_1") {
        require_params(name, params.size(), 0);
        w.id_ = FamilyId::inv_n_plus_1;
        w.start_ = 0;
    } else if (name == "gamma_log" || name == "gamma_log_deriv") {
        const bool deriv = (name == "gamma_log_deriv");
        require_params(name, params.size(), deriv ? 3 : 2);
        w.id_ = deriv ? FamilyId::gamma_log_deriv : FamilyId::gamma_log;
        w.gamma_ = params[0];
        w.beta_ = params[1];
        if (!(w.gamma_ > -2.0))
            throw std::invalid_argument("gamma_log: gamma must be > -2");
        if (!(w.beta_ > -1.0))
            throw std::invalid_argument("gamma_log: beta must be > -1");
        if (deriv) {
            const double k = params[2];
            if (!(k >= 0.0) || k != std::floor(k) || k > 64.0)
                throw std::invalid_argument("gamma_log_deriv: k must be a small nonnegative integer");
            w.k_ = static_cast<std::int64_t>(k);
        }
        w.start_ = deriv ? w.k_ : 0;
        w.gamma_beta1_ = special::gamma_fn(w.beta_ + 1.0);
        const double e = 1.0 + w.beta_;
        if (e == std::floor(e) && e >= 1.0 && e <= 64.0) {
            w.exp_integral_ = true;
            w.exp_int_ = static_cast<std::int64_t>(e);
        }
    } else {
        throw std::invalid_argument("unknown weight family '" + std::string(name) + "'");
    }
    return w;
}

WeightSequence WeightSequence::custom(std::string name, std::int64_t start_index,
                                      std::function<double(std::int64_t)> generator) {
    if (start_index < 0)
        throw std::invalid_argument("custom weight family: start_index must be >= 0");
    if (!generator)
        throw std::invalid_argument("custom weight family: generator required");
    WeightSequence w;
    w.id_ = FamilyId::custom;
    w.name_ = std::move(name);
    w.start_ = start_index;
    w.generator_ = std::move(generator);
    return w;
}

double WeightSequence::ratio(std::int64_t n) const {
    if (n < start_)
        throw std::domain_error("WeightSequence::ratio: index below start_index");
    return at(n + 1) / at(n);
}

const char* shape_name(Shape s) {
    switch (s) {
    case Shape::convex:
        return "convex";
    case Shape::concave:
        return "concave";
    case Shape::affine:
        return "affine";
    case Shape::neither:
        return "neither";
    }
    return "?";
}

WeightClass classify(const WeightSequence& w, std::int64_t n_test, double tol) {
    const std::int64_t s = w.start_index();
    if (n_test < s + 3)
        throw std::invalid_argument("classify: window too small (need n_test >= start_index + 3)");

    bool all_nonneg = true;
    bool all_nonpos = true;
    bool all_tiny = true;
    for (std::int64_t n = s + 1; n + 1 <= n_test; ++n) {
        const double d2 = w.at(n + 1) - 2.0 * w.at(n) + w.at(n - 1);
        if (d2 < -tol)
            all_nonneg = false;
        if (d2 > tol)
            all_nonpos = false;
        if (std::fabs(d2) > tol)
            all_tiny = false;
    }

    WeightClass c;
    c.window_begin = s;
    c.window_end = n_test;
    if (all_tiny)
        c.shape = Shape::affine;
    else if (all_nonneg)
        c.shape = Shape::convex;
    else if (all_nonpos)
        c.shape = Shape::concave;
    else
        c.shape = Shape::neither;

    const std::int64_t mid = s + (n_test - s) / 2;
    const double ratio_end = std::fabs(w.ratio(n_test) - 1.0);
    const double ratio_mid = std::fabs(w.ratio(mid) - 1.0);
    c.ratio_limit_ok = ratio_end <= std::max(tol, 0.75 * ratio_mid + tol);

    const double root_end = std::fabs(std::pow(w.at(n_test), 1.0 / static_cast<double>(n_test)) - 1.0);
    const double root_mid =
        mid > 0 ? std::fabs(std::pow(w.at(mid), 1.0 / static_cast<double>(mid)) - 1.0) : 0.0;
    c.root_limsup_ok = root_end <= std::max(tol, 0.8 * root_mid + tol);
    return c;
}

} // namespace disktrace::weights
