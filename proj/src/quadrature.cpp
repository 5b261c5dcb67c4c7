#include "disktrace/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "disktrace/errors.hpp"
#include "disktrace/gamma.hpp"
#include "disktrace/summation.hpp"

namespace disktrace::quadrature {

namespace {

constexpr int kNodeStart = 8;
constexpr int kNodeCap = 128;

} // namespace

DiskWeight::DiskWeight(double gamma_, double beta_, int k_)
    : gamma(gamma_), beta(beta_), k(k_) {
    if (!(gamma > -2.0))
        throw std::invalid_argument("DiskWeight: gamma must be > -2");
    if (!(beta > -1.0))
        throw std::invalid_argument("DiskWeight: beta must be > -1");
    if (k < 0)
        throw std::invalid_argument("DiskWeight: k must be >= 0");
}

double disk_moment_analytic(const DiskWeight& dw, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("disk_moment_analytic: n must be >= 0");
    const double a = dw.gamma + 2.0 * static_cast<double>(n) + 2.0;
    return 2.0 * special::gamma_fn(dw.beta + 1.0) / std::pow(a, dw.beta + 1.0);
}

GaussLaguerreRule GaussLaguerreRule::compute(int n) {
    if (n < 1 || n > kNodeCap)
        throw std::invalid_argument("GaussLaguerreRule: node count out of range");
    GaussLaguerreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        // starting guesses per Numerical Recipes' gaulag
        if (i == 0)
            z = 3.0 / (1.0 + 2.4 * n);
        else if (i == 1)
            z += 15.0 / (1.0 + 2.5 * n);
        else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) *
                 (z - rule.nodes[static_cast<std::size_t>(i - 2)]);
        }
        double p1 = 0.0, p2 = 0.0, pp = 0.0;
        bool ok = false;
        for (int it = 0; it < 80; ++it) {
            p1 = 1.0;
            p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0 - z) * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (p1 - p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-14 * std::max(1.0, std::fabs(z))) {
                ok = true;
                break;
            }
        }
        if (!ok)
            throw numeric_error("GaussLaguerreRule: Newton iteration failed to settle");
        rule.nodes[static_cast<std::size_t>(i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = -1.0 / (pp * n * p2);
    }
    return rule;
}

double disk_moment_numeric(const DiskWeight& dw, std::int64_t n, double tol) {
    if (n < 0)
        throw std::invalid_argument("disk_moment_numeric: n must be >= 0");
    if (!(tol > 0.0))
        throw std::invalid_argument("disk_moment_numeric: tol must be positive");
    // (1/pi) int_D |z|^{2n+gamma} (log 1/|z|)^beta dA
    //   = 2 int_0^inf e^{-a t} t^beta dt            (r = e^{-t}, a = gamma+2n+2)
    //   = 2 a^{-(beta+1)} int_0^inf e^{-u} u^beta du (u = a t)
    const double a = dw.gamma + 2.0 * static_cast<double>(n) + 2.0;
    const double scale = 2.0 / std::pow(a, dw.beta + 1.0);

    double prev = 0.0;
    bool have_prev = false;
    for (int nodes = kNodeStart; nodes <= kNodeCap; nodes *= 2) {
        const auto rule = GaussLaguerreRule::compute(nodes);
        CompensatedSum q;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            q.add(rule.weights[i] * std::pow(rule.nodes[i], dw.beta));
        const double value = scale * q.value();
        if (have_prev && std::fabs(value - prev) < tol)
            return value;
        prev = value;
        have_prev = true;
    }
    throw numeric_error("disk_moment_numeric: node cap reached before tolerance");
}

PowerSeries differentiate(const PowerSeries& f, int k) {
    if (k < 0)
        throw std::invalid_argument("differentiate: k must be >= 0");
    if (k == 0)
        return f;
    if (f.degree() < k)
        return {};
    std::vector<Complex> out(static_cast<std::size_t>(f.degree() - k) + 1);
    for (std::int64_t j = 0; j + k <= f.degree(); ++j) {
        double factor = 1.0;
        for (std::int64_t i = 1; i <= k; ++i)
            factor *= static_cast<double>(j + i);
        out[static_cast<std::size_t>(j)] = factor * f.coeff(j + k);
    }
    return PowerSeries(std::move(out));
}

namespace {

/// int_0^inf e^{-u} u^beta du with the node count doubled until successive
/// values agree to rel_tol relatively (floored at the rule's own noise).
double laguerre_beta_moment(double beta, double rel_tol) {
    const double floor_tol = 1e-12;
    const double crit = std::max(rel_tol, floor_tol);
    double prev = 0.0;
    bool have_prev = false;
    for (int nodes = kNodeStart; nodes <= kNodeCap; nodes *= 2) {
        const auto rule = GaussLaguerreRule::compute(nodes);
        CompensatedSum q;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            q.add(rule.weights[i] * std::pow(rule.nodes[i], beta));
        const double value = q.value();
        if (have_prev && std::fabs(value - prev) <= crit * std::fabs(value))
            return value;
        prev = value;
        have_prev = true;
    }
    throw numeric_error("laguerre_beta_moment: node cap reached before tolerance");
}

Complex inner_product_orthogonality(const PowerSeries& fk, const PowerSeries& gk,
                                    const DiskWeight& dw, double tol) {
    const std::int64_t top = std::min(fk.degree(), gk.degree());
    if (top < 0)
        return {};
    // every matched degree shares the same radial profile: moment(p) =
    // 2 Q_beta / (gamma + 2p + 2)^{beta+1}, so one adaptive Q covers all
    const double qb = laguerre_beta_moment(dw.beta, tol);
    ComplexCompensatedSum acc;
    for (std::int64_t p = 0; p <= top; ++p) {
        const Complex c = fk.coeff(p) * std::conj(gk.coeff(p));
        if (c == Complex(0.0, 0.0))
            continue;
        const double a = dw.gamma + 2.0 * static_cast<double>(p) + 2.0;
        acc.add(c * (2.0 * qb / std::pow(a, dw.beta + 1.0)));
    }
    return acc.value();
}

Complex inner_product_grid(const PowerSeries& fk, const PowerSeries& gk,
                           const DiskWeight& dw, double tol) {
    if (fk.is_zero() || gk.is_zero())
        return {};
    // enough angular nodes to make the trapezoid rule exact for the
    // trigonometric polynomial e^{i (p - q) theta}, |p - q| <= deg f + deg g
    const std::int64_t t_nodes = 2 * (fk.degree() + gk.degree()) + 1;

    // After r = e^{-t}, the radial profile is a sum of e^{-(gamma+2p+2) t}
    // with p up to min(deg fk, deg gk).  Substituting u = A t with A the
    // geometric mean of the extreme exponents balances the decay rates the
    // Laguerre rule sees, which keeps its convergence geometric.
    const double a_lo = dw.gamma + 2.0;
    const double a_hi = a_lo + 2.0 * static_cast<double>(std::min(fk.degree(), gk.degree()));
    const double A = std::sqrt(a_lo * a_hi);
    const double radial_scale = 2.0 / std::pow(A, dw.beta + 1.0);

    Complex prev{};
    bool have_prev = false;
    for (int nodes = kNodeStart; nodes <= kNodeCap; nodes *= 2) {
        const auto rule = GaussLaguerreRule::compute(nodes);
        ComplexCompensatedSum acc;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = rule.nodes[i];
            const double w = rule.weights[i];
            if (!(w > 0.0))
                continue; // weight underflowed; true contribution is negligible
            const double r = std::exp(-u / A);
            ComplexCompensatedSum angular;
            for (std::int64_t t = 0; t < t_nodes; ++t) {
                const double theta =
                    2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(t_nodes);
                const Complex z = std::polar(r, theta);
                angular.add(series::evaluate(fk, z) * std::conj(series::evaluate(gk, z)));
            }
            // log-space node factor: w e^{u (1 - a_lo/A)} u^beta can pair a
            // subnormal weight with a huge exponential; their product is tame
            const double node_factor =
                std::exp(std::log(w) + dw.beta * std::log(u) + u * (1.0 - a_lo / A));
            acc.add(node_factor * angular.value() / static_cast<double>(t_nodes));
        }
        const Complex value = radial_scale * acc.value();
        if (have_prev && std::abs(value - prev) <= tol * (1.0 + std::abs(value)))
            return value;
        prev = value;
        have_prev = true;
    }
    throw numeric_error("weighted_inner_product_num: node cap reached in grid mode");
}

} // namespace

Complex weighted_inner_product_num(const PowerSeries& f, const PowerSeries& g,
                                   const DiskWeight& dw, double tol, QuadratureMode mode) {
    if (!(tol > 0.0))
        throw std::invalid_argument("weighted_inner_product_num: tol must be positive");
    const PowerSeries fk = differentiate(f, dw.k);
    const PowerSeries gk = differentiate(g, dw.k);
    if (mode == QuadratureMode::grid)
        return inner_product_grid(fk, gk, dw, tol);
    return inner_product_orthogonality(fk, gk, dw, tol);
}

Complex dirichlet_integral_num(const PowerSeries& f, const PowerSeries& g, double tol) {
    return weighted_inner_product_num(f, g, DiskWeight(0.0, 0.0, 1), tol);
}

} // namespace disktrace::quadrature
