#include "disktrace/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "disktrace/errors.hpp"
#include "disktrace/summation.hpp"

namespace disktrace::kernels {

namespace {

constexpr std::int64_t kTermCap = 2'000'000;

void check_disk(double mod, const char* who) {
    if (!(mod < 1.0))
        throw std::domain_error(std::string(who) + ": |zeta| must be < 1");
}

Complex log1m(Complex zeta) {
    return std::log(Complex(1.0, 0.0) - zeta); // principal branch
}

/// sum_{n>=1} zeta^n / (n+1), used where -log(1-zeta)/zeta - 1 cancels.
Complex log_over_zeta_series(Complex zeta) {
    ComplexCompensatedSum acc;
    Complex pw = zeta;
    for (std::int64_t n = 1; n <= 64; ++n) {
        const Complex term = pw / static_cast<double>(n + 1);
        acc.add(term);
        if (std::abs(term) < 1e-18)
            break;
        pw *= zeta;
    }
    return acc.value();
}

} // namespace

Complex kernel_series(const weights::WeightSequence& w, Complex z, Complex wpt, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("kernel_series: tol must be positive");
    const Complex zeta = z * std::conj(wpt);
    const double q = std::abs(zeta);
    check_disk(q, "kernel_series");

    const std::int64_t s = w.start_index();
    Complex pw(1.0, 0.0);
    for (std::int64_t i = 0; i < s; ++i)
        pw *= zeta;

    ComplexCompensatedSum acc;
    double min_alpha = w.at(s);
    double qn = std::pow(q, static_cast<double>(s));
    for (std::int64_t n = s;; ++n) {
        const double a = w.at(n);
        if (a < min_alpha)
            min_alpha = a;
        acc.add(pw / a);
        pw *= zeta;
        qn *= q;
        // tail bound: remaining terms <= |zeta|^{n+1} / ((1-|zeta|) min alpha)
        if (qn / ((1.0 - q) * min_alpha) < tol)
            break;
        if (n - s >= kTermCap)
            throw numeric_error("kernel_series: term cap reached before the tail bound met tol");
    }
    return acc.value();
}

Complex polylog(int s, Complex z, double tol) {
    if (s < 1)
        throw std::invalid_argument("polylog: order must be a positive integer");
    if (!(tol > 0.0))
        throw std::invalid_argument("polylog: tol must be positive");
    const double q = std::abs(z);
    check_disk(q, "polylog");
    if (s == 1)
        return -log1m(z);

    ComplexCompensatedSum acc;
    Complex pw = z;
    double qk = q;
    for (std::int64_t k = 1;; ++k) {
        acc.add(pw / std::pow(static_cast<double>(k), s));
        pw *= z;
        qk *= q;
        if (qk / ((1.0 - q) * std::pow(static_cast<double>(k + 1), s)) < tol)
            break;
        if (k >= 1'000'000)
            throw numeric_error("polylog: term cap reached before the tail bound met tol");
    }
    return acc.value();
}

const char* closed_form_name(ClosedFormKind k) {
    switch (k) {
    case ClosedFormKind::geometric:
        return "geometric";
    case ClosedFormKind::log:
        return "log";
    case ClosedFormKind::log_over_zeta:
        return "log_over_zeta";
    case ClosedFormKind::rational:
        return "rational";
    case ClosedFormKind::polylog_composite:
        return "polylog_composite";
    case ClosedFormKind::partial_fraction_composite:
        return "partial_fraction_composite";
    case ClosedFormKind::series_only:
        return "series_only";
    }
    return "?";
}

KernelForm kernel_form_for(const weights::WeightSequence& w) {
    using weights::FamilyId;
    switch (w.id()) {
    case FamilyId::one:
        // tabled zeta/(1-zeta) sums from n = 1; the family starts at 0
        return {w, ClosedFormKind::geometric, 1};
    case FamilyId::n:
        return {w, ClosedFormKind::log, 1};
    case FamilyId::n_plus_1:
        // tabled -log(1-zeta)/zeta - 1 sums from n = 1; family starts at 0
        return {w, ClosedFormKind::log_over_zeta, 1};
    case FamilyId::n2_nminus1:
        return {w, ClosedFormKind::polylog_composite, 2};
    case FamilyId::inv_n:
        return {w, ClosedFormKind::rational, 1};
    case FamilyId::inv_n_plus_1:
        // tabled zeta(2-zeta)/(1-zeta)^2 sums from n = 1; family starts at 0
        return {w, ClosedFormKind::rational, 1};
    default:
        return {w, ClosedFormKind::series_only, w.start_index()};
    }
}

Complex closed_form_eval(const KernelForm& kf, Complex zeta) {
    const double q = std::abs(zeta);
    check_disk(q, "closed_form_eval");
    const Complex one(1.0, 0.0);
    switch (kf.kind) {
    case ClosedFormKind::geometric:
        return zeta / (one - zeta);
    case ClosedFormKind::log:
        return -log1m(zeta);
    case ClosedFormKind::log_over_zeta:
        if (q < 1e-4)
            return log_over_zeta_series(zeta);
        return -log1m(zeta) / zeta - one;
    case ClosedFormKind::rational: {
        const Complex d = (one - zeta) * (one - zeta);
        if (kf.family.id() == weights::FamilyId::inv_n_plus_1)
            return zeta * (Complex(2.0, 0.0) - zeta) / d;
        return zeta / d;
    }
    case ClosedFormKind::polylog_composite:
        return kernel_n2n1(zeta);
    case ClosedFormKind::partial_fraction_composite: {
        const auto& p = kf.family.params();
        return kernel_pf_beta2_k3(p.empty() ? 0.0 : p[0], zeta);
    }
    case ClosedFormKind::series_only:
        throw std::invalid_argument("closed_form_eval: family has no tabled closed form");
    }
    throw std::invalid_argument("closed_form_eval: unknown form");
}

Complex closed_form_total(const KernelForm& kf, Complex zeta) {
    Complex v = closed_form_eval(kf, zeta);
    Complex pw(1.0, 0.0);
    for (std::int64_t n = 0; n < kf.table_start; ++n) {
        if (n >= kf.family.start_index())
            v += pw / kf.family.at(n);
        pw *= zeta;
    }
    return v;
}

Complex kernel_n2n1(Complex zeta, double tol) {
    check_disk(std::abs(zeta), "kernel_n2n1");
    if (zeta == Complex(0.0, 0.0))
        return {};
    const Complex one(1.0, 0.0);
    return 2.0 * zeta + (one - zeta) * log1m(zeta) - polylog(2, zeta, tol);
}

namespace {

struct PfCoeffs {
    // group coefficients: c1/(n-2) + c2/(n-1) - c3/n^2 - c4/n - c5/(n-1)^2
    double c1, c2, c3, c4, c5;
};

PfCoeffs pf_coeffs(double g) {
    return {
        g * g + 12.0 * g + 36.0,
        4.0 * g * g + 16.0 * g,
        2.0 * g * g + 8.0 * g + 8.0,
        5.0 * g * g + 28.0 * g + 36.0,
        4.0 * g * g + 32.0 * g + 64.0,
    };
}

void check_pf_args(double gamma, Complex zeta, const char* who) {
    if (!(gamma > -2.0))
        throw std::invalid_argument(std::string(who) + ": gamma must be > -2");
    check_disk(std::abs(zeta), who);
}

} // namespace

Complex kernel_pf_beta2_k3(double gamma, Complex zeta, double tol) {
    check_pf_args(gamma, zeta, "kernel_pf_beta2_k3");
    if (zeta == Complex(0.0, 0.0))
        return {};
    const PfCoeffs c = pf_coeffs(gamma);
    const Complex L = log1m(zeta);
    const Complex li2 = polylog(2, zeta, tol);
    const Complex z2 = zeta * zeta;
    const Complex v = -c.c1 * (z2 * L)                                  //
                      - c.c2 * (zeta * L + z2)                          //
                      + c.c3 * (zeta + 0.25 * z2 - li2)                 //
                      + c.c4 * (L + zeta + 0.5 * z2)                    //
                      + c.c5 * (z2 - zeta * li2);
    return v / 8.0;
}

Complex kernel_pf_beta2_k3_series(double gamma, Complex zeta, double tol) {
    check_pf_args(gamma, zeta, "kernel_pf_beta2_k3_series");
    if (!(tol > 0.0))
        throw std::invalid_argument("kernel_pf_beta2_k3_series: tol must be positive");
    const double q = std::abs(zeta);
    ComplexCompensatedSum acc;
    Complex pw = zeta * zeta * zeta;
    double qn = q * q * q;
    for (std::int64_t n = 3;; ++n) {
        const double dn = static_cast<double>(n);
        const double num = gamma + 2.0 * dn + 2.0;
        const double coeff = num * num / ((dn - 2.0) * (dn - 1.0) * (dn - 1.0) * dn * dn);
        acc.add(0.5 * coeff * pw);
        pw *= zeta;
        qn *= q;
        // the rational coefficient decreases from n = 3 on
        const double next = gamma + 2.0 * (dn + 1.0) + 2.0;
        const double cnext = next * next / ((dn - 1.0) * dn * dn * (dn + 1.0) * (dn + 1.0));
        if (0.5 * cnext * qn / (1.0 - q) < tol)
            break;
        if (n >= kTermCap)
            throw numeric_error("kernel_pf_beta2_k3_series: term cap reached");
    }
    return acc.value();
}

std::array<PfGroup, 5> kernel_pf_beta2_k3_groups(double gamma, Complex zeta, double tol) {
    check_pf_args(gamma, zeta, "kernel_pf_beta2_k3_groups");
    const PfCoeffs c = pf_coeffs(gamma);
    const Complex L = log1m(zeta);
    const Complex li2 = polylog(2, zeta, tol);
    const Complex z2 = zeta * zeta;

    std::array<PfGroup, 5> out = {{
        {"c1/(n-2)", {}, -c.c1 * (z2 * L) / 8.0},
        {"c2/(n-1)", {}, -c.c2 * (zeta * L + z2) / 8.0},
        {"-c3/n^2", {}, c.c3 * (zeta + 0.25 * z2 - li2) / 8.0},
        {"-c4/n", {}, c.c4 * (L + zeta + 0.5 * z2) / 8.0},
        {"-c5/(n-1)^2", {}, c.c5 * (z2 - zeta * li2) / 8.0},
    }};

    std::array<ComplexCompensatedSum, 5> sums;
    const double q = std::abs(zeta);
    Complex pw = zeta * zeta * zeta;
    double qn = q * q * q;
    for (std::int64_t n = 3;; ++n) {
        const double dn = static_cast<double>(n);
        sums[0].add(c.c1 / (dn - 2.0) * pw / 8.0);
        sums[1].add(c.c2 / (dn - 1.0) * pw / 8.0);
        sums[2].add(-c.c3 / (dn * dn) * pw / 8.0);
        sums[3].add(-c.c4 / dn * pw / 8.0);
        sums[4].add(-c.c5 / ((dn - 1.0) * (dn - 1.0)) * pw / 8.0);
        pw *= zeta;
        qn *= q;
        // dominant remaining coefficient is c1/(n-1) for the next term
        const double biggest = std::max({c.c1, c.c2, c.c3, c.c4, c.c5});
        if (biggest / (dn - 1.0) * qn / (1.0 - q) / 8.0 < tol)
            break;
        if (n >= kTermCap)
            throw numeric_error("kernel_pf_beta2_k3_groups: term cap reached");
    }
    for (int i = 0; i < 5; ++i)
        out[static_cast<std::size_t>(i)].series_sum = sums[static_cast<std::size_t>(i)].value();
    return out;
}

ReproducingCheckResult reproducing_check(const weights::WeightSequence& w,
                                         const PowerSeries& f, Complex wpt, double tol) {
    if (!(std::abs(wpt) < 1.0))
        throw std::domain_error("reproducing_check: evaluation point must lie in the open disk");
    ReproducingCheckResult res{};
    res.tol = tol;
    res.point_value = series::evaluate(f, wpt);
    if (f.degree() < w.start_index()) {
        // nothing to pair against, but membership still needs checking
        res.kernel_pairing = series::inner_product(f, PowerSeries{}, w);
    } else {
        std::vector<Complex> kc(static_cast<std::size_t>(f.degree()) + 1, Complex(0.0, 0.0));
        Complex pw(1.0, 0.0);
        for (std::int64_t n = 0; n <= f.degree(); ++n) {
            if (n >= w.start_index())
                kc[static_cast<std::size_t>(n)] = pw / w.at(n);
            pw *= std::conj(wpt);
        }
        res.kernel_pairing = series::inner_product(f, PowerSeries(std::move(kc)), w);
    }
    res.passed = std::abs(res.point_value - res.kernel_pairing) <=
                 tol * (1.0 + std::abs(res.point_value));
    return res;
}

} // namespace disktrace::kernels
