#ifndef DISKTRACE_KERNELS_HPP
#define DISKTRACE_KERNELS_HPP

#include <array>
#include <complex>
#include <cstdint>

#include "disktrace/series.hpp"
#include "disktrace/weights.hpp"

namespace disktrace::kernels {

using series::Complex;
using series::PowerSeries;

/// K_w(z) = sum_{n >= start_index} conj(w)^n z^n / alpha_n, summed with
/// compensated accumulation until the geometric tail bound
/// |zeta|^{N+1} / ((1 - |zeta|) min_{n<=N} alpha_n) drops below tol.
/// This is the ground-truth evaluator every closed form is checked against.
/// Throws std::domain_error when |z conj(w)| >= 1.
Complex kernel_series(const weights::WeightSequence& w, Complex z, Complex wpt, double tol);

/// Li_s(z) = sum_{k>=1} z^k / k^s on |z| < 1.  s = 1 goes through the
/// -log(1-z) identity; s >= 2 by direct summation with the geometric tail
/// bound.  Terms are capped at 1e6 (numeric_error beyond).
Complex polylog(int s, Complex z, double tol = 1e-14);

enum class ClosedFormKind {
    geometric,                  // zeta / (1 - zeta)
    log,                        // -log(1 - zeta)
    log_over_zeta,              // -log(1 - zeta)/zeta - 1
    rational,                   // zeta/(1-zeta)^2  or  zeta(2-zeta)/(1-zeta)^2
    polylog_composite,          // 2 zeta + (1-zeta) log(1-zeta) - Li_2(zeta)
    partial_fraction_composite, // the beta=2, k=3 five-group expression
    series_only,
};

const char* closed_form_name(ClosedFormKind k);

/// A tabled closed form for a family's kernel.  table_start records the
/// series start the tabled expression actually sums from; when it exceeds
/// the family's start_index, the omitted head terms must be added back
/// before comparing against kernel_series (see closed_form_total).
struct KernelForm {
    weights::WeightSequence family;
    ClosedFormKind kind;
    std::int64_t table_start;
};

/// The closed form registered for a family (series_only when the tables
/// carry no usable expression for it).
KernelForm kernel_form_for(const weights::WeightSequence& w);

/// The tabled expression, evaluated literally at zeta = z conj(w).
/// Throws std::domain_error for |zeta| >= 1, std::invalid_argument for
/// series_only forms.
Complex closed_form_eval(const KernelForm& kf, Complex zeta);

/// closed_form_eval plus the head terms sum_{n=start..table_start-1}
/// zeta^n / alpha_n, i.e. the value comparable against kernel_series.
Complex closed_form_total(const KernelForm& kf, Complex zeta);

/// 2 zeta + (1 - zeta) log(1 - zeta) - Li_2(zeta): the composite form for
/// alpha_n = n^2 (n - 1), whose series starts at n = 2.
Complex kernel_n2n1(Complex zeta, double tol = 1e-14);

/// Five-group closed form obtained by partial fractions from
/// (1/2) sum_{n>=3} zeta^n (gamma+2n+2)^2 / ((n-2)(n-1)^2 n^2).
Complex kernel_pf_beta2_k3(double gamma, Complex zeta, double tol = 1e-14);

/// Direct summation of that series; the oracle the closed form is
/// validated against (not vice versa).
Complex kernel_pf_beta2_k3_series(double gamma, Complex zeta, double tol = 1e-14);

/// Per-group comparison: each group's series sum against its closed form,
/// both including the overall 1/8 factor, so the five of them add up to
/// the full kernel on either side.
struct PfGroup {
    const char* label;
    Complex series_sum;
    Complex closed_value;
};

std::array<PfGroup, 5> kernel_pf_beta2_k3_groups(double gamma, Complex zeta,
                                                 double tol = 1e-14);

/// Evaluates f at wpt two ways: Horner, and pairing against the kernel
/// series truncated at deg(f) (exact for polynomials).  `passed` applies
/// the usual relative gauge |lhs - rhs| <= tol (1 + |lhs|).
struct ReproducingCheckResult {
    Complex point_value;
    Complex kernel_pairing;
    double tol;
    bool passed;
};

ReproducingCheckResult reproducing_check(const weights::WeightSequence& w,
                                         const PowerSeries& f, Complex wpt, double tol);

} // namespace disktrace::kernels

#endif
