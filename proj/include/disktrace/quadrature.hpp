#ifndef DISKTRACE_QUADRATURE_HPP
#define DISKTRACE_QUADRATURE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "disktrace/series.hpp"

namespace disktrace::quadrature {

using series::Complex;
using series::PowerSeries;

/// Measure parameters of |z|^gamma (log 1/|z|)^beta dA(z)/pi with k-th
/// derivative order applied to both arguments of the inner product.
struct DiskWeight {
    double gamma;
    double beta;
    int k;

    DiskWeight(double gamma_, double beta_, int k_);
};

/// (1/pi) int_D |z|^{2n} |z|^gamma (log 1/|z|)^beta dA(z)
///   = 2 Gamma(beta+1) / (gamma + 2n + 2)^{beta+1},
/// by r = e^{-t}.  The leading 2 (angular measure over pi) is reported as
/// is; how it relates to tabled weight families is the ratio the CLI
/// quadrature-check prints, not something this function hides.
double disk_moment_analytic(const DiskWeight& dw, std::int64_t n);

/// Same moment by Gauss-Laguerre quadrature after the r = e^{-t}
/// substitution, doubling the node count until successive values agree to
/// tol.  Throws numeric_error when the node cap is reached first.
double disk_moment_numeric(const DiskWeight& dw, std::int64_t n, double tol);

/// Gauss-Laguerre rule for int_0^inf e^{-x} f(x) dx (Newton iteration on
/// the Laguerre recurrence).
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static GaussLaguerreRule compute(int n);
};

/// Exact k-fold coefficient differentiation.
PowerSeries differentiate(const PowerSeries& f, int k);

enum class QuadratureMode {
    orthogonality, // exact angular reduction, numeric radial moments
    grid,          // trapezoid in theta x Gauss-Laguerre radial, end to end
};

/// (1/pi) int_D f^{(k)}(z) conj(g^{(k)}(z)) |z|^gamma (log 1/|z|)^beta dA(z).
/// The default path differentiates exactly, kills angular-mismatch terms by
/// orthogonality, and sums numeric radial moments over matched degrees; the
/// grid mode integrates pointwise on a polar grid whose trapezoid rule is
/// exact for the trigonometric polynomials involved.  tol is read relative
/// to the result's magnitude (with floor 1).
Complex weighted_inner_product_num(const PowerSeries& f, const PowerSeries& g,
                                   const DiskWeight& dw, double tol,
                                   QuadratureMode mode = QuadratureMode::orthogonality);

/// Specialization k = 1, gamma = beta = 0: (1/pi) int_D f' conj(g') dA.
Complex dirichlet_integral_num(const PowerSeries& f, const PowerSeries& g, double tol);

} // namespace disktrace::quadrature

#endif
