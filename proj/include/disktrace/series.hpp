#ifndef DISKTRACE_SERIES_HPP
#define DISKTRACE_SERIES_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "disktrace/weights.hpp"

namespace disktrace::series {

using Complex = std::complex<double>;

/// A polynomial (finitely supported coefficient vector), lowest degree
/// first.  The representation is normalized: the trailing coefficient is
/// nonzero unless the polynomial is identically zero (empty vector).
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Complex> coeffs);

    static PowerSeries monomial(std::int64_t n, Complex c = Complex(1.0, 0.0));

    /// Degree, or -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of z^n; zero beyond the stored degree.
    Complex coeff(std::int64_t n) const {
        if (n < 0 || n >= static_cast<std::int64_t>(coeffs_.size()))
            return {};
        return coeffs_[static_cast<std::size_t>(n)];
    }

    const std::vector<Complex>& coeffs() const { return coeffs_; }

private:
    std::vector<Complex> coeffs_;
};

/// <f, g> = sum_{n >= start_index} a_n conj(b_n) alpha_n.  Membership is
/// checked exactly: any nonzero coefficient below start_index throws
/// std::domain_error rather than being silently projected away.
Complex inner_product(const PowerSeries& f, const PowerSeries& g,
                      const weights::WeightSequence& w);

/// The derivative area form (1/pi) int_D f'(z) conj(g'(z)) dA(z) in its
/// coefficient guise sum_{n>=1} n a_n conj(b_n).  Total; coincides with
/// inner_product against the family "n" whenever the latter is defined.
Complex dirichlet_form(const PowerSeries& f, const PowerSeries& g);

/// sqrt(<f, f>); real and nonnegative.
double norm(const PowerSeries& f, const weights::WeightSequence& w);

/// f(z) -> f(e^{i theta} z): coefficient a_n picks up the phase e^{i n theta}.
PowerSeries rotate(const PowerSeries& f, double theta);

/// Horner evaluation of f at z.
Complex evaluate(const PowerSeries& f, Complex z);

} // namespace disktrace::series

#endif
