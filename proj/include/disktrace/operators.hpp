#ifndef DISKTRACE_OPERATORS_HPP
#define DISKTRACE_OPERATORS_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "disktrace/series.hpp"
#include "disktrace/weights.hpp"

namespace disktrace::operators {

using series::Complex;
using series::PowerSeries;

enum class ShiftFamilyId { unit, n_over_n_plus_1, one_minus_inv_sq, table };

/// The shift weight sequence r = (r_n).  r == 1 encodes the unilateral
/// shift; a table-backed sequence repeats its last value past the end.
class ShiftWeights {
public:
    static ShiftWeights unit();
    static ShiftWeights n_over_n_plus_1();   // r_n = n/(n+1)
    static ShiftWeights one_minus_inv_sq();  // r_n = 1 - 1/(n+2)^2
    static ShiftWeights table(std::vector<Complex> values);

    /// Parse a CLI/config spec: "unit", "n_over_n_plus_1",
    /// "one_minus_inv_sq", or "custom:<path>" (one complex per line,
    /// index-ordered; indices beyond the file reuse the last value).
    static ShiftWeights parse(const std::string& spec);

    Complex at(std::int64_t n) const;
    bool is_unit() const { return id_ == ShiftFamilyId::unit; }
    const std::string& name() const { return name_; }

private:
    ShiftFamilyId id_ = ShiftFamilyId::unit;
    std::string name_ = "unit";
    std::vector<Complex> values_;
};

/// The weighted shift S_r on H_alpha: S_r z^n = r_n z^{n+1}.
class ShiftOperator {
public:
    explicit ShiftOperator(weights::WeightSequence alpha,
                           ShiftWeights r = ShiftWeights::unit())
        : alpha_(std::move(alpha)), r_(std::move(r)) {}

    const weights::WeightSequence& alpha() const { return alpha_; }
    const ShiftWeights& r() const { return r_; }
    bool unilateral() const { return r_.is_unit(); }
    std::int64_t start_index() const { return alpha_.start_index(); }

private:
    weights::WeightSequence alpha_;
    ShiftWeights r_;
};

/// Result of applying an operator power to a basis monomial: the image is
/// coefficient * z^target (coefficient 0 when the action annihilates).
struct BasisAction {
    std::int64_t target = 0;
    Complex coefficient{0.0, 0.0};
};

/// S_r^m z^n = (prod_{i=n..n+m-1} r_i) z^{n+m}.  Requires n >= start_index.
BasisAction shift_power_action(const ShiftOperator& op, int m, std::int64_t n);

/// (S_r^dag)^m z^n = conj(prod_{i=n-m..n-1} r_i) (alpha_n/alpha_{n-m}) z^{n-m}
/// for n - m >= start_index, and 0 otherwise.  Requires n >= start_index.
BasisAction adjoint_power_action(const ShiftOperator& op, int m, std::int64_t n);

/// S_r f: coefficient n+1 of the image is r_n a_n.
PowerSeries shift_apply(const ShiftOperator& op, const PowerSeries& f);

/// S_r^dag f: coefficient n of the image is (alpha_{n+1}/alpha_n) a_{n+1} conj(r_n).
PowerSeries adjoint_apply(const ShiftOperator& op, const PowerSeries& f);

/// Returns (<S_r f, g>, <f, S_r^dag g>); the two must agree.
std::pair<Complex, Complex> adjoint_pairing_check(const ShiftOperator& op,
                                                  const PowerSeries& f,
                                                  const PowerSeries& g);

/// Windowed certificate for the operator norm:
/// sqrt(max_{start<=n<=window_end} (alpha_{n+1}/alpha_n) |r_n|^2).
struct NormBoundCertificate {
    double value = 0.0;
    std::int64_t window_end = 0;
};

NormBoundCertificate norm_bound(const ShiftOperator& op, std::int64_t window_end);

/// Diagonal entry of (S_r^dag)^m S_r^m at z^n:
/// prod_{i=n..n+m-1} |r_i|^2 * alpha_{n+m}/alpha_n.
double power_diagonal(const ShiftOperator& op, int m, std::int64_t n);

/// Diagonal entry of (S_r^dag)^m S_r^m - S_r^m (S_r^dag)^m at z^n; the
/// second piece is gated off when n - m < start_index.  The commutator is
/// diagonal in the monomial basis, so this scalar is the whole story.
double commutator_diagonal(const ShiftOperator& op, int m, std::int64_t n);

/// N x N truncation of an operator expression, stored by nonzero diagonals
/// (offset = row - col).  Interior rows agree exactly with the index-level
/// action; rows whose action reaches past the truncation edge are the
/// caller's responsibility.
class BandedTruncation {
public:
    explicit BandedTruncation(std::int64_t dim);

    std::int64_t dim() const { return dim_; }
    Complex entry(std::int64_t row, std::int64_t col) const;
    void add_entry(std::int64_t row, std::int64_t col, Complex v);

    BandedTruncation multiply(const BandedTruncation& rhs) const;
    BandedTruncation subtract(const BandedTruncation& rhs) const;
    std::vector<Complex> diagonal() const;

    const std::map<std::int64_t, std::vector<Complex>>& bands() const { return bands_; }

private:
    std::int64_t dim_ = 0;
    // offset -> entries, entry j sits at (j + max(o,0), j + max(-o,0))
    std::map<std::int64_t, std::vector<Complex>> bands_;

    std::vector<Complex>& band(std::int64_t offset);
};

/// Banded truncation of f(S_r) (dagger = false) or f(S_r)^dag (dagger =
/// true) on dimension dim.  Requires dim > deg(f) + start_index.
BandedTruncation truncate_polynomial_calculus(const PowerSeries& f, const ShiftOperator& op,
                                              bool dagger, std::int64_t dim);

} // namespace disktrace::operators

#endif
