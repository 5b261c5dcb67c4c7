#ifndef DISKTRACE_TRACE_HPP
#define DISKTRACE_TRACE_HPP

#include <complex>
#include <cstdint>
#include <string>

#include "disktrace/operators.hpp"
#include "disktrace/series.hpp"

namespace disktrace::trace {

using operators::ShiftOperator;
using series::Complex;
using series::PowerSeries;

enum class Route { series, telescoped, matrix };

const char* route_name(Route r);

struct TraceResult {
    Complex value{0.0, 0.0};
    std::int64_t partial_terms_used = 0; // effective series length at convergence
    double tail_estimate = 0.0;          // |partial(2N) - partial(N)| at the final doubling
    Route route = Route::series;
    bool converged = false;
    std::string diagnostic; // set when not converged / hypotheses fail
};

/// Default term cap for the adaptive series summation.
inline constexpr std::int64_t kDefaultTraceTermCap = std::int64_t{1} << 27;

/// tr[(S_r^dag)^m S_r^m - S_r^m (S_r^dag)^m] by direct summation of the
/// commutator diagonal from start_index, doubling the partial-sum length
/// (starting at max(64, 8m + start_index)) until |partial(2N) - partial(N)|
/// < tol or n_max is reached.  The weight family's ratio hypothesis and the
/// shift weights' |r_n| -> 1 hypothesis are probed first; when they fail the
/// result is flagged rather than trusted.  Never throws on non-convergence:
/// the best value is returned with converged = false and a diagnostic.
TraceResult monomial_trace_series(const ShiftOperator& op, int m, double tol,
                                  std::int64_t n_max = kDefaultTraceTermCap);

/// The m-term boundary sum sum_{n=N-m+1..N} prod_{i=n..n+m-1}|r_i|^2
/// alpha_{n+m}/alpha_n.  Equals the series partial sum through n = N
/// exactly (the series telescopes), and converges to m as N grows.
/// Requires N >= start_index + m.
double telescoped_partial(const ShiftOperator& op, int m, std::int64_t N);

/// Same trace via the telescoped boundary sum evaluated at doubling N.
/// O(m) work per evaluation, so it reaches tolerances the term-by-term
/// summation cannot afford; used as the engine behind bilinear_form.
TraceResult monomial_trace_telescoped(const ShiftOperator& op, int m, double tol);

/// Series partial sum sum_{n=start..N} commutator_diagonal(op, m, n),
/// summed term by term.  Exposed for the telescoping-identity checks.
double series_partial_sum(const ShiftOperator& op, int m, std::int64_t N);

/// <<f, g>> = tr(g(S)^dag f(S) - f(S) g(S)^dag), computed as
/// sum_j a_j conj(b_j) tr[(S^dag)^j S^j - S^j (S^dag)^j]: the cross terms
/// j != k shift basis degree and contribute nothing to the diagonal.  The
/// per-monomial traces run on the telescoped route.
TraceResult bilinear_form(const PowerSeries& f, const PowerSeries& g,
                          const ShiftOperator& op, double tol);

/// The derivative area form; the value the bilinear form must reproduce.
Complex dirichlet_oracle(const PowerSeries& f, const PowerSeries& g);

/// Independent validation route through banded matrix algebra: builds
/// f(S), g(S)^dag on dimension N, forms the commutator, and sums diagonal
/// entries over interior rows n <= N - (deg f + deg g) - 1 (those rows are
/// exact by construction; the full diagonal of a finite commutator sums to
/// zero identically).  The result is the series partial sum through the
/// interior edge, so it carries the partial sum's O((deg f + deg g)^2 / N)
/// truncation tail.  Requires N > 4 (deg f + deg g).
Complex matrix_trace_check(const PowerSeries& f, const PowerSeries& g,
                           const ShiftOperator& op, std::int64_t N);

/// Sign census of the commutator-diagonal terms on [start_index, N];
/// surfaces where a convex family's terms go negative instead of deciding
/// what the sign "should" be.
struct SignScan {
    double min_term = 0.0;
    double max_term = 0.0;
    std::int64_t argmin = 0;
    std::int64_t argmax = 0;
    std::int64_t negative_terms = 0;
    std::int64_t positive_terms = 0;
};

SignScan sign_pattern_scan(const ShiftOperator& op, int m, std::int64_t N);

} // namespace disktrace::trace

#endif
