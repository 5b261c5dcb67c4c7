#include "disktrace/trace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "disktrace/summation.hpp"

namespace disktrace::trace {

namespace {

bool ratio_hypothesis_ok(const ShiftOperator& op) {
    const auto& alpha = op.alpha();
    const std::int64_t window = std::max<std::int64_t>(alpha.start_index() + 64, 1000);
    const auto cls = weights::classify(alpha, window, 1e-9);
    return cls.ratio_limit_ok;
}

bool shift_limit_ok(const ShiftOperator& op) {
    if (op.unilateral())
        return true;
    const std::int64_t end = 4096;
    const std::int64_t mid = 2048;
    const double dev_end = std::fabs(std::abs(op.r().at(end)) - 1.0);
    const double dev_mid = std::fabs(std::abs(op.r().at(mid)) - 1.0);
    return dev_end <= std::max(1e-9, 0.75 * dev_mid + 1e-9);
}

std::string hypothesis_diagnostic(const ShiftOperator& op) {
    std::string d;
    if (!ratio_hypothesis_ok(op))
        d += "weight ratio alpha_{n+1}/alpha_n does not approach 1 on the test window; ";
    if (!shift_limit_ok(op))
        d += "|r_n| does not approach 1 on the test window; ";
    return d;
}

} // namespace

const char* route_name(Route r) {
    switch (r) {
    case Route::series:
        return "series";
    case Route::telescoped:
        return "telescoped";
    case Route::matrix:
        return "matrix";
    }
    return "?";
}

TraceResult monomial_trace_series(const ShiftOperator& op, int m, double tol,
                                  std::int64_t n_max) {
    if (m <= 0)
        throw std::invalid_argument("monomial_trace_series: m must be positive");
    if (!(tol > 0.0))
        throw std::invalid_argument("monomial_trace_series: tol must be positive");

    TraceResult res;
    res.route = Route::series;
    res.diagnostic = hypothesis_diagnostic(op);
    const bool admissible = res.diagnostic.empty();

    const std::int64_t s = op.start_index();
    const auto& alpha = op.alpha();
    const auto& r = op.r();
    const bool unit = op.unilateral();

    // Ring buffers so each step costs one alpha evaluation and one r
    // evaluation; the arithmetic per term is identical to a fresh
    // commutator_diagonal(op, m, n) call.  A value with index j lives at
    // slot j mod (ring size); alpha(n) and alpha(n+m) need m+1 slots.
    // Slots advance by wrap counters (a modulo per term would dominate
    // the loop).
    const std::size_t mm = static_cast<std::size_t>(m);
    const std::size_t ring = mm + 1;
    std::vector<double> alpha_ring(ring, 0.0);
    std::vector<double> r2_ring(unit ? 0 : mm, 0.0);
    std::vector<double> up_ring(ring, 0.0); // power_diagonal values

    for (std::int64_t j = s; j < s + m; ++j)
        alpha_ring[static_cast<std::size_t>(j % (m + 1))] = alpha.at(j);
    if (!unit)
        for (std::int64_t j = s; j < s + m; ++j)
            r2_ring[static_cast<std::size_t>(j % m)] = std::norm(r.at(j));

    auto wrap_of = [](std::int64_t v, std::size_t len) {
        return static_cast<std::size_t>(((v % static_cast<std::int64_t>(len)) +
                                         static_cast<std::int64_t>(len)) %
                                        static_cast<std::int64_t>(len));
    };
    std::size_t slot_n = wrap_of(s, ring);          // n mod (m+1)
    std::size_t slot_np = wrap_of(s + m, ring);     // (n+m) mod (m+1)
    std::size_t slot_old = wrap_of(s - m, ring);    // (n-m) mod (m+1)
    std::size_t r2_head = unit ? 0 : wrap_of(s, mm); // n mod m

    CompensatedSum sum;
    std::int64_t last_nonzero = s - 1;
    std::int64_t block = std::max<std::int64_t>(64, 8 * m + s);
    std::int64_t terms = 0;
    double prev_partial = 0.0;
    bool have_prev = false;

    std::int64_t n = s;
    while (true) {
        const std::int64_t block_end_terms = std::min(terms + block, n_max);
        for (; terms < block_end_terms; ++terms, ++n) {
            const double a_n = alpha_ring[slot_n];
            const double a_nm = alpha.at(n + m);
            alpha_ring[slot_np] = a_nm;

            double up = a_nm / a_n;
            if (!unit) {
                double prod = 1.0;
                std::size_t idx = r2_head; // ascending i = n .. n+m-1
                for (int i = 0; i < m; ++i) {
                    prod *= r2_ring[idx];
                    if (++idx == mm)
                        idx = 0;
                }
                up = prod * up;
                // index n leaves the window, index n+m enters the same slot
                r2_ring[r2_head] = std::norm(r.at(n + m));
                if (++r2_head == mm)
                    r2_head = 0;
            }

            double term = up;
            if (n - m >= s)
                term -= up_ring[slot_old];
            up_ring[slot_n] = up;

            if (++slot_n == ring)
                slot_n = 0;
            if (++slot_np == ring)
                slot_np = 0;
            if (++slot_old == ring)
                slot_old = 0;

            if (term != 0.0)
                last_nonzero = n;
            sum.add(term);
        }

        const double partial = sum.value();
        if (have_prev) {
            res.tail_estimate = std::fabs(partial - prev_partial);
            if (res.tail_estimate < tol) {
                res.value = partial;
                res.converged = admissible;
                if (!admissible)
                    res.diagnostic += "value untrusted: theorem hypotheses fail";
                res.partial_terms_used = std::max<std::int64_t>(0, last_nonzero - s + 1);
                return res;
            }
        }
        if (terms >= n_max) {
            res.value = partial;
            res.converged = false;
            res.diagnostic += "term cap " + std::to_string(n_max) +
                              " reached with tail estimate " + std::to_string(res.tail_estimate) +
                              " >= tol";
            res.partial_terms_used = std::max<std::int64_t>(0, last_nonzero - s + 1);
            return res;
        }
        prev_partial = partial;
        have_prev = true;
        block = terms; // double the partial-sum length
    }
}

double telescoped_partial(const ShiftOperator& op, int m, std::int64_t N) {
    if (m <= 0)
        throw std::invalid_argument("telescoped_partial: m must be positive");
    if (N < op.start_index() + m)
        throw std::invalid_argument("telescoped_partial: window must reach start_index + m");
    CompensatedSum sum;
    for (std::int64_t n = N - m + 1; n <= N; ++n)
        sum.add(operators::power_diagonal(op, m, n));
    return sum.value();
}

TraceResult monomial_trace_telescoped(const ShiftOperator& op, int m, double tol) {
    if (m <= 0)
        throw std::invalid_argument("monomial_trace_telescoped: m must be positive");
    if (!(tol > 0.0))
        throw std::invalid_argument("monomial_trace_telescoped: tol must be positive");

    TraceResult res;
    res.route = Route::telescoped;
    res.diagnostic = hypothesis_diagnostic(op);
    const bool admissible = res.diagnostic.empty();

    const std::int64_t cap = std::int64_t{1} << 46;
    std::int64_t N = std::max<std::int64_t>({1024, 64 * m, 8 * (op.start_index() + m)});
    double prev = telescoped_partial(op, m, N);
    while (true) {
        N *= 2;
        const double cur = telescoped_partial(op, m, N);
        res.tail_estimate = std::fabs(cur - prev);
        if (res.tail_estimate < tol) {
            res.value = cur;
            res.converged = admissible;
            if (!admissible)
                res.diagnostic += "value untrusted: theorem hypotheses fail";
            res.partial_terms_used = N;
            return res;
        }
        if (N >= cap) {
            res.value = cur;
            res.converged = false;
            res.diagnostic += "boundary-sum cap reached with tail estimate >= tol";
            res.partial_terms_used = N;
            return res;
        }
        prev = cur;
    }
}

double series_partial_sum(const ShiftOperator& op, int m, std::int64_t N) {
    if (N < op.start_index())
        throw std::invalid_argument("series_partial_sum: N below start_index");
    CompensatedSum sum;
    for (std::int64_t n = op.start_index(); n <= N; ++n)
        sum.add(operators::commutator_diagonal(op, m, n));
    return sum.value();
}

TraceResult bilinear_form(const PowerSeries& f, const PowerSeries& g,
                          const ShiftOperator& op, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("bilinear_form: tol must be positive");
    TraceResult res;
    res.route = Route::telescoped;
    res.converged = true;

    const std::int64_t top = std::min(f.degree(), g.degree());
    double weight_sum = 0.0;
    for (std::int64_t j = 1; j <= top; ++j)
        weight_sum += std::abs(f.coeff(j) * std::conj(g.coeff(j)));
    if (weight_sum == 0.0)
        return res; // nothing survives the diagonal

    const double tol_j = tol / (2.0 * weight_sum);
    ComplexCompensatedSum acc;
    CompensatedSum tail;
    for (std::int64_t j = 1; j <= top; ++j) {
        const Complex c = f.coeff(j) * std::conj(g.coeff(j));
        if (c == Complex(0.0, 0.0))
            continue;
        const TraceResult tr = monomial_trace_telescoped(op, static_cast<int>(j), tol_j);
        acc.add(c * tr.value);
        tail.add(std::abs(c) * tr.tail_estimate);
        res.partial_terms_used = std::max(res.partial_terms_used, tr.partial_terms_used);
        if (!tr.converged) {
            res.converged = false;
            if (res.diagnostic.empty())
                res.diagnostic = "monomial trace at degree " + std::to_string(j) +
                                 " did not converge: " + tr.diagnostic;
        }
    }
    res.value = acc.value();
    res.tail_estimate = tail.value();
    return res;
}

Complex dirichlet_oracle(const PowerSeries& f, const PowerSeries& g) {
    return series::dirichlet_form(f, g);
}

Complex matrix_trace_check(const PowerSeries& f, const PowerSeries& g,
                           const ShiftOperator& op, std::int64_t N) {
    if (f.is_zero() || g.is_zero())
        return {};
    const std::int64_t dsum = f.degree() + g.degree();
    if (N <= 4 * dsum)
        throw std::invalid_argument("matrix_trace_check: need N > 4 (deg f + deg g)");

    const auto F = operators::truncate_polynomial_calculus(f, op, false, N);
    const auto Gd = operators::truncate_polynomial_calculus(g, op, true, N);
    const auto C = Gd.multiply(F).subtract(F.multiply(Gd));
    const auto diag = C.diagonal();

    const std::int64_t row_end = N - dsum - 1;
    ComplexCompensatedSum sum;
    for (std::int64_t n = op.start_index(); n <= row_end; ++n)
        sum.add(diag[static_cast<std::size_t>(n)]);
    return sum.value();
}

SignScan sign_pattern_scan(const ShiftOperator& op, int m, std::int64_t N) {
    if (m <= 0)
        throw std::invalid_argument("sign_pattern_scan: m must be positive");
    SignScan sc;
    bool first = true;
    for (std::int64_t n = op.start_index(); n <= N; ++n) {
        const double t = operators::commutator_diagonal(op, m, n);
        if (first || t < sc.min_term) {
            sc.min_term = t;
            sc.argmin = n;
        }
        if (first || t > sc.max_term) {
            sc.max_term = t;
            sc.argmax = n;
        }
        first = false;
        if (t < 0.0)
            ++sc.negative_terms;
        else if (t > 0.0)
            ++sc.positive_terms;
    }
    return sc;
}

} // namespace disktrace::trace
