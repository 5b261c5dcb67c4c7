#include "disktrace/operators.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "disktrace/summation.hpp"

namespace disktrace::operators {

ShiftWeights ShiftWeights::unit() {
    return {};
}

ShiftWeights ShiftWeights::n_over_n_plus_1() {
    ShiftWeights r;
    r.id_ = ShiftFamilyId::n_over_n_plus_1;
    r.name_ = "n_over_n_plus_1";
    return r;
}

ShiftWeights ShiftWeights::one_minus_inv_sq() {
    ShiftWeights r;
    r.id_ = ShiftFamilyId::one_minus_inv_sq;
    r.name_ = "one_minus_inv_sq";
    return r;
}

ShiftWeights ShiftWeights::table(std::vector<Complex> values) {
    if (values.empty())
        throw std::invalid_argument("ShiftWeights::table: empty table");
    ShiftWeights r;
    r.id_ = ShiftFamilyId::table;
    r.name_ = "table";
    r.values_ = std::move(values);
    return r;
}

ShiftWeights ShiftWeights::parse(const std::string& spec) {
    if (spec == "unit")
        return unit();
    if (spec == "n_over_n_plus_1")
        return n_over_n_plus_1();
    if (spec == "one_minus_inv_sq")
        return one_minus_inv_sq();
    if (spec.rfind("custom:", 0) == 0) {
        const std::string path = spec.substr(7);
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("shift weights: cannot open table file '" + path + "'");
        std::vector<Complex> values;
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            double re = 0.0, im = 0.0;
            if (!(ls >> re))
                continue; // blank line
            ls >> im;     // optional imaginary part
            values.emplace_back(re, im);
        }
        auto r = table(std::move(values));
        r.name_ = spec;
        return r;
    }
    throw std::invalid_argument("unknown shift weight family '" + spec + "'");
}

Complex ShiftWeights::at(std::int64_t n) const {
    const double x = static_cast<double>(n);
    switch (id_) {
    case ShiftFamilyId::unit:
        return {1.0, 0.0};
    case ShiftFamilyId::n_over_n_plus_1:
        return {x / (x + 1.0), 0.0};
    case ShiftFamilyId::one_minus_inv_sq: {
        const double d = x + 2.0;
        return {1.0 - 1.0 / (d * d), 0.0};
    }
    case ShiftFamilyId::table: {
        const auto idx = static_cast<std::size_t>(
            std::min<std::int64_t>(std::max<std::int64_t>(n, 0),
                                   static_cast<std::int64_t>(values_.size()) - 1));
        return values_[idx];
    }
    }
    return {1.0, 0.0}; // unreachable
}

namespace {

void check_index(const ShiftOperator& op, std::int64_t n, const char* who) {
    if (n < op.start_index())
        throw std::domain_error(std::string(who) + ": basis index below start_index");
}

Complex r_product(const ShiftOperator& op, std::int64_t lo, std::int64_t hi) {
    Complex p(1.0, 0.0);
    for (std::int64_t i = lo; i <= hi; ++i)
        p *= op.r().at(i);
    return p;
}

double r2_product(const ShiftOperator& op, std::int64_t lo, std::int64_t hi) {
    double p = 1.0;
    for (std::int64_t i = lo; i <= hi; ++i)
        p *= std::norm(op.r().at(i));
    return p;
}

} // namespace

BasisAction shift_power_action(const ShiftOperator& op, int m, std::int64_t n) {
    if (m <= 0)
        throw std::invalid_argument("shift_power_action: m must be positive");
    check_index(op, n, "shift_power_action");
    BasisAction a;
    a.target = n + m;
    a.coefficient = op.unilateral() ? Complex(1.0, 0.0) : r_product(op, n, n + m - 1);
    return a;
}

BasisAction adjoint_power_action(const ShiftOperator& op, int m, std::int64_t n) {
    if (m <= 0)
        throw std::invalid_argument("adjoint_power_action: m must be positive");
    check_index(op, n, "adjoint_power_action");
    BasisAction a;
    a.target = n - m;
    if (n - m < op.start_index()) {
        a.coefficient = Complex(0.0, 0.0);
        return a;
    }
    const double ratio = op.alpha().at(n) / op.alpha().at(n - m);
    a.coefficient = op.unilateral() ? Complex(ratio, 0.0)
                                    : std::conj(r_product(op, n - m, n - 1)) * ratio;
    return a;
}

PowerSeries shift_apply(const ShiftOperator& op, const PowerSeries& f) {
    if (f.is_zero())
        return {};
    std::vector<Complex> out(static_cast<std::size_t>(f.degree()) + 2, Complex(0.0, 0.0));
    for (std::int64_t n = 0; n <= f.degree(); ++n)
        out[static_cast<std::size_t>(n) + 1] = op.r().at(n) * f.coeff(n);
    return PowerSeries(std::move(out));
}

PowerSeries adjoint_apply(const ShiftOperator& op, const PowerSeries& f) {
    const std::int64_t s = op.start_index();
    for (std::int64_t n = 0; n < s; ++n)
        if (f.coeff(n) != Complex(0.0, 0.0))
            throw std::domain_error("adjoint_apply: polynomial not in the space (support below start_index)");
    if (f.degree() < s + 1)
        return {};
    std::vector<Complex> out(static_cast<std::size_t>(f.degree()), Complex(0.0, 0.0));
    for (std::int64_t n = s; n + 1 <= f.degree(); ++n) {
        Complex c = op.alpha().ratio(n) * f.coeff(n + 1);
        if (!op.unilateral())
            c *= std::conj(op.r().at(n));
        out[static_cast<std::size_t>(n)] = c;
    }
    return PowerSeries(std::move(out));
}

std::pair<Complex, Complex> adjoint_pairing_check(const ShiftOperator& op,
                                                  const PowerSeries& f,
                                                  const PowerSeries& g) {
    const Complex lhs = series::inner_product(shift_apply(op, f), g, op.alpha());
    const Complex rhs = series::inner_product(f, adjoint_apply(op, g), op.alpha());
    return {lhs, rhs};
}

NormBoundCertificate norm_bound(const ShiftOperator& op, std::int64_t window_end) {
    const std::int64_t s = op.start_index();
    if (window_end < s)
        throw std::invalid_argument("norm_bound: window ends before start_index");
    double best = 0.0;
    for (std::int64_t n = s; n <= window_end; ++n) {
        const double v = op.alpha().ratio(n) * std::norm(op.r().at(n));
        if (v > best)
            best = v;
    }
    return {std::sqrt(best), window_end};
}

double power_diagonal(const ShiftOperator& op, int m, std::int64_t n) {
    const double ratio = op.alpha().at(n + m) / op.alpha().at(n);
    if (op.unilateral())
        return ratio;
    return r2_product(op, n, n + m - 1) * ratio;
}

double commutator_diagonal(const ShiftOperator& op, int m, std::int64_t n) {
    if (m <= 0)
        throw std::invalid_argument("commutator_diagonal: m must be positive");
    check_index(op, n, "commutator_diagonal");
    const double up = power_diagonal(op, m, n);
    if (n - m < op.start_index())
        return up;
    return up - power_diagonal(op, m, n - m);
}

BandedTruncation::BandedTruncation(std::int64_t dim) : dim_(dim) {
    if (dim <= 0)
        throw std::invalid_argument("BandedTruncation: dimension must be positive");
}

std::vector<Complex>& BandedTruncation::band(std::int64_t offset) {
    auto it = bands_.find(offset);
    if (it == bands_.end()) {
        const std::int64_t len = dim_ - std::llabs(offset);
        it = bands_.emplace(offset, std::vector<Complex>(static_cast<std::size_t>(len),
                                                         Complex(0.0, 0.0)))
                 .first;
    }
    return it->second;
}

Complex BandedTruncation::entry(std::int64_t row, std::int64_t col) const {
    if (row < 0 || col < 0 || row >= dim_ || col >= dim_)
        throw std::invalid_argument("BandedTruncation::entry: index out of range");
    const auto it = bands_.find(row - col);
    if (it == bands_.end())
        return {};
    return it->second[static_cast<std::size_t>(std::min(row, col))];
}

void BandedTruncation::add_entry(std::int64_t row, std::int64_t col, Complex v) {
    if (row < 0 || col < 0 || row >= dim_ || col >= dim_)
        throw std::invalid_argument("BandedTruncation::add_entry: index out of range");
    if (std::llabs(row - col) >= dim_)
        throw std::invalid_argument("BandedTruncation::add_entry: offset out of range");
    band(row - col)[static_cast<std::size_t>(std::min(row, col))] += v;
}

BandedTruncation BandedTruncation::multiply(const BandedTruncation& rhs) const {
    if (dim_ != rhs.dim_)
        throw std::invalid_argument("BandedTruncation::multiply: dimension mismatch");
    BandedTruncation out(dim_);
    for (const auto& [oa, ea] : bands_) {
        for (const auto& [ob, eb] : rhs.bands_) {
            const std::int64_t o = oa + ob;
            if (std::llabs(o) >= dim_)
                continue;
            auto& eo = out.band(o);
            const std::int64_t len = dim_ - std::llabs(o);
            for (std::int64_t j = 0; j < len; ++j) {
                const std::int64_t row = j + std::max<std::int64_t>(o, 0);
                const std::int64_t col = j + std::max<std::int64_t>(-o, 0);
                const std::int64_t k = row - oa; // = col + ob
                if (k < 0 || k >= dim_)
                    continue;
                const std::int64_t ja = std::min(row, k);
                const std::int64_t jb = std::min(k, col);
                if (ja < 0 || ja >= static_cast<std::int64_t>(ea.size()))
                    continue;
                if (jb < 0 || jb >= static_cast<std::int64_t>(eb.size()))
                    continue;
                eo[static_cast<std::size_t>(j)] += ea[static_cast<std::size_t>(ja)] *
                                                   eb[static_cast<std::size_t>(jb)];
            }
        }
    }
    return out;
}

BandedTruncation BandedTruncation::subtract(const BandedTruncation& rhs) const {
    if (dim_ != rhs.dim_)
        throw std::invalid_argument("BandedTruncation::subtract: dimension mismatch");
    BandedTruncation out(dim_);
    for (const auto& [o, e] : bands_) {
        auto& eo = out.band(o);
        for (std::size_t j = 0; j < e.size(); ++j)
            eo[j] += e[j];
    }
    for (const auto& [o, e] : rhs.bands_) {
        auto& eo = out.band(o);
        for (std::size_t j = 0; j < e.size(); ++j)
            eo[j] -= e[j];
    }
    return out;
}

std::vector<Complex> BandedTruncation::diagonal() const {
    std::vector<Complex> d(static_cast<std::size_t>(dim_), Complex(0.0, 0.0));
    const auto it = bands_.find(0);
    if (it != bands_.end())
        d = it->second;
    return d;
}

BandedTruncation truncate_polynomial_calculus(const PowerSeries& f, const ShiftOperator& op,
                                              bool dagger, std::int64_t dim) {
    if (f.is_zero())
        return BandedTruncation(dim);
    const std::int64_t s = op.start_index();
    if (dim <= f.degree() + s)
        throw std::invalid_argument("truncate_polynomial_calculus: dimension too small");
    BandedTruncation out(dim);
    for (std::int64_t d = 0; d <= f.degree(); ++d) {
        const Complex a = f.coeff(d);
        if (a == Complex(0.0, 0.0))
            continue;
        if (d == 0) {
            // identity on the subspace spanned by z^n, n >= start_index
            const Complex c = dagger ? std::conj(a) : a;
            for (std::int64_t n = s; n < dim; ++n)
                out.add_entry(n, n, c);
            continue;
        }
        if (!dagger) {
            for (std::int64_t n = s; n + d < dim; ++n) {
                const BasisAction act = shift_power_action(op, static_cast<int>(d), n);
                out.add_entry(act.target, n, a * act.coefficient);
            }
        } else {
            for (std::int64_t n = s + d; n < dim; ++n) {
                const BasisAction act = adjoint_power_action(op, static_cast<int>(d), n);
                out.add_entry(act.target, n, std::conj(a) * act.coefficient);
            }
        }
    }
    return out;
}

} // namespace disktrace::operators
