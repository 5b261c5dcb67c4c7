#include "disktrace/series.hpp"

#include <cmath>
#include <stdexcept>

#include "disktrace/summation.hpp"

namespace disktrace::series {

namespace {

void check_membership(const PowerSeries& f, const weights::WeightSequence& w, const char* who) {
    for (std::int64_t n = 0; n < w.start_index(); ++n) {
        if (f.coeff(n) != Complex(0.0, 0.0))
            throw std::domain_error(std::string(who) +
                                    ": polynomial has support below the weight family's start index " +
                                    std::to_string(w.start_index()));
    }
}

} // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0))
        coeffs_.pop_back();
}

PowerSeries PowerSeries::monomial(std::int64_t n, Complex c) {
    if (n < 0)
        throw std::invalid_argument("PowerSeries::monomial: negative degree");
    if (c == Complex(0.0, 0.0))
        return {};
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0));
    v.back() = c;
    return PowerSeries(std::move(v));
}

Complex inner_product(const PowerSeries& f, const PowerSeries& g,
                      const weights::WeightSequence& w) {
    check_membership(f, w, "inner_product");
    check_membership(g, w, "inner_product");
    const std::int64_t top = std::min(f.degree(), g.degree());
    ComplexCompensatedSum acc;
    for (std::int64_t n = w.start_index(); n <= top; ++n)
        acc.add(f.coeff(n) * std::conj(g.coeff(n)) * w.at(n));
    return acc.value();
}

Complex dirichlet_form(const PowerSeries& f, const PowerSeries& g) {
    const std::int64_t top = std::min(f.degree(), g.degree());
    ComplexCompensatedSum acc;
    for (std::int64_t n = 1; n <= top; ++n)
        acc.add(static_cast<double>(n) * f.coeff(n) * std::conj(g.coeff(n)));
    return acc.value();
}

double norm(const PowerSeries& f, const weights::WeightSequence& w) {
    const Complex sq = inner_product(f, f, w);
    return std::sqrt(std::max(0.0, sq.real()));
}

PowerSeries rotate(const PowerSeries& f, double theta) {
    std::vector<Complex> out(f.coeffs());
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] *= std::polar(1.0, static_cast<double>(n) * theta);
    return PowerSeries(std::move(out));
}

Complex evaluate(const PowerSeries& f, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::int64_t n = f.degree(); n >= 0; --n)
        acc = acc * z + f.coeff(n);
    return acc;
}

} // namespace disktrace::series
