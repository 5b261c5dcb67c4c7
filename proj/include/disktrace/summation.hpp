#ifndef DISKTRACE_SUMMATION_HPP
#define DISKTRACE_SUMMATION_HPP

#include <cmath>
#include <complex>

namespace disktrace {

/// Neumaier-compensated accumulator.  Deterministic for a fixed add order,
/// which is what keeps report payloads bit-identical across runs.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexCompensatedSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_, im_;
};

} // namespace disktrace

#endif
