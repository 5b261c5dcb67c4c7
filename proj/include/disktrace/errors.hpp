#ifndef DISKTRACE_ERRORS_HPP
#define DISKTRACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace disktrace {

/// Thrown when an adaptive computation hits its term/node cap before
/// reaching the requested tolerance.  Distinct from std::invalid_argument /
/// std::domain_error so callers can map "bad input" and "did not converge"
/// to different exit paths.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace disktrace

#endif
