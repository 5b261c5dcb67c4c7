#ifndef DISKTRACE_VERIFY_HPP
#define DISKTRACE_VERIFY_HPP

#include <string>
#include <vector>

namespace disktrace::verify {

/// One line of the verification matrix.  `measured` is the worst observed
/// deviation for the case, compared against the pinned `threshold`.
struct CheckRow {
    int criterion = 0;
    std::string label;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;
};

/// Short human name for a criterion (1..10).
const char* criterion_title(int k);

/// Run one criterion of the verification matrix (1..10).
std::vector<CheckRow> run_criterion(int k);

/// The whole matrix, in order.
std::vector<CheckRow> run_all();

} // namespace disktrace::verify

#endif
