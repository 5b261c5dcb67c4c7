// Acceptance suite: runs the verification matrix criterion by criterion and
// prints one PASS/FAIL line per criterion (plus per-case rows).  Exit status
// is nonzero when any requested criterion fails.
//
// Usage: acceptance [--criterion K] [--quiet]

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "disktrace/verify.hpp"

int main(int argc, char** argv) {
    int only = 0;
    bool quiet = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--quiet") == 0)
            quiet = true;
        else {
            std::fprintf(stderr, "usage: acceptance [--criterion K] [--quiet]\n");
            return 2;
        }
    }

    int failures = 0;
    for (int k = 1; k <= 10; ++k) {
        if (only != 0 && k != only)
            continue;
        const auto rows = disktrace::verify::run_criterion(k);
        bool pass = true;
        double worst_margin = 0.0;
        std::string worst_label;
        for (const auto& r : rows) {
            if (!quiet) {
                std::printf("  [%s] c%02d %-55s measured=%-12.5g threshold=%-10.3g %s\n",
                            r.pass ? "ok" : "XX", r.criterion, r.label.c_str(), r.measured,
                            r.threshold, r.note.c_str());
            }
            if (!r.pass) {
                pass = false;
                const double margin = r.measured - r.threshold;
                if (margin > worst_margin) {
                    worst_margin = margin;
                    worst_label = r.label;
                }
            }
        }
        std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", k,
                    disktrace::verify::criterion_title(k), pass ? "" : " -- worst case: ",
                    pass ? "" : worst_label.c_str());
        std::fflush(stdout);
        if (!pass)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
