#pragma once

#include <iosfwd>

namespace faqai::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kRejected = 2,
    kCyclic = 3,
    kCapExceeded = 4,
};

/// Runs one command line. The report goes to `out`, diagnostics to `err`; returns the exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}
