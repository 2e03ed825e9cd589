#pragma once

#include <iosfwd>

namespace orbitseq::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kInconsistent = 2,
};

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbitseq::cli
