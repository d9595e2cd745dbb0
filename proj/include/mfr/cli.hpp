#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mfr::cli {

  enum ExitCode : int {
    ok           = 0,
    internal     = 1,
    validation   = 2,
    undecided    = 3,
    ore_failure  = 4,
    cap_exceeded = 5,
  };

  /// Runs the command line `args` (without the program name).
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace mfr::cli
