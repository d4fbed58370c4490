#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rae/oracle.hpp"

namespace rae::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kCapacity = 2,
  kOracleMismatch = 3,
  kUsage = 64,
};

// Test seam: oracle-check compares against these enumerators when set.
struct Hooks {
  BafEnumerator baf_enumerator;
  AafEnumerator aaf_enumerator;
};

// args excludes the program name. stdout-style data goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace rae::cli
