#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tribo/catalog.hpp"

namespace tribo::cli {

enum ExitCode : int { kPass = 0, kUnexpectedFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). The catalog is a
/// parameter so tests can inject corrupted entries.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Catalog& catalog);

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err, Catalog::standard());
}

}  // namespace tribo::cli
