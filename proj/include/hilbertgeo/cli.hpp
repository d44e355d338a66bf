#pragma once

#include "hilbertgeo/errors.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbertgeo::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kNonConvergence = 3,
    kGeometry = 4,
};

/// Exit code for a library error.
int exit_code_for(ErrorCode code);

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbertgeo::cli
