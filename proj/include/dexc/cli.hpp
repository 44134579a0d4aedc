#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dexc::cli {

enum ExitCode : int {
    kOk = 0,
    kPropertyFailed = 1,
    kMalformedInput = 2,
    kDomainError = 3,
};

/// Runs one command. `args` excludes the program name. Results go to the
/// -o file or `out`; failures print one line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dexc::cli
