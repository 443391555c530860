#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plutus::cli {

/// Runs one `plutus` invocation. `args` excludes the program name.
/// Exit codes: 0 success, 2 config/usage error, 3 data error, 4 runtime error, 5 compliance failure.
/// Failures print a single `error: <Category>: <detail>` line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plutus::cli
