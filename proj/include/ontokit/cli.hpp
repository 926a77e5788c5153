#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ontokit::cli {

enum ExitCode : int { kSuccess = 0, kDiagnostics = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics and usage text to `err`. A file argument of `-` reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

struct Invocation {
  int exit_code = 0;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args, std::string_view stdin_text = {});

}  // namespace ontokit::cli
