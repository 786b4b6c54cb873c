#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pod2::cli {

/// Exit codes of the pod2 command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kClaimFailed = 3,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Manifest path: --manifest, else $POD2_MANIFEST, else the bundled catalog.
std::string default_manifest_path();

}  // namespace pod2::cli
