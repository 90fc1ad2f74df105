#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcover::cli {

inline constexpr const char* kJsonSchema = "tcover.v1";

enum ExitCode : int { kOk = 0, kUsage = 1, kPrecondition = 2, kUnknown = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcover::cli
