#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace xoverlab {

inline constexpr const char* kToolVersion = XOVERLAB_VERSION;

/// Runs one command line (without the program name). Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Invocations whose outputs are pinned by golden files.
struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};
const std::vector<GoldenCase>& golden_cases();

/// Runs `args` and returns stdout; throws std::runtime_error on a nonzero exit.
std::string capture(const std::vector<std::string>& args);

}  // namespace xoverlab
