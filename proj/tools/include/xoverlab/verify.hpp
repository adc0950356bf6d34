#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xover/limits.hpp"

namespace xoverlab {

/// Zero means "use the suite's default".
struct VerifyOptions {
  unsigned max_n = 0;
  unsigned max_k = 0;
  unsigned t_min = 0;
  unsigned t_max = 0;
  std::uint64_t seed = 0;
  /// Directory of golden files for the determinism suite; empty skips the comparison.
  std::string golden_dir;
  xover::Limits limits;
};

struct Criterion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Criterion> criteria;
  /// Observations that are reported but do not fail the suite.
  std::vector<std::string> notes;

  bool passed() const;
};

/// sizes, recursion, closure, axioms, hamming, parents, partial-cube, vc, r2,
/// om, lex, determinism: one per acceptance criterion, in that order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

}  // namespace xoverlab
