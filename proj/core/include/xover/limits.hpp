#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "xover/error.hpp"

namespace xover {

/// Enumeration bounds. Exceeding one raises BudgetExceeded; nothing is ever truncated.
struct Limits {
  /// Total-space size for any whole-space construction (Hamming graphs, closures).
  std::uint64_t max_space = std::uint64_t{1} << 20;
  /// Total-space size for generating a convexity (intersection closure of all transit sets).
  std::uint64_t max_convexity_space = std::uint64_t{1} << 8;
  /// Carrier size of an explicit transit table (tables are dense N x N bitsets).
  std::size_t max_table_carrier = 512;
  /// Carrier size for the six-variable axioms A4, AX and AX'.
  std::size_t max_six_variable_carrier = 64;
  /// Ground-set size for the 3^|E| covector scan.
  std::size_t max_ground_size = 10;
};

inline void require_within(const std::string& what, std::uint64_t size, std::uint64_t bound) {
  if (size > bound) throw BudgetExceeded(what, size, bound);
}

}  // namespace xover
