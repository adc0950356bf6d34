#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace xover {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two words (or a word and a set) do not share an alphabet specification.
class IncompatibleWords : public Error {
 public:
  IncompatibleWords() : Error("incompatible words") {}
};

/// A whole-space construction would exceed its configured enumeration bound.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t size, std::uint64_t bound)
      : Error("space too large: " + what + " has size " + std::to_string(size) +
              ", bound is " + std::to_string(bound)),
        size_(size),
        bound_(bound) {}

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t size_;
  std::uint64_t bound_;
};

/// Malformed text input. `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold by construction was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace xover
