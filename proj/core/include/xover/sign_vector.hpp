#pragma once

// Sign vectors over {+, 0, -}^E, |E| <= 32.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xover/alphabet.hpp"

namespace xover {

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

class SignVector {
 public:
  static constexpr std::size_t kMaxLength = 32;

  /// The zero vector of length n.
  explicit SignVector(std::size_t n = 0);
  SignVector(std::size_t n, std::uint32_t positive, std::uint32_t negative);

  /// Parses a string over "+-0", e.g. "+0--".
  static SignVector parse(std::string_view text);

  std::size_t size() const noexcept { return n_; }
  Sign operator[](std::size_t e) const noexcept {
    return (pos_ >> e & 1) ? Sign::plus : (neg_ >> e & 1) ? Sign::minus : Sign::zero;
  }
  void set(std::size_t e, Sign s);

  std::uint32_t positive() const noexcept { return pos_; }
  std::uint32_t negative() const noexcept { return neg_; }
  std::uint32_t support() const noexcept { return pos_ | neg_; }
  std::size_t support_size() const noexcept;
  bool is_zero() const noexcept { return support() == 0; }
  bool full_support() const noexcept;

  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  /// Canonical order: lexicographic with - < 0 < +, element 1 most significant.
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept;

 private:
  std::size_t n_;
  std::uint32_t pos_ = 0;
  std::uint32_t neg_ = 0;
};

/// (X o Y)_e = X_e if X_e != 0, else Y_e.
SignVector compose(const SignVector& x, const SignVector& y);
SignVector negate(const SignVector& x);
/// D(X, Y) = {e : X_e = -Y_e != 0}, 0-based, increasing.
std::vector<std::size_t> separation(const SignVector& x, const SignVector& y);
/// Conformal order X <= Y: X_e in {0, Y_e} for every e.
bool conforms(const SignVector& x, const SignVector& y);

/// 1 -> +, 0 -> -. Binary words only.
SignVector word_to_sign(const Word& w);
/// Inverse of word_to_sign. Requires full support.
Word sign_to_word(const SignVector& x);

}  // namespace xover
