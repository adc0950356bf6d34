#pragma once

// Words over per-position alphabets and their specification.
//
// Words are compared lexicographically on letter indices with coordinate 1
// most significant. The same order indexes the whole space: `index_of` and
// `word_at` are the mixed-radix rank in that order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace xover {

using Letter = std::uint16_t;

class Word;

class AlphabetSpec {
 public:
  /// Sizes a_1..a_n. Requires n >= 1, every a_i in [2, 65536], and a total
  /// space size that fits in 64 bits.
  explicit AlphabetSpec(std::vector<std::uint32_t> sizes);

  static AlphabetSpec binary(std::size_t n);
  static AlphabetSpec uniform(std::size_t n, std::uint32_t a);

  /// Parses "2,2,3" or the uniform shorthand "2^5".
  static AlphabetSpec parse(std::string_view text);

  std::size_t length() const noexcept { return impl_->sizes.size(); }
  std::uint32_t alphabet_size(std::size_t position) const { return impl_->sizes.at(position); }
  const std::vector<std::uint32_t>& sizes() const noexcept { return impl_->sizes; }

  bool is_binary() const noexcept { return impl_->binary; }
  /// True when every a_i <= 10, i.e. words print as plain digit strings.
  bool is_compact() const noexcept { return impl_->compact; }

  std::uint64_t total_size() const noexcept { return impl_->total; }
  /// Place value of `position` in the canonical index.
  std::uint64_t weight(std::size_t position) const { return impl_->weights.at(position); }

  std::uint64_t index_of(const Word& w) const;
  Word word_at(std::uint64_t index) const;

  /// Canonical text: "2^n" for uniform alphabets, otherwise the size list.
  std::string to_string() const;

  friend bool operator==(const AlphabetSpec& a, const AlphabetSpec& b) noexcept {
    return a.impl_ == b.impl_ || a.impl_->sizes == b.impl_->sizes;
  }

 private:
  struct Impl {
    std::vector<std::uint32_t> sizes;
    std::vector<std::uint64_t> weights;
    std::uint64_t total = 1;
    bool binary = true;
    bool compact = true;
  };
  std::shared_ptr<const Impl> impl_;
};

class Word {
 public:
  using Letters = boost::container::small_vector<Letter, 24>;

  Word(AlphabetSpec spec, std::span<const Letter> letters);
  Word(AlphabetSpec spec, std::initializer_list<Letter> letters)
      : Word(std::move(spec), std::span<const Letter>(letters.begin(), letters.size())) {}

  /// Digit string ("0110") for compact specs, otherwise comma-separated ("0,2,11").
  /// Comma form is accepted for any spec.
  static Word parse(const AlphabetSpec& spec, std::string_view text);
  static Word zeros(const AlphabetSpec& spec);
  static Word filled(const AlphabetSpec& spec, Letter letter);

  const AlphabetSpec& spec() const noexcept { return spec_; }
  std::size_t length() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return {letters_.data(), letters_.size()}; }

  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_ && a.spec_ == b.spec_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  struct Unchecked {};
  Word(AlphabetSpec spec, Letters letters, Unchecked)
      : spec_(std::move(spec)), letters_(std::move(letters)) {}

  AlphabetSpec spec_;
  Letters letters_;

  friend class AlphabetSpec;
};

/// Throws IncompatibleWords unless both words share one specification.
void require_compatible(const Word& x, const Word& y);

/// Number of positions at which x and y differ.
std::size_t hamming_distance(const Word& x, const Word& y);

/// Positions (0-based, increasing) at which x and y differ.
std::vector<std::size_t> differing_positions(const Word& x, const Word& y);

/// Exact sum_{i=0}^{h} C(n, i); throws Error on 64-bit overflow.
std::uint64_t phi(unsigned h, unsigned n);

/// Exact C(n, i), 0 when i > n; throws Error on 64-bit overflow.
std::uint64_t binomial(unsigned n, unsigned i);

}  // namespace xover
