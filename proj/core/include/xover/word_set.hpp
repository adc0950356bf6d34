#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "xover/alphabet.hpp"

namespace xover {

/// A set of words over one AlphabetSpec, kept in canonical (lexicographic) order.
class WordSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Word;

    const_iterator() = default;
    const_iterator(const WordSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Word operator*() const { return set_->at(pos_); }
    const_iterator& operator++() { ++pos_; return *this; }
    const_iterator operator++(int) { auto old = *this; ++pos_; return old; }
    const_iterator& operator--() { --pos_; return *this; }
    const_iterator& operator+=(difference_type d) { pos_ += d; return *this; }
    friend const_iterator operator+(const_iterator it, difference_type d) { return it += d; }
    friend difference_type operator-(const const_iterator& a, const const_iterator& b) {
      return static_cast<difference_type>(a.pos_) - static_cast<difference_type>(b.pos_);
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const WordSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  explicit WordSet(AlphabetSpec spec) : spec_(std::move(spec)) {}
  /// Takes canonical indices in any order; duplicates are dropped.
  WordSet(AlphabetSpec spec, std::vector<std::uint64_t> indices);
  WordSet(AlphabetSpec spec, std::span<const Word> words);

  const AlphabetSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  /// Member number `i` in canonical order.
  Word at(std::size_t i) const { return spec_.word_at(indices_.at(i)); }
  std::vector<Word> words() const;
  /// Canonical indices (see AlphabetSpec::index_of), ascending.
  const std::vector<std::uint64_t>& indices() const noexcept { return indices_; }

  bool contains(const Word& w) const;
  void insert(const Word& w);

  bool is_subset_of(const WordSet& other) const;

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, indices_.size()}; }

  friend bool operator==(const WordSet& a, const WordSet& b) {
    return a.spec_ == b.spec_ && a.indices_ == b.indices_;
  }

 private:
  AlphabetSpec spec_;
  std::vector<std::uint64_t> indices_;
};

WordSet set_union(const WordSet& a, const WordSet& b);
WordSet set_intersection(const WordSet& a, const WordSet& b);

/// All z with z_i in {x_i, y_i} for every i; 2^d(x,y) words.
WordSet interval(const Word& x, const Word& y);

}  // namespace xover
