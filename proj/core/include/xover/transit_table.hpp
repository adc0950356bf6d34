#pragma once

// Explicit transit functions R: X x X -> 2^X on a finite carrier.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "xover/alphabet.hpp"
#include "xover/graph.hpp"
#include "xover/limits.hpp"

namespace xover {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Dense table of R(x, y) for every ordered pair of carrier elements. Entries
/// start empty; symmetry and the other transit axioms are properties to check,
/// not assumptions.
class TransitTable {
 public:
  /// Carrier of named elements. Throws BudgetExceeded above limits.max_table_carrier.
  explicit TransitTable(std::vector<std::string> names, const Limits& limits = {});
  /// Carrier of words (all over one spec), named by their text form.
  explicit TransitTable(std::vector<Word> words, const Limits& limits = {});

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool has_words() const noexcept { return !words_.empty(); }
  const Word& word(std::size_t i) const { return words_.at(i); }
  const std::vector<Word>& words() const noexcept { return words_; }

  const ElementSet& entry(std::size_t x, std::size_t y) const { return entries_[x * size() + y]; }
  std::size_t entry_size(std::size_t x, std::size_t y) const { return sizes_[x * size() + y]; }
  bool contains(std::size_t x, std::size_t y, std::size_t z) const {
    return entries_[x * size() + y].test(z);
  }

  void set_entry(std::size_t x, std::size_t y, ElementSet members);
  /// Sets both R(x, y) and R(y, x).
  void set_symmetric(std::size_t x, std::size_t y, const ElementSet& members);
  void set_symmetric(std::size_t x, std::size_t y, const std::vector<std::size_t>& members);

  std::vector<std::size_t> members(std::size_t x, std::size_t y) const;

  /// x != y and |R(x, y)| = 2.
  bool adjacent(std::size_t x, std::size_t y) const { return x != y && entry_size(x, y) == 2; }

  ElementSet empty_set() const { return ElementSet(size()); }

  friend bool operator==(const TransitTable& a, const TransitTable& b) {
    return a.names_ == b.names_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Word> words_;
  std::vector<ElementSet> entries_;
  std::vector<std::uint32_t> sizes_;
};

/// R_k on the whole space of `spec`, carrier in canonical order.
TransitTable table_from_rset(unsigned k, const AlphabetSpec& spec, const Limits& limits = {});
/// The closure of R_k on the whole space of `spec`.
TransitTable table_from_closure(unsigned k, const AlphabetSpec& spec, const Limits& limits = {});
/// I_G of a connected graph. Carrier names are vertex labels when present,
/// vertex numbers otherwise.
TransitTable table_from_interval(const SimpleGraph& g, const Limits& limits = {});

/// The closure of an arbitrary table: for each pair, the least S containing x
/// and y with R(u, v) contained in S for all u, v in S.
TransitTable closure_table(const TransitTable& table);

/// Edges for the unordered pairs {x, y}, x < y, with |R(x, y)| = 2. Vertices
/// carry the table's words when it has them.
SimpleGraph underlying_graph(const TransitTable& table);

}  // namespace xover
