#include "xover/word_set.hpp"

#include <algorithm>
#include <iterator>

#include "xover/error.hpp"

namespace xover {

WordSet::WordSet(AlphabetSpec spec, std::vector<std::uint64_t> indices)
    : spec_(std::move(spec)), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.back() >= spec_.total_size()) {
    throw PreconditionError("word index outside the space");
  }
}

WordSet::WordSet(AlphabetSpec spec, std::span<const Word> words) : spec_(std::move(spec)) {
  indices_.reserve(words.size());
  for (const Word& w : words) indices_.push_back(spec_.index_of(w));
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

std::vector<Word> WordSet::words() const {
  std::vector<Word> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(spec_.word_at(i));
  return out;
}

bool WordSet::contains(const Word& w) const {
  return std::binary_search(indices_.begin(), indices_.end(), spec_.index_of(w));
}

void WordSet::insert(const Word& w) {
  auto index = spec_.index_of(w);
  auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (it == indices_.end() || *it != index) indices_.insert(it, index);
}

bool WordSet::is_subset_of(const WordSet& other) const {
  if (!(spec_ == other.spec_)) throw IncompatibleWords();
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

WordSet set_union(const WordSet& a, const WordSet& b) {
  if (!(a.spec() == b.spec())) throw IncompatibleWords();
  std::vector<std::uint64_t> out;
  std::set_union(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
                 std::back_inserter(out));
  return WordSet(a.spec(), std::move(out));
}

WordSet set_intersection(const WordSet& a, const WordSet& b) {
  if (!(a.spec() == b.spec())) throw IncompatibleWords();
  std::vector<std::uint64_t> out;
  std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(),
                        b.indices().end(), std::back_inserter(out));
  return WordSet(a.spec(), std::move(out));
}

WordSet interval(const Word& x, const Word& y) {
  auto diff = differing_positions(x, y);
  const auto& spec = x.spec();
  if (diff.size() >= 63) throw BudgetExceeded("interval", ~std::uint64_t{0}, std::uint64_t{1} << 62);
  std::uint64_t base = spec.index_of(x);
  // Offsets are added modulo 2^64; every final index lies inside the space.
  std::vector<std::uint64_t> delta(diff.size());
  for (std::size_t j = 0; j < diff.size(); ++j) {
    auto p = diff[j];
    delta[j] = std::uint64_t{y[p]} * spec.weight(p) - std::uint64_t{x[p]} * spec.weight(p);
  }
  std::vector<std::uint64_t> members;
  members.reserve(std::size_t{1} << diff.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << diff.size()); ++mask) {
    std::uint64_t offset = 0;
    for (std::size_t j = 0; j < diff.size(); ++j) {
      if (mask >> j & 1) offset += delta[j];
    }
    members.push_back(base + offset);
  }
  return WordSet(spec, std::move(members));
}

}  // namespace xover
