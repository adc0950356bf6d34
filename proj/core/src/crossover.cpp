#include "xover/crossover.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "xover/error.hpp"

namespace xover {

namespace {

void require_binary(const Word& w, const char* what) {
  if (!w.spec().is_binary()) throw PreconditionError(std::string(what) + " requires binary alphabet");
}

// Offspring enumeration on canonical indices. Cuts are only placed between
// consecutive *differing* positions; a cut between positions where the parents
// agree never changes the offspring, and distinct cut patterns over differing
// positions yield distinct offspring, so the output has no duplicates.
class OffspringEnumerator {
 public:
  OffspringEnumerator(const Word& x, const Word& y) {
    require_compatible(x, y);
    reset(x.spec(), x.spec().index_of(x), x.letters(), y.letters());
  }
  OffspringEnumerator() = default;

  // x and y as letter sequences over `spec`; `base` is the index of x.
  void reset(const AlphabetSpec& spec, std::uint64_t base, std::span<const Letter> x,
             std::span<const Letter> y) {
    base_ = base;
    delta_.clear();
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (x[p] != y[p]) {
        delta_.push_back(std::uint64_t{y[p]} * spec.weight(p) -
                         std::uint64_t{x[p]} * spec.weight(p));
      }
    }
  }

  std::size_t distance() const noexcept { return delta_.size(); }

  void collect(unsigned k, std::vector<std::uint64_t>& out) {
    out_ = &out;
    if (delta_.empty()) {
      out.push_back(base_);
      return;
    }
    walk(0, false, k, base_);
    walk(0, true, k, base_);
  }

 private:
  void walk(std::size_t j, bool from_second, unsigned cuts_left, std::uint64_t sum) {
    // Letter j comes from the current parent.
    if (from_second) sum += delta_[j];
    if (j + 1 == delta_.size()) {
      out_->push_back(sum);
      return;
    }
    walk(j + 1, from_second, cuts_left, sum);
    if (cuts_left > 0) walk(j + 1, !from_second, cuts_left - 1, sum);
  }

  std::uint64_t base_ = 0;
  std::vector<std::uint64_t> delta_;
  std::vector<std::uint64_t>* out_ = nullptr;
};

// Sorts indices known to be distinct. Small spaces go through a bitmap.
void sort_distinct(std::vector<std::uint64_t>& v, std::uint64_t total) {
  if (total > (std::uint64_t{1} << 16) || v.size() < 32) {
    std::sort(v.begin(), v.end());
    return;
  }
  thread_local std::vector<std::uint64_t> bits;
  bits.assign((total + 63) / 64, 0);
  for (auto i : v) bits[i >> 6] |= std::uint64_t{1} << (i & 63);
  std::size_t n = 0;
  for (std::size_t b = 0; b < bits.size(); ++b) {
    for (std::uint64_t word = bits[b]; word; word &= word - 1) {
      v[n++] = (b << 6) | static_cast<std::uint64_t>(std::countr_zero(word));
    }
  }
}

std::vector<std::uint64_t> offspring(unsigned k, const Word& x, const Word& y) {
  OffspringEnumerator e(x, y);
  std::vector<std::uint64_t> out;
  e.collect(k, out);
  sort_distinct(out, x.spec().total_size());
  return out;
}

WordSet sorted_set(const AlphabetSpec& spec, std::vector<std::uint64_t> sorted_unique) {
  // The constructor re-sorts; inputs here are already canonical, which is cheap to re-check.
  return WordSet(spec, std::move(sorted_unique));
}

}  // namespace

Word recombine(const Word& x, const Word& y, const CutSet& cuts) {
  require_compatible(x, y);
  const std::size_t n = x.length();
  std::size_t previous = 0;
  for (auto c : cuts.positions) {
    if (c < 1 || c + 1 > n) {
      throw PreconditionError("cut position " + std::to_string(c) + " outside [1, " +
                              std::to_string(n == 0 ? 0 : n - 1) + "]");
    }
    if (c <= previous) throw PreconditionError("cut positions must be strictly increasing");
    previous = c;
  }
  std::vector<Letter> letters(n);
  bool from_second = cuts.order == FirstParent::second;
  std::size_t next_cut = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Position i (0-based) is letter i+1; a cut at c sits between letters c and c+1.
    if (next_cut < cuts.positions.size() && cuts.positions[next_cut] == i) {
      from_second = !from_second;
      ++next_cut;
    }
    letters[i] = from_second ? y[i] : x[i];
  }
  return Word(x.spec(), letters);
}

Word swap_parents(const Word& w, const Word& x, const Word& y) {
  require_compatible(x, y);
  require_compatible(w, x);
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (x[i] == y[i]) continue;
    if (w[i] == x[i]) {
      letters[i] = y[i];
    } else if (w[i] == y[i]) {
      letters[i] = x[i];
    } else {
      throw PreconditionError("word " + w.to_string() + " is not in the interval of its parents");
    }
  }
  return Word(w.spec(), letters);
}

RSetResult rset(unsigned k, const Word& x, const Word& y) {
  if (k < 1) throw PreconditionError("k-point crossover needs k >= 1");
  return {sorted_set(x.spec(), offspring(k, x, y)), x, y, k};
}

RSetResult rset_recursive(unsigned k, const Word& x, const Word& y) {
  if (k < 2) throw PreconditionError("rset_recursive needs k >= 2");
  require_compatible(x, y);
  const auto& spec = x.spec();
  std::vector<std::uint64_t> level = offspring(1, x, y);
  for (unsigned j = 2; j <= k; ++j) {
    std::vector<std::uint64_t> next;
    for (auto zi : level) {
      Word z = spec.word_at(zi);
      auto left = offspring(1, x, z);
      auto right = offspring(1, z, y);
      next.insert(next.end(), left.begin(), left.end());
      next.insert(next.end(), right.begin(), right.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return {WordSet(spec, std::move(level)), x, y, k};
}

std::uint64_t rset_size_formula(unsigned k, unsigned t) {
  if (k < 1) throw PreconditionError("k-point crossover needs k >= 1");
  if (t <= k) {
    if (t >= 64) throw Error("2^" + std::to_string(t) + " overflows 64 bits");
    return std::uint64_t{1} << t;
  }
  return 2 * phi(k, t - 1);
}

WordSet closure(unsigned k, const Word& x, const Word& y, const Limits& limits) {
  require_compatible(x, y);
  const auto& spec = x.spec();
  require_within("closure space " + spec.to_string(), spec.total_size(), limits.max_space);
  const std::size_t n = spec.length();
  boost::dynamic_bitset<std::uint64_t> seen(spec.total_size());
  // Members as canonical indices plus a flat copy of their letters.
  std::vector<std::uint64_t> members;
  std::vector<Letter> letters;
  auto add = [&](std::uint64_t i) {
    if (seen.test_set(i)) return;
    members.push_back(i);
    auto w = spec.word_at(i);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  };
  add(spec.index_of(x));
  add(spec.index_of(y));
  OffspringEnumerator e;
  std::vector<std::uint64_t> scratch;
  // Every unordered pair of members is recombined exactly once: member i is
  // paired with all earlier members when it is reached.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      e.reset(spec, members[i], {letters.data() + i * n, n}, {letters.data() + j * n, n});
      scratch.clear();
      e.collect(k, scratch);
      for (auto z : scratch) add(z);
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(members.size());
  for (auto i = seen.find_first(); i != seen.npos; i = seen.find_next(i)) out.push_back(i);
  return WordSet(spec, std::move(out));
}

bool is_closed(unsigned k, const Word& x, const Word& y) {
  auto set = rset(k, x, y).members;
  auto words = set.words();
  const auto& idx = set.indices();
  std::vector<std::uint64_t> scratch;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      scratch.clear();
      OffspringEnumerator(words[i], words[j]).collect(k, scratch);
      for (auto zi : scratch) {
        if (!std::binary_search(idx.begin(), idx.end(), zi)) return false;
      }
    }
  }
  return true;
}

std::vector<WordSet> generate_convexity(unsigned k, const AlphabetSpec& spec,
                                        const Limits& limits) {
  require_within("convexity space " + spec.to_string(), spec.total_size(),
                 limits.max_convexity_space);
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  const auto total = spec.total_size();
  Limits inner = limits;
  inner.max_space = std::max<std::uint64_t>(inner.max_space, total);

  std::vector<Bits> generators;
  {
    std::set<Bits> unique;
    for (std::uint64_t a = 0; a < total; ++a) {
      for (std::uint64_t b = a; b < total; ++b) {
        Bits bits(total);
        const auto c = closure(k, spec.word_at(a), spec.word_at(b), inner);
        for (auto i : c.indices()) bits.set(i);
        unique.insert(std::move(bits));
      }
    }
    generators.assign(unique.begin(), unique.end());
  }

  std::set<Bits> family(generators.begin(), generators.end());
  family.insert(Bits(total).set());
  std::vector<Bits> frontier(family.begin(), family.end());
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& set : frontier) {
      for (const auto& g : generators) {
        Bits meet = set & g;
        if (family.insert(meet).second) next.push_back(std::move(meet));
      }
    }
    frontier = std::move(next);
  }

  std::vector<WordSet> out;
  out.reserve(family.size());
  for (const auto& bits : family) {
    std::vector<std::uint64_t> members;
    for (auto i = bits.find_first(); i != bits.npos; i = bits.find_next(i)) members.push_back(i);
    out.emplace_back(spec, std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const WordSet& a, const WordSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

std::vector<std::pair<Word, Word>> find_parents(unsigned k, const WordSet& s) {
  std::vector<std::pair<Word, Word>> out;
  auto words = s.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      auto candidate = offspring(k, words[i], words[j]);
      if (candidate == s.indices()) out.emplace_back(words[i], words[j]);
    }
  }
  return out;
}

Word median(const Word& x, const Word& y, const Word& z) {
  require_compatible(x, y);
  require_compatible(y, z);
  if (!x.spec().is_binary()) throw PreconditionError("median requires binary alphabet");
  std::vector<Letter> letters(x.length());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    letters[i] = static_cast<Letter>(x[i] + y[i] + z[i] >= 2);
  }
  return Word(x.spec(), letters);
}

WordSet lex_extreme_path_vertices(const Word& x, const Word& y) {
  require_compatible(x, y);
  require_binary(x, "lexicographic paths");
  // Labels are read relative to x, so every step sets one more bit: the
  // smallest path sets the rightmost remaining position first, the largest the
  // leftmost.
  auto maximal = differing_positions(x, y);
  std::vector<std::size_t> minimal(maximal.rbegin(), maximal.rend());

  WordSet out(x.spec());
  auto walk = [&](const std::vector<std::size_t>& order) {
    std::vector<Letter> letters(x.letters().begin(), x.letters().end());
    out.insert(x);
    for (auto p : order) {
      letters[p] ^= 1;
      out.insert(Word(x.spec(), letters));
    }
  };
  walk(minimal);
  walk(maximal);
  return out;
}

std::vector<std::vector<Word>> lex_ordered_geodesics(const Word& x, const Word& y,
                                                     std::size_t max_paths) {
  require_compatible(x, y);
  require_binary(x, "lexicographic paths");
  auto order = differing_positions(x, y);
  std::uint64_t count = 1;
  for (std::size_t i = 2; i <= order.size(); ++i) {
    count *= i;
    require_within("geodesic enumeration", count, max_paths);
  }
  std::vector<std::vector<Word>> paths;
  do {
    std::vector<Word> path{x};
    std::vector<Letter> letters(x.letters().begin(), x.letters().end());
    for (auto p : order) {
      letters[p] ^= 1;
      path.emplace_back(x.spec(), letters);
    }
    paths.push_back(std::move(path));
  } while (std::next_permutation(order.begin(), order.end()));
  // Relative to x, flipping a later position first gives the smaller path, so
  // ascending flip orders come out in descending path order.
  std::reverse(paths.begin(), paths.end());
  return paths;
}

std::size_t block_count(const Word& w, const Word& reference) {
  require_compatible(w, reference);
  require_binary(w, "block_count");
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    bool bit = w[i] != reference[i];
    if (i == 0 || bit != (w[i - 1] != reference[i - 1])) ++blocks;
  }
  return blocks;
}

}  // namespace xover
