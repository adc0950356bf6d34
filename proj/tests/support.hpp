#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "xover/alphabet.hpp"
#include "xover/crossover.hpp"
#include "xover/word_set.hpp"

namespace xover::testing {

inline std::vector<Word> all_words(const AlphabetSpec& spec) {
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < spec.total_size(); ++i) out.push_back(spec.word_at(i));
  return out;
}

inline std::mt19937_64 seeded(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed + salt); }

inline Word random_word(std::mt19937_64& rng, const AlphabetSpec& spec) {
  std::uniform_int_distribution<std::uint64_t> pick(0, spec.total_size() - 1);
  return spec.word_at(pick(rng));
}

// Every offspring from every cut set with at most k cuts, both parent orders.
inline std::set<std::string> brute_rset(unsigned k, const Word& x, const Word& y) {
  const std::size_t n = x.length();
  std::set<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n > 0 ? n - 1 : 0)); ++mask) {
    CutSet cuts;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1) cuts.positions.push_back(i + 1);
    }
    if (cuts.positions.size() > k) continue;
    for (auto order : {FirstParent::first, FirstParent::second}) {
      cuts.order = order;
      out.insert(recombine(x, y, cuts).to_string());
    }
  }
  return out;
}

inline std::set<std::string> strings(const WordSet& s) {
  std::set<std::string> out;
  for (const auto& w : s) out.insert(w.to_string());
  return out;
}

// Naive fixpoint: keep adding R_k(u, v) for every pair until nothing changes.
inline std::set<std::string> brute_closure(unsigned k, const Word& x, const Word& y) {
  std::vector<Word> members{x};
  std::set<std::string> seen{x.to_string()};
  if (seen.insert(y.to_string()).second) members.push_back(y);
  for (bool grew = true; grew;) {
    grew = false;
    const auto current = members;
    for (const auto& u : current) {
      for (const auto& v : current) {
        for (const auto& w : rset(k, u, v).members) {
          if (seen.insert(w.to_string()).second) {
            members.push_back(w);
            grew = true;
          }
        }
      }
    }
  }
  return seen;
}

inline std::uint64_t pascal_binomial(unsigned n, unsigned i) {
  if (i > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next(r + 1, 1);
    for (unsigned j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = next;
  }
  return row[i];
}

}  // namespace xover::testing
