#pragma once

// k-point crossover: recombination sets, their recursion and closure, parent
// recovery, medians and lexicographic geodesics.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "xover/alphabet.hpp"
#include "xover/limits.hpp"
#include "xover/word_set.hpp"

namespace xover {

enum class FirstParent { first, second };

/// Cut points for one offspring. A cut at position i (1-based, in [1, n-1])
/// separates letter i from letter i+1; segments alternate between parents,
/// starting with `order`.
struct CutSet {
  std::vector<std::size_t> positions;
  FirstParent order = FirstParent::first;
};

Word recombine(const Word& x, const Word& y, const CutSet& cuts);

/// Offspring of x and y with the roles of the parents exchanged segment by
/// segment: x x_I y maps to y x_I x. On the positions where x and y differ
/// every letter is replaced by the other parent's letter.
Word swap_parents(const Word& w, const Word& x, const Word& y);

struct RSetResult {
  WordSet members;
  Word first_parent;
  Word second_parent;
  unsigned k = 0;
};

/// R_k(x, y): every offspring obtainable with at most k cuts and either parent
/// first. Requires k >= 1.
RSetResult rset(unsigned k, const Word& x, const Word& y);

/// R_k built from R_{k-1} as the union of R_1(x, z) and R_1(z, y) over z in
/// R_{k-1}(x, y), recursing down to R_1. Requires k >= 2.
RSetResult rset_recursive(unsigned k, const Word& x, const Word& y);

/// |R_k(x, y)| as a function of t = d(x, y): 2^t for t <= k, else 2 Phi_k(t - 1).
std::uint64_t rset_size_formula(unsigned k, unsigned t);

/// Least fixed point of S -> union of R_k(u, v) over u, v in S, from S = {x, y}.
/// Guarded by limits.max_space.
WordSet closure(unsigned k, const Word& x, const Word& y, const Limits& limits = {});

/// True iff R_k(u, v) is contained in R_k(x, y) for all u, v in R_k(x, y),
/// i.e. iff R_k(x, y) equals its closure.
bool is_closed(unsigned k, const Word& x, const Word& y);

/// The family of all intersections of closed transit sets over the whole space,
/// including the empty set and the whole space. Sorted by size, then canonically.
/// Guarded by limits.max_convexity_space.
std::vector<WordSet> generate_convexity(unsigned k, const AlphabetSpec& spec,
                                        const Limits& limits = {});

/// All unordered pairs {u, v} of members of s (u <= v) with R_k(u, v) = s.
/// Empty when s is not a k-point transit set.
std::vector<std::pair<Word, Word>> find_parents(unsigned k, const WordSet& s);

/// Coordinate-wise majority. Binary words only.
Word median(const Word& x, const Word& y, const Word& z);

/// Vertices on the lexicographically minimal and maximal shortest x,y-paths of
/// the hypercube. Paths compare by their vertex sequences, each vertex labeled
/// relative to x (z xor x), as in the partial-cube labeling rooted at x.
/// Binary words only.
WordSet lex_extreme_path_vertices(const Word& x, const Word& y);

/// Every shortest x,y-path of the hypercube as a vertex sequence, in ascending
/// order under the same x-relative comparison. There are d(x,y)! of them;
/// guarded by `max_paths`.
std::vector<std::vector<Word>> lex_ordered_geodesics(const Word& x, const Word& y,
                                                     std::size_t max_paths = 40320);

/// Number of maximal constant runs of w after relabeling so that `reference`
/// becomes all zeros. Binary words only.
std::size_t block_count(const Word& w, const Word& reference);

}  // namespace xover
