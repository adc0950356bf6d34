#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "xover/error.hpp"

namespace {

using namespace xover;
using namespace xover::testing;

Word w(const std::string& text) { return Word::parse(AlphabetSpec::binary(text.size()), text); }

TEST(Recombine, AlternatesSegmentsAtCuts) {
  const auto x = w("000000");
  const auto y = w("111111");
  EXPECT_EQ(recombine(x, y, {{2, 4}, FirstParent::first}).to_string(), "001100");
  EXPECT_EQ(recombine(x, y, {{2, 4}, FirstParent::second}).to_string(), "110011");
  EXPECT_EQ(recombine(x, y, {{}, FirstParent::second}).to_string(), "111111");
  EXPECT_EQ(recombine(x, y, {{5}, FirstParent::first}).to_string(), "000001");
}

TEST(Recombine, RejectsBadCutSets) {
  const auto x = w("0000");
  const auto y = w("1111");
  EXPECT_THROW(recombine(x, y, {{0}}), PreconditionError);
  EXPECT_THROW(recombine(x, y, {{4}}), PreconditionError);
  EXPECT_THROW(recombine(x, y, {{2, 2}}), PreconditionError);
  EXPECT_THROW(recombine(x, y, {{3, 1}}), PreconditionError);
}

TEST(RSet, KnownSizes) {
  EXPECT_EQ(rset(2, w("0000"), w("1111")).members.size(), 14u);
  EXPECT_EQ(rset(2, w("00000"), w("11111")).members.size(), 22u);
  EXPECT_EQ(rset(1, w("000"), w("111")).members.size(), 6u);
  EXPECT_EQ(strings(rset(1, w("0"), w("1")).members), (std::set<std::string>{"0", "1"}));
  EXPECT_EQ(strings(rset(3, w("0101"), w("0101")).members), (std::set<std::string>{"0101"}));
  EXPECT_THROW(rset(0, w("01"), w("10")), PreconditionError);
}

TEST(RSet, MatchesEveryCutSetOnBinaryWords) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto words = all_words(AlphabetSpec::binary(n));
    for (const auto& x : words) {
      for (const auto& y : words) {
        for (unsigned k = 1; k <= 4; ++k) {
          ASSERT_EQ(strings(rset(k, x, y).members), brute_rset(k, x, y))
              << "k=" << k << " x=" << x.to_string() << " y=" << y.to_string();
        }
      }
    }
  }
}

TEST(RSet, MatchesEveryCutSetOnMixedAlphabets) {
  auto rng = seeded(1);
  const auto spec = AlphabetSpec::parse("3,2,4,3,2,3,5");
  for (int i = 0; i < 300; ++i) {
    const auto x = random_word(rng, spec);
    const auto y = random_word(rng, spec);
    for (unsigned k = 1; k <= 4; ++k) {
      ASSERT_EQ(strings(rset(k, x, y).members), brute_rset(k, x, y));
    }
  }
}

TEST(RSet, IsSymmetricAndSwapInvariant) {
  auto rng = seeded(2);
  const auto spec = AlphabetSpec::binary(12);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_word(rng, spec);
    const auto y = random_word(rng, spec);
    const unsigned k = 1 + i % 5;
    const auto r = rset(k, x, y).members;
    ASSERT_EQ(r, rset(k, y, x).members);
    for (const auto& z : r) {
      const auto s = swap_parents(z, x, y);
      ASSERT_TRUE(r.contains(s));
      ASSERT_EQ(swap_parents(s, x, y), z);
      ASSERT_EQ(hamming_distance(z, s), hamming_distance(x, y));
    }
  }
}

TEST(RSet, SizeFormula) {
  EXPECT_EQ(rset_size_formula(2, 4), 14u);
  EXPECT_EQ(rset_size_formula(2, 5), 22u);
  EXPECT_EQ(rset_size_formula(3, 3), 8u);
  auto rng = seeded(3);
  for (int i = 0; i < 200; ++i) {
    const auto spec = AlphabetSpec::binary(14);
    const auto x = random_word(rng, spec);
    const auto y = random_word(rng, spec);
    const unsigned k = 1 + i % 6;
    const auto t = static_cast<unsigned>(hamming_distance(x, y));
    std::uint64_t expected = 0;
    if (t <= k) {
      expected = std::uint64_t{1} << t;
    } else {
      for (unsigned j = 0; j <= k; ++j) expected += 2 * pascal_binomial(t - 1, j);
    }
    ASSERT_EQ(rset(k, x, y).members.size(), expected);
    ASSERT_EQ(rset_size_formula(k, t), expected);
  }
}

TEST(RSet, RecursionOnLongerWords) {
  auto rng = seeded(4);
  for (const auto* text : {"2^11", "3,2,3,2,3,2,3"}) {
    const auto spec = AlphabetSpec::parse(text);
    for (int i = 0; i < 60; ++i) {
      const auto x = random_word(rng, spec);
      const auto y = random_word(rng, spec);
      for (unsigned k = 2; k <= 5; ++k) {
        ASSERT_EQ(rset_recursive(k, x, y).members, rset(k, x, y).members);
      }
    }
  }
  EXPECT_THROW(rset_recursive(1, w("01"), w("10")), PreconditionError);
}

TEST(Closure, MatchesNaiveFixpoint) {
  for (const auto* text : {"2^4", "3,3", "2,3,2"}) {
    const auto words = all_words(AlphabetSpec::parse(text));
    for (const auto& x : words) {
      for (const auto& y : words) {
        for (unsigned k = 1; k <= 2; ++k) {
          const auto c = closure(k, x, y);
          ASSERT_EQ(strings(c), brute_closure(k, x, y));
          ASSERT_EQ(is_closed(k, x, y), c == rset(k, x, y).members);
        }
      }
    }
  }
}

TEST(Closure, RespectsBudget) {
  const auto spec = AlphabetSpec::binary(12);
  Limits tight;
  tight.max_space = 1000;
  EXPECT_THROW(closure(1, Word::zeros(spec), Word::filled(spec, 1), tight), BudgetExceeded);
}

TEST(Convexity, FamilyIsIntersectionClosedAndConvex) {
  const auto spec = AlphabetSpec::binary(3);
  const auto family = generate_convexity(1, spec);
  ASSERT_FALSE(family.empty());
  EXPECT_TRUE(family.front().empty());
  EXPECT_EQ(family.back().size(), spec.total_size());
  auto has = [&](const WordSet& s) { return std::find(family.begin(), family.end(), s) != family.end(); };
  for (const auto& a : family) {
    for (const auto& b : family) ASSERT_TRUE(has(set_intersection(a, b)));
    for (const auto& u : a) {
      for (const auto& v : a) ASSERT_TRUE(rset(1, u, v).members.is_subset_of(a));
    }
  }
  for (const auto& x : all_words(spec)) {
    for (const auto& y : all_words(spec)) ASSERT_TRUE(has(closure(1, x, y)));
  }
  Limits tight;
  tight.max_convexity_space = 8;
  EXPECT_THROW(generate_convexity(1, AlphabetSpec::binary(4), tight), BudgetExceeded);
}

TEST(Parents, RecoveredFromLargeSets) {
  const auto x = w("001011");
  const auto y = w("110100");
  const auto parents = find_parents(2, rset(2, x, y).members);
  ASSERT_EQ(parents.size(), 1u);
  EXPECT_EQ(parents[0], std::pair(x, y));
  // Full intervals have several generating pairs.
  EXPECT_EQ(find_parents(2, rset(2, w("000"), w("111")).members).size(), 4u);
  EXPECT_TRUE(find_parents(1, interval(w("000"), w("011"))).size() == 2);
  WordSet odd(AlphabetSpec::binary(3), std::vector<std::uint64_t>{0, 7, 1});
  EXPECT_TRUE(find_parents(1, odd).empty());
}

TEST(Median, IsCoordinateMajority) {
  EXPECT_EQ(median(w("0011"), w("0101"), w("1001")).to_string(), "0001");
  const auto spec = AlphabetSpec::parse("3,3");
  EXPECT_THROW(median(Word::zeros(spec), Word::zeros(spec), Word::zeros(spec)), PreconditionError);
}

// Labels relative to x, compared as strings.
std::vector<std::string> relative(const std::vector<Word>& path, const Word& x) {
  std::vector<std::string> out;
  for (const auto& z : path) {
    std::string s;
    for (std::size_t i = 0; i < z.length(); ++i) s += z[i] == x[i] ? '0' : '1';
    out.push_back(s);
  }
  return out;
}

TEST(LexPaths, ExtremesMatchSortedGeodesics) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto words = all_words(AlphabetSpec::binary(n));
    for (const auto& x : words) {
      for (const auto& y : words) {
        const auto paths = lex_ordered_geodesics(x, y);
        std::uint64_t factorial = 1;
        for (std::size_t i = 2; i <= hamming_distance(x, y); ++i) factorial *= i;
        ASSERT_EQ(paths.size(), factorial);
        ASSERT_TRUE(std::is_sorted(paths.begin(), paths.end(), [&](const auto& a, const auto& b) {
          return relative(a, x) < relative(b, x);
        }));
        std::vector<Word> ends(paths.front());
        ends.insert(ends.end(), paths.back().begin(), paths.back().end());
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        const auto lex = lex_extreme_path_vertices(x, y);
        ASSERT_EQ(lex, WordSet(x.spec(), ends));
        ASSERT_EQ(lex, rset(1, x, y).members);
      }
    }
  }
}

TEST(LexPaths, GeodesicEnumerationIsGuarded) {
  const auto spec = AlphabetSpec::binary(9);
  EXPECT_THROW(lex_ordered_geodesics(Word::zeros(spec), Word::filled(spec, 1)), BudgetExceeded);
}

TEST(Blocks, CountsRunsRelativeToReference) {
  EXPECT_EQ(block_count(w("0000"), w("0000")), 1u);
  EXPECT_EQ(block_count(w("0110"), w("0000")), 3u);
  EXPECT_EQ(block_count(w("0110"), w("0110")), 1u);
  EXPECT_EQ(block_count(w("1010"), w("0000")), 4u);
  // Offspring of 0^n and 1^n with at most k cuts have at most k+1 blocks.
  const auto x = w("0000000");
  const auto y = w("1111111");
  for (unsigned k = 1; k <= 4; ++k) {
    for (const auto& z : all_words(x.spec())) {
      ASSERT_EQ(rset(k, x, y).members.contains(z), block_count(z, x) <= k + 1);
    }
  }
}

}  // namespace
