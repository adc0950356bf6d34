#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "xover/error.hpp"
#include "xover/oriented_matroid.hpp"

namespace {

using namespace xover;
using namespace xover::testing;

SignVector sv(const char* text) { return SignVector::parse(text); }

std::vector<SignVector> all_sign_vectors(std::size_t n) {
  std::vector<SignVector> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    SignVector v(n);
    auto c = code;
    for (std::size_t e = n; e-- > 0; c /= 3) v.set(e, static_cast<Sign>(static_cast<int>(c % 3) - 1));
    out.push_back(v);
  }
  return out;
}

TEST(SignVector, ParseAndPrint) {
  const auto v = sv("+-0+");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], Sign::plus);
  EXPECT_EQ(v[1], Sign::minus);
  EXPECT_EQ(v[2], Sign::zero);
  EXPECT_EQ(v.to_string(), "+-0+");
  EXPECT_EQ(v.support_size(), 3u);
  EXPECT_FALSE(v.full_support());
  EXPECT_TRUE(sv("000").is_zero());
  EXPECT_THROW(sv("+x"), ParseError);
}

TEST(SignVector, CanonicalOrderPutsMinusFirst) {
  const auto all = all_sign_vectors(3);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(all.front().to_string(), "---");
  EXPECT_EQ(all[1].to_string(), "--0");
  EXPECT_LT(sv("0++"), sv("+--"));
}

TEST(SignVector, OperationsMatchDefinitions) {
  const auto all = all_sign_vectors(3);
  for (const auto& x : all) {
    EXPECT_EQ(negate(negate(x)), x);
    for (const auto& y : all) {
      const auto c = compose(x, y);
      std::vector<std::size_t> sep;
      bool conformal = true;
      for (std::size_t e = 0; e < 3; ++e) {
        ASSERT_EQ(c[e], x[e] != Sign::zero ? x[e] : y[e]);
        if (x[e] != Sign::zero && y[e] != Sign::zero && x[e] != y[e]) sep.push_back(e);
        if (x[e] != Sign::zero && x[e] != y[e]) conformal = false;
      }
      ASSERT_EQ(separation(x, y), sep);
      ASSERT_EQ(conforms(x, y), conformal) << x.to_string() << " " << y.to_string();
    }
  }
}

TEST(SignVector, WordConversions) {
  const auto w = Word::parse(AlphabetSpec::binary(4), "1001");
  EXPECT_EQ(word_to_sign(w).to_string(), "+--+");
  EXPECT_EQ(sign_to_word(word_to_sign(w)), w);
  EXPECT_THROW(sign_to_word(sv("+0")), PreconditionError);
}

// X is a covector iff X o T is a tope for every tope T.
std::vector<SignVector> brute_covectors(const std::vector<SignVector>& topes) {
  std::vector<SignVector> out;
  for (const auto& x : all_sign_vectors(topes.front().size())) {
    bool ok = true;
    for (const auto& t : topes) ok = ok && std::binary_search(topes.begin(), topes.end(), compose(x, t));
    if (ok) out.push_back(x);
  }
  return out;
}

TEST(OrientedMatroid, CovectorsMatchDefinition) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (unsigned k = 1; k < n; ++k) {
      auto topes = topes_from_rset(k, n);
      std::sort(topes.begin(), topes.end());
      const auto om = covectors_from_topes(topes);
      ASSERT_EQ(om.covectors, brute_covectors(topes)) << "n=" << n << " k=" << k;
      ASSERT_EQ(om.topes, topes);
      for (const auto& c : om.cocircuits) {
        // Cocircuits are the minimal nonzero covectors.
        for (const auto& x : om.covectors) {
          if (!x.is_zero() && x != c) ASSERT_FALSE(conforms(x, c));
        }
      }
    }
  }
}

TEST(OrientedMatroid, RhombicDodecahedron) {
  const auto om = om_from_rset(2, 4);
  EXPECT_EQ(om.topes.size(), 14u);
  EXPECT_EQ(om.cocircuits.size(), 12u);
  EXPECT_EQ(om.covectors.size(), 51u);
  EXPECT_EQ(om.rank, 3u);
  EXPECT_EQ(om_rank(om), 3u);
  const auto lattice = face_lattice(om);
  EXPECT_EQ(lattice.level_sizes, (std::vector<std::size_t>{1, 12, 24, 14, 1}));
  const auto u = is_uniform(om);
  EXPECT_TRUE(u.uniform);
  EXPECT_EQ(u.support_size, 2u);
  EXPECT_TRUE(check_face_axioms(om.covectors).holds);
}

TEST(OrientedMatroid, SmallCases) {
  const auto hexagon = om_from_rset(1, 3);
  EXPECT_EQ(hexagon.rank, 2u);
  EXPECT_EQ(hexagon.topes.size(), 6u);
  const auto five = om_from_rset(2, 5);
  EXPECT_EQ(five.topes.size(), 22u);
  EXPECT_EQ(five.cocircuits.size(), 20u);
  EXPECT_THROW(om_from_rset(3, 3), PreconditionError);
  EXPECT_THROW(om_from_rset(0, 3), PreconditionError);
}

TEST(OrientedMatroid, RankAndCocircuitCounts) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (unsigned k = 1; k < n; ++k) {
      const auto om = om_from_rset(k, n);
      EXPECT_EQ(om.rank, k + 1);
      EXPECT_EQ(om.cocircuits.size(), 2 * pascal_binomial(n, k));
      EXPECT_EQ(is_uniform(om).support_size, n - k);
    }
  }
}

TEST(OrientedMatroid, LatticeCoversAreConformalSteps) {
  const auto om = om_from_rset(2, 5);
  const auto lattice = face_lattice(om);
  for (const auto& [lo, hi] : lattice.covers) {
    ASSERT_EQ(lattice.rank[hi], lattice.rank[lo] + 1);
    if (hi != lattice.top()) ASSERT_TRUE(conforms(lattice.nodes[lo], lattice.nodes[hi]));
  }
  std::size_t total = 0;
  for (auto s : lattice.level_sizes) total += s;
  EXPECT_EQ(total, om.covectors.size() + 1);
}

TEST(FaceAxioms, ReportFirstFailure) {
  EXPECT_EQ(check_face_axioms({sv("+0"), sv("-0")}).axiom, "F0");
  EXPECT_EQ(check_face_axioms({sv("00"), sv("+0")}).axiom, "F1");
  const auto f2 = check_face_axioms({sv("00"), sv("+0"), sv("-0"), sv("0+"), sv("0-")});
  EXPECT_EQ(f2.axiom, "F2");
  EXPECT_EQ(f2.witness.size(), 2u);
  EXPECT_TRUE(check_face_axioms({sv("00"), sv("+0"), sv("-0")}).holds);
}

TEST(Topes, UniformCheckAndSymmetry) {
  const auto check = uniform_tope_check(topes_from_rset(2, 6));
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.tope_count, 32u);
  EXPECT_EQ(check.vc_dimension, 3);
  EXPECT_THROW(covectors_from_topes({sv("++"), sv("+-"), sv("--")}), PreconditionError);
  Limits tight;
  tight.max_ground_size = 3;
  EXPECT_THROW(covectors_from_topes(topes_from_rset(1, 4), tight), BudgetExceeded);
}

TEST(Topes, GraphIsTheInducedCubeGraph) {
  const auto g = tope_graph(topes_from_rset(2, 4));
  EXPECT_EQ(g.vertex_count(), 14u);
  EXPECT_EQ(g.edge_count(), 24u);
}

}  // namespace
