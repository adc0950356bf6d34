#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "support.hpp"
#include "xover/axioms.hpp"
#include "xover/error.hpp"
#include "xover/graph.hpp"
#include "xover/transit_table.hpp"

namespace {

using namespace xover;
using namespace xover::testing;

std::map<Axiom, bool> verdicts(const TransitTable& table, const CheckOptions& options = {}) {
  std::map<Axiom, bool> out;
  for (const auto& r : check_all(table, options)) {
    if (!r.skipped) out[r.axiom] = r.holds;
  }
  return out;
}

std::vector<Axiom> failing(const std::map<Axiom, bool>& v) {
  std::vector<Axiom> out;
  for (const auto& [a, holds] : v) {
    if (!holds) out.push_back(a);
  }
  return out;
}

TransitTable random_table(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  TransitTable table(names);
  std::bernoulli_distribution member(p);
  for (std::size_t x = 0; x < n; ++x) {
    table.set_symmetric(x, x, std::vector<std::size_t>{x});
    for (std::size_t y = x + 1; y < n; ++y) {
      std::vector<std::size_t> s{x, y};
      for (std::size_t z = 0; z < n; ++z) {
        if (z != x && z != y && member(rng)) s.push_back(z);
      }
      table.set_symmetric(x, y, s);
    }
  }
  return table;
}

TEST(Catalog, IdsRoundTripInSortedOrder) {
  const auto& catalog = axiom_catalog();
  EXPECT_EQ(catalog.size(), 26u);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    EXPECT_EQ(parse_axiom(axiom_id(catalog[i])), catalog[i]);
    if (i > 0) EXPECT_LT(axiom_id(catalog[i - 1]), axiom_id(catalog[i]));
  }
}

TEST(Catalog, UnknownIdListsCatalog) {
  try {
    parse_axiom("Q9");
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("Q9"), std::string::npos);
    EXPECT_NE(what.find("GW4"), std::string::npos);
  }
}

TEST(TransitTable, FromRSetMatchesRSet) {
  const auto spec = AlphabetSpec::parse("2,3,2");
  const auto table = table_from_rset(2, spec);
  ASSERT_EQ(table.size(), 12u);
  for (std::size_t x = 0; x < table.size(); ++x) {
    for (std::size_t y = 0; y < table.size(); ++y) {
      const auto r = rset(2, table.word(x), table.word(y)).members;
      std::vector<std::size_t> expected;
      for (const auto& z : r) expected.push_back(spec.index_of(z));
      ASSERT_EQ(table.members(x, y), expected);
      ASSERT_EQ(table.entry_size(x, y), r.size());
    }
  }
}

TEST(TransitTable, IntervalTableMatchesGeodesics) {
  const auto g = complete_bipartite_graph(2, 3);
  const auto table = table_from_interval(g);
  for (Vertex x = 0; x < 5; ++x) {
    for (Vertex y = 0; y < 5; ++y) ASSERT_EQ(table.members(x, y), geodesic_interval(g, x, y));
  }
  SimpleGraph two(2);
  EXPECT_THROW(table_from_interval(two), PreconditionError);
}

TEST(TransitTable, UnderlyingGraphOfR1IsTheCube) {
  const auto g = underlying_graph(table_from_rset(1, AlphabetSpec::binary(3)));
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 12u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 3u);
  EXPECT_EQ(transit_degree(table_from_rset(1, AlphabetSpec::binary(3))), 3u);
}

TEST(TransitTable, ClosureTableMatchesClosure) {
  const auto spec = AlphabetSpec::parse("3,3");
  EXPECT_EQ(closure_table(table_from_rset(1, spec)), table_from_closure(1, spec));
}

TEST(Axioms, OnePointCrossoverOverFourBits) {
  const auto v = verdicts(table_from_rset(1, AlphabetSpec::binary(4)));
  EXPECT_EQ(failing(v), (std::vector<Axiom>{Axiom::AX, Axiom::AXp, Axiom::B2, Axiom::CG,
                                             Axiom::M, Axiom::MM, Axiom::MO}));
}

TEST(Axioms, TwoPointCrossoverOverFourBits) {
  const auto v = verdicts(table_from_rset(2, AlphabetSpec::binary(4)));
  EXPECT_TRUE(v.at(Axiom::Pa));
  EXPECT_FALSE(v.at(Axiom::B2));
  EXPECT_TRUE(v.at(Axiom::AX));
  EXPECT_FALSE(v.at(Axiom::H3));
}

TEST(Axioms, HypercubeIntervalsSatisfyAllButH3) {
  const auto v = verdicts(table_from_interval(hamming_graph(AlphabetSpec::binary(4))));
  EXPECT_EQ(failing(v), std::vector<Axiom>{Axiom::H3});
}

TEST(Axioms, MediansUniqueOnlyForBinaryClosures) {
  const auto binary = table_from_closure(1, AlphabetSpec::binary(4));
  EXPECT_TRUE(check_axiom(binary, Axiom::MO).holds);
  EXPECT_FALSE(find_non_unique_median(binary).has_value());

  const auto ternary = table_from_closure(1, AlphabetSpec::parse("3,3"));
  const auto report = check_axiom(ternary, Axiom::MO);
  EXPECT_FALSE(report.holds);
  EXPECT_EQ(report.witness.size(), 3u);
  EXPECT_TRUE(find_non_unique_median(ternary).has_value());
}

TEST(Axioms, MediansInTreesButNotInK23) {
  SimpleGraph tree(6);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}) tree.add_edge(u, v);
  EXPECT_FALSE(find_non_unique_median(table_from_interval(tree)).has_value());
  EXPECT_TRUE(find_non_unique_median(table_from_interval(complete_bipartite_graph(2, 3))).has_value());
}

TEST(Axioms, GeometricAxiomsCanUseTheClosure) {
  CheckOptions options;
  options.closure_for_geometric = true;
  const auto table = table_from_rset(1, AlphabetSpec::binary(4));
  const auto report = check_axiom(table, Axiom::MO, options);
  EXPECT_EQ(report.evaluated, Evaluated::closure);
  EXPECT_TRUE(report.holds);
  EXPECT_EQ(check_axiom(table, Axiom::MO).evaluated, Evaluated::table);
}

TEST(Axioms, WitnessesReEvaluateAsViolations) {
  auto rng = seeded(10);
  std::vector<TransitTable> tables{table_from_rset(1, AlphabetSpec::binary(4)),
                                   table_from_rset(2, AlphabetSpec::binary(4)),
                                   table_from_rset(1, AlphabetSpec::parse("3,3")),
                                   table_from_interval(cycle_graph(5)),
                                   table_from_interval(complete_bipartite_graph(2, 3))};
  for (int i = 0; i < 20; ++i) tables.push_back(random_table(rng, 5, 0.3));
  std::size_t violations = 0;
  for (const auto& table : tables) {
    for (const auto& r : check_all(table)) {
      if (r.skipped || r.holds) continue;
      ++violations;
      ASSERT_FALSE(axiom_holds_at(table, r.axiom, r.witness)) << axiom_id(r.axiom);
    }
  }
  EXPECT_GT(violations, 50u);
}

TEST(Axioms, FirstWitnessIsCanonicallyFirst) {
  // Every tuple before the reported witness in canonical order must satisfy the body.
  const auto table = table_from_rset(1, AlphabetSpec::binary(3));
  const auto report = check_axiom(table, Axiom::B2);
  ASSERT_FALSE(report.holds);
  ASSERT_EQ(report.witness.size(), 3u);
  const std::size_t n = table.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::size_t> t{a, b, c};
        if (t == report.witness) return;
        ASSERT_TRUE(axiom_holds_at(table, Axiom::B2, t));
      }
    }
  }
}

TEST(Axioms, SixVariableAxiomsAreGuarded) {
  CheckOptions options;
  options.limits.max_six_variable_carrier = 8;
  const auto table = table_from_rset(1, AlphabetSpec::binary(4));
  EXPECT_THROW(check_axiom(table, Axiom::AX, options), BudgetExceeded);
  const auto reports = check_all(table, options);
  const auto ax = std::find_if(reports.begin(), reports.end(),
                               [](const auto& r) { return r.axiom == Axiom::AX; });
  ASSERT_NE(ax, reports.end());
  EXPECT_TRUE(ax->skipped);
  EXPECT_FALSE(ax->note.empty());
}

TEST(Axioms, ImplicationsHoldOnRandomTables) {
  auto rng = seeded(11);
  for (int i = 0; i < 60; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(3, 6)(rng);
    ASSERT_NO_THROW(check_all(random_table(rng, n, 0.25)));
  }
}

TEST(Axioms, ContradictoryReportsAreInternalErrors) {
  const auto table = table_from_rset(1, AlphabetSpec::binary(3));
  auto reports = check_all(table);
  for (auto& r : reports) {
    if (r.axiom == Axiom::M) r.holds = true;
    if (r.axiom == Axiom::GW3) r.holds = false;
  }
  EXPECT_THROW(check_implications(table, reports), InternalError);
}

TEST(Recognition, HypercubesFromCrossover) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const auto table = table_from_rset(k, AlphabetSpec::binary(n));
      EXPECT_TRUE(recognize_hypercube(table, n).recognized) << "n=" << n << " k=" << k;
      if (n > 1) EXPECT_FALSE(recognize_hypercube(table, n - 1).recognized);
    }
  }
}

TEST(Recognition, HammingGraphs) {
  for (const auto* text : {"3,3", "2,3", "3,2,2"}) {
    const auto spec = AlphabetSpec::parse(text);
    EXPECT_TRUE(recognize_hamming(table_from_rset(1, spec), spec.sizes()).recognized) << text;
    EXPECT_TRUE(recognize_hamming(table_from_closure(1, spec), spec.sizes()).recognized) << text;
  }
  const auto spec = AlphabetSpec::parse("3,3");
  EXPECT_FALSE(recognize_hamming(table_from_rset(1, spec), {2, 4}).recognized);
  EXPECT_FALSE(recognize_hamming(table_from_interval(cycle_graph(6)), {2, 3}).recognized);
}

TEST(Recognition, NeedsConnectivity) {
  // No pair has a two-element transit set, so the underlying graph has no edges.
  TransitTable table(std::vector<std::string>{"a", "b", "c"});
  table.set_symmetric(0, 0, std::vector<std::size_t>{0});
  table.set_symmetric(1, 1, std::vector<std::size_t>{1});
  table.set_symmetric(2, 2, std::vector<std::size_t>{2});
  table.set_symmetric(0, 1, std::vector<std::size_t>{0, 1, 2});
  table.set_symmetric(0, 2, std::vector<std::size_t>{0, 1, 2});
  table.set_symmetric(1, 2, std::vector<std::size_t>{0, 1, 2});
  EXPECT_THROW(recognize_hypercube(table, 2), PreconditionError);
}

}  // namespace
