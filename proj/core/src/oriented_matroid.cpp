#include "xover/oriented_matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "xover/crossover.hpp"
#include "xover/error.hpp"
#include "xover/partial_cube.hpp"

namespace xover {

namespace {

constexpr std::size_t kMaxDenseLength = 12;

// Dense index over {+, 0, -}^n: positive mask in the low n bits, negative above.
std::size_t code(const SignVector& x) {
  return static_cast<std::size_t>(x.positive()) |
         (static_cast<std::size_t>(x.negative()) << x.size());
}

class Membership {
 public:
  Membership(std::size_t n, const std::vector<SignVector>& members)
      : n_(n), slot_(std::size_t{1} << (2 * n), -1) {
    for (std::size_t i = 0; i < members.size(); ++i) slot_[code(members[i])] = static_cast<int>(i);
  }
  bool contains(std::uint32_t pos, std::uint32_t neg) const { return index(pos, neg) >= 0; }
  int index(std::uint32_t pos, std::uint32_t neg) const {
    return slot_[static_cast<std::size_t>(pos) | (static_cast<std::size_t>(neg) << n_)];
  }

 private:
  std::size_t n_;
  std::vector<int> slot_;
};

std::size_t common_length(const std::vector<SignVector>& vs) {
  if (vs.empty()) return 0;
  for (const auto& v : vs) {
    if (v.size() != vs.front().size()) throw PreconditionError("sign vectors of different lengths");
  }
  return vs.front().size();
}

std::vector<SignVector> canonical(std::vector<SignVector> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

[[noreturn]] void invalid_lattice() { throw PreconditionError("not a valid OM lattice"); }

}  // namespace

OrientedMatroidData covectors_from_topes(std::vector<SignVector> topes, const Limits& limits) {
  topes = canonical(std::move(topes));
  if (topes.empty()) throw PreconditionError("empty tope set");
  const auto n = common_length(topes);
  require_within("ground set", n, std::min<std::size_t>(limits.max_ground_size, kMaxDenseLength));
  for (const auto& t : topes) {
    if (!t.full_support()) throw PreconditionError("tope " + t.to_string() + " lacks full support");
  }
  std::vector<bool> is_tope(std::size_t{1} << n, false);
  for (const auto& t : topes) is_tope[t.positive()] = true;
  for (const auto& t : topes) {
    if (!is_tope[t.negative()]) throw PreconditionError("tope set not centrally symmetric");
  }

  OrientedMatroidData om;
  om.ground_size = n;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // Every sign vector as a pair of disjoint masks: pos ranges over all masks,
  // neg over the submasks of its complement.
  for (std::uint32_t pos = 0; pos <= full; ++pos) {
    const std::uint32_t rest = full & ~pos;
    for (std::uint32_t neg = rest;; neg = (neg - 1) & rest) {
      const std::uint32_t free = full & ~(pos | neg);
      bool covector = true;
      for (const auto& t : topes) {
        if (!is_tope[pos | (t.positive() & free)]) {
          covector = false;
          break;
        }
      }
      if (covector) om.covectors.emplace_back(n, pos, neg);
      if (neg == 0) break;
    }
  }
  std::sort(om.covectors.begin(), om.covectors.end());

  for (const auto& x : om.covectors) {
    if (x.full_support()) om.topes.push_back(x);
  }
  if (om.topes != topes) throw InternalError("maximal covectors differ from the given topes");

  auto lattice = face_lattice(om.covectors);
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    if (lattice.rank[i] == 1) om.cocircuits.push_back(lattice.nodes[i]);
  }
  om.rank = lattice.level_sizes.size() - 2;
  return om;
}

FaceAxiomReport check_face_axioms(const std::vector<SignVector>& input) {
  const auto f = canonical(input);
  FaceAxiomReport report;
  auto fail = [&](std::string axiom, std::vector<SignVector> witness) {
    report.holds = false;
    report.axiom = std::move(axiom);
    report.witness = std::move(witness);
    return report;
  };
  if (f.empty()) return fail("F0", {});
  const auto n = common_length(f);
  if (n > kMaxDenseLength) throw PreconditionError("face axiom check supports at most 12 elements");
  const Membership in(n, f);

  if (!in.contains(0, 0)) return fail("F0", {});
  for (const auto& x : f) {
    if (!in.contains(x.negative(), x.positive())) return fail("F1", {x});
  }
  for (const auto& x : f) {
    for (const auto& y : f) {
      auto c = compose(x, y);
      if (!in.contains(c.positive(), c.negative())) return fail("F2", {x, y});
    }
  }
  for (const auto& x : f) {
    for (const auto& y : f) {
      const std::uint32_t d = (x.positive() & y.negative()) | (x.negative() & y.positive());
      if (d == 0) continue;
      const auto c = compose(x, y);
      const std::uint32_t base_pos = c.positive() & ~d;
      const std::uint32_t base_neg = c.negative() & ~d;
      for (auto m = d; m; m &= m - 1) {
        const std::uint32_t e = m & (~m + 1);
        const std::uint32_t open = d & ~e;
        // Z agrees with X o Y off D(X, Y), vanishes at e and is arbitrary on the rest of D.
        bool found = false;
        for (std::uint32_t zpos = open;; zpos = (zpos - 1) & open) {
          const std::uint32_t left = open & ~zpos;
          for (std::uint32_t zneg = left;; zneg = (zneg - 1) & left) {
            if (in.contains(base_pos | zpos, base_neg | zneg)) {
              found = true;
              break;
            }
            if (zneg == 0) break;
          }
          if (found || zpos == 0) break;
        }
        if (!found) {
          fail("F3", {x, y});
          report.element = static_cast<std::size_t>(std::countr_zero(e));
          return report;
        }
      }
    }
  }
  return report;
}

FaceLattice face_lattice(const std::vector<SignVector>& covectors) {
  FaceLattice lattice;
  lattice.nodes = canonical(covectors);
  const auto& nodes = lattice.nodes;
  if (nodes.empty()) invalid_lattice();
  const auto n = common_length(nodes);
  if (n > kMaxDenseLength) throw PreconditionError("face lattice supports at most 12 elements");
  const Membership in(n, nodes);
  if (!in.contains(0, 0)) invalid_lattice();

  // Process by support size so every proper face is ranked before its cofaces.
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return nodes[a].support_size() < nodes[b].support_size();
  });

  lattice.rank.assign(nodes.size() + 1, 0);
  std::vector<bool> has_upper(nodes.size(), false);
  std::vector<std::size_t> lower;
  for (auto y : order) {
    const auto& v = nodes[y];
    const std::uint32_t s = v.support();
    lower.clear();
    if (s != 0) {
      for (std::uint32_t sub = (s - 1) & s;; sub = (sub - 1) & s) {
        int i = in.index(v.positive() & sub, v.negative() & sub);
        if (i >= 0) lower.push_back(static_cast<std::size_t>(i));
        if (sub == 0) break;
      }
    }
    std::size_t r = 0;
    for (auto x : lower) r = std::max(r, lattice.rank[x] + 1);
    lattice.rank[y] = r;
    for (auto x : lower) {
      bool covered = true;
      for (auto z : lower) {
        const auto sx = nodes[x].support();
        const auto sz = nodes[z].support();
        if (sx != sz && (sx & ~sz) == 0) {
          covered = false;
          break;
        }
      }
      if (covered) {
        lattice.covers.emplace_back(x, y);
        has_upper[x] = true;
      }
    }
  }

  std::optional<std::size_t> top_rank;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (has_upper[i]) continue;
    lattice.covers.emplace_back(i, lattice.top());
    if (top_rank && *top_rank != lattice.rank[i] + 1) invalid_lattice();
    top_rank = lattice.rank[i] + 1;
  }
  lattice.rank[lattice.top()] = *top_rank;
  for (const auto& [a, b] : lattice.covers) {
    if (lattice.rank[b] != lattice.rank[a] + 1) invalid_lattice();
  }
  std::sort(lattice.covers.begin(), lattice.covers.end());
  lattice.level_sizes.assign(*top_rank + 1, 0);
  for (auto r : lattice.rank) ++lattice.level_sizes[r];
  return lattice;
}

FaceLattice face_lattice(const OrientedMatroidData& om) { return face_lattice(om.covectors); }

std::size_t om_rank(const OrientedMatroidData& om) {
  return face_lattice(om).level_sizes.size() - 2;
}

UniformityReport is_uniform(const OrientedMatroidData& om) {
  UniformityReport report;
  report.cocircuit_count = om.cocircuits.size();
  if (om.cocircuits.empty()) return report;
  std::set<std::uint32_t> supports;
  const auto s = om.cocircuits.front().support_size();
  for (const auto& c : om.cocircuits) {
    if (c.support_size() != s) return report;
    supports.insert(c.support());
  }
  report.support_size = s;
  report.uniform = supports.size() == binomial(static_cast<unsigned>(om.ground_size),
                                               static_cast<unsigned>(s));
  return report;
}

UniformTopeCheck uniform_tope_check(const std::vector<SignVector>& input) {
  UniformTopeCheck check;
  const auto topes = canonical(input);
  check.tope_count = topes.size();
  if (topes.empty()) return check;
  const auto n = common_length(topes);
  std::set<SignVector> all(topes.begin(), topes.end());
  check.symmetric = std::all_of(topes.begin(), topes.end(), [&](const SignVector& t) {
    return t.full_support() && all.count(negate(t)) > 0;
  });
  std::vector<std::string> rows;
  for (const auto& t : topes) {
    std::string row(n, '0');
    for (std::size_t e = 0; e < n; ++e) row[e] = t[e] == Sign::plus ? '1' : '0';
    rows.push_back(std::move(row));
  }
  check.vc_dimension = vc_dimension(rows);
  if (check.vc_dimension >= 1 && n >= 1) {
    check.expected_count = 2 * phi(static_cast<unsigned>(check.vc_dimension - 1),
                                   static_cast<unsigned>(n - 1));
  }
  check.count_matches = check.expected_count == check.tope_count;
  check.holds = check.symmetric && check.count_matches;
  return check;
}

std::vector<SignVector> topes_from_rset(unsigned k, std::size_t n) {
  auto spec = AlphabetSpec::binary(n);
  auto r = rset(k, Word::zeros(spec), Word::filled(spec, 1));
  std::vector<SignVector> topes;
  for (const auto& w : r.members) topes.push_back(word_to_sign(w));
  return topes;
}

OrientedMatroidData om_from_rset(unsigned k, std::size_t n, const Limits& limits) {
  if (k < 1 || k >= n) throw PreconditionError("om_from_rset needs 1 <= k < n");
  require_within("ground set", n, limits.max_ground_size);
  auto topes = topes_from_rset(k, n);
  if (!uniform_tope_check(topes).holds) {
    throw InternalError("crossover topes fail the uniform tope criterion");
  }
  return covectors_from_topes(std::move(topes), limits);
}

SimpleGraph tope_graph(const std::vector<SignVector>& input) {
  const auto topes = canonical(input);
  std::vector<Word> words;
  for (const auto& t : topes) words.push_back(sign_to_word(t));
  SimpleGraph g(std::move(words));
  for (std::size_t i = 0; i < topes.size(); ++i) {
    for (std::size_t j = i + 1; j < topes.size(); ++j) {
      if (std::popcount(topes[i].positive() ^ topes[j].positive()) == 1) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace xover
