#include "xover/partial_cube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

#include "xover/error.hpp"

namespace xover {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Edge classes of the relation, as lists of edge indices ordered by their first edge.
std::vector<std::vector<std::size_t>> relation_classes(const ParallelRelation& rel) {
  const auto m = rel.edges().size();
  DisjointSets sets(m);
  for (auto [e, f] : rel.pairs()) sets.unite(e, f);
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t e = 0; e < m; ++e) {
    auto root = sets.find(e);
    if (slot[root] == m) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(e);
  }
  return classes;
}

std::size_t hamming(const std::string& a, const std::string& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace

ParallelRelation::ParallelRelation(const SimpleGraph& g) : edges_(g.edges()) {
  const DistanceMatrix d(g);
  if (!d.connected()) throw PreconditionError("parallel relation needs a connected graph");
  const auto m = edges_.size();
  rel_.assign(m * m, false);
  // uv || xy iff v, x in I(u, y) and u, y in I(v, x).
  auto oriented = [&](Vertex u, Vertex v, Vertex x, Vertex y) {
    return d(u, v) + d(v, y) == d(u, y) && d(u, x) + d(x, y) == d(u, y) &&
           d(v, u) + d(u, x) == d(v, x) && d(v, y) + d(y, x) == d(v, x);
  };
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = e; f < m; ++f) {
      auto [u, v] = edges_[e];
      auto [x, y] = edges_[f];
      bool r = e == f || oriented(u, v, x, y) || oriented(u, v, y, x);
      rel_[e * m + f] = rel_[f * m + e] = r;
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> ParallelRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (std::size_t f = e + 1; f < edges_.size(); ++f) {
      if (related(e, f)) out.emplace_back(e, f);
    }
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> ParallelRelation::transitivity_violation() const {
  const auto m = edges_.size();
  for (const auto& cls : relation_classes(*this)) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (related(cls[i], cls[j])) continue;
        // A shortest relation path from cls[i] to cls[j] has length >= 2 and
        // its first three edges form a violating triple.
        std::vector<std::size_t> prev(m, m);
        std::queue<std::size_t> queue;
        queue.push(cls[j]);
        prev[cls[j]] = cls[j];
        while (!queue.empty()) {
          auto f = queue.front();
          queue.pop();
          for (std::size_t g = 0; g < m; ++g) {
            if (prev[g] == m && related(f, g)) {
              prev[g] = f;
              queue.push(g);
            }
          }
        }
        auto a = cls[i];
        auto b = prev[a];
        return std::array<std::size_t, 3>{a, b, prev[b]};
      }
    }
  }
  return std::nullopt;
}

ParallelRelation parallel_relation(const SimpleGraph& g) { return ParallelRelation(g); }

std::optional<PartialCubeEmbedding> is_partial_cube(const SimpleGraph& g) {
  if (!is_connected(g)) throw PreconditionError("partial cube recognition needs a connected graph");
  const ParallelRelation rel(g);
  const auto classes = relation_classes(rel);
  for (const auto& cls : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!rel.related(cls[i], cls[j])) return std::nullopt;
      }
    }
  }

  const auto n = g.vertex_count();
  PartialCubeEmbedding out;
  out.labels.assign(n, std::string(classes.size(), '0'));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<Edge> cut;
    for (auto e : classes[c]) cut.push_back(rel.edges()[e]);
    // Components of g minus the cut.
    SimpleGraph rest(n);
    for (const auto& e : g.edges()) {
      if (!std::binary_search(cut.begin(), cut.end(), e)) rest.add_edge(e.first, e.second);
    }
    auto side = bfs_distances(rest, 0);
    std::vector<Vertex> far;
    for (Vertex v = 0; v < n; ++v) {
      if (side[v] == kUnreachable) far.push_back(v);
    }
    if (far.empty()) return std::nullopt;
    auto other = bfs_distances(rest, far.front());
    for (auto v : far) {
      if (other[v] == kUnreachable) return std::nullopt;  // three or more components
    }
    for (auto v : far) out.labels[v][c] = '1';
    out.cuts.push_back(std::move(cut));
  }

  const DistanceMatrix d(g);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (hamming(out.labels[u], out.labels[v]) != d(u, v)) return std::nullopt;
    }
  }
  if (!is_bipartite(g)) throw InternalError("isometric hypercube labeling of a non-bipartite graph");
  return out;
}

std::vector<std::size_t> cut_sizes(const PartialCubeEmbedding& e) {
  std::vector<std::size_t> out;
  for (const auto& c : e.cuts) out.push_back(c.size());
  return out;
}

std::optional<std::vector<Vertex>> is_antipodal(const SimpleGraph& g) {
  const DistanceMatrix d(g);
  if (!d.connected() || g.vertex_count() == 0) return std::nullopt;
  const auto n = g.vertex_count();
  std::size_t diam = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) diam = std::max(diam, d(u, v));
  }
  std::vector<Vertex> map(n);
  for (Vertex u = 0; u < n; ++u) {
    std::size_t count = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (d(u, v) == diam) {
        map[u] = v;
        ++count;
      }
    }
    if (count != 1) return std::nullopt;
  }
  return map;
}

int vc_dimension(const std::vector<std::string>& rows) {
  if (rows.empty()) return -1;
  const auto width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) throw PreconditionError("vc_dimension needs rows of equal length");
    if (r.find_first_not_of("01") != std::string::npos) {
      throw PreconditionError("vc_dimension needs binary rows");
    }
  }
  if (width > 62) throw PreconditionError("vc_dimension supports at most 62 coordinates");
  std::vector<std::uint64_t> packed;
  packed.reserve(rows.size());
  for (const auto& r : rows) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < width; ++i) bits |= std::uint64_t{r[i] == '1'} << i;
    packed.push_back(bits);
  }
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

  int best = 0;
  std::vector<bool> seen;
  for (std::size_t size = 1; size <= width; ++size) {
    if (size >= 63 || packed.size() < (std::size_t{1} << size)) break;
    bool shattered_any = false;
    // Coordinate subsets of this size as bit masks, in increasing order (Gosper's hack).
    for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask < (std::uint64_t{1} << width);) {
      seen.assign(std::size_t{1} << size, false);
      std::size_t distinct = 0;
      for (auto w : packed) {
        // Compress the selected coordinates of w into `size` bits.
        std::uint64_t pattern = 0;
        std::size_t bit = 0;
        for (auto m = mask; m; m &= m - 1, ++bit) {
          pattern |= ((w >> std::countr_zero(m)) & 1) << bit;
        }
        if (!seen[pattern]) {
          seen[pattern] = true;
          ++distinct;
        }
      }
      if (distinct == seen.size()) {
        shattered_any = true;
        break;
      }
      std::uint64_t c = mask & (~mask + 1);
      std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
    if (!shattered_any) break;
    best = static_cast<int>(size);
  }
  return best;
}

int vc_dimension(const WordSet& s) {
  if (!s.spec().is_binary()) throw PreconditionError("vc_dimension requires binary alphabet");
  std::vector<std::string> rows;
  for (const auto& w : s) rows.push_back(w.to_string());
  return vc_dimension(rows);
}

std::size_t largest_cube_minor_dim(const SimpleGraph& g, const PartialCubeEmbedding& e) {
  const auto c = e.dimension();
  const auto n = g.vertex_count();
  if (c > 30) throw PreconditionError("cube minor search supports at most 30 cuts");
  std::vector<std::size_t> cut_of_edge;
  const auto edges = g.edges();
  for (const auto& edge : edges) {
    std::size_t which = c;
    for (std::size_t i = 0; i < c && which == c; ++i) {
      if (std::binary_search(e.cuts[i].begin(), e.cuts[i].end(), edge)) which = i;
    }
    if (which == c) throw PreconditionError("embedding does not cover every edge");
    cut_of_edge.push_back(which);
  }

  // Contract every edge outside `kept` and test the quotient for being the
  // |kept|-cube: 2^d classes carrying distinct kept-coordinate patterns and
  // d 2^(d-1) distinct quotient edges, each flipping one coordinate.
  auto is_cube_minor = [&](std::uint32_t kept, std::size_t d) {
    DisjointSets sets(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(kept >> cut_of_edge[i] & 1)) sets.unite(edges[i].first, edges[i].second);
    }
    std::vector<std::size_t> roots;
    for (Vertex v = 0; v < n; ++v) {
      if (sets.find(v) == v) roots.push_back(v);
    }
    if (roots.size() != (std::size_t{1} << d)) return false;
    auto pattern = [&](Vertex v) {
      std::uint32_t p = 0;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < c; ++i) {
        if (kept >> i & 1) p |= std::uint32_t{e.labels[v][i] == '1'} << bit++;
      }
      return p;
    };
    std::vector<bool> seen(std::size_t{1} << d, false);
    for (auto r : roots) {
      auto p = pattern(r);
      if (seen[p]) return false;
      seen[p] = true;
    }
    std::vector<std::pair<Vertex, Vertex>> quotient;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(kept >> cut_of_edge[i] & 1)) continue;
      auto a = sets.find(edges[i].first);
      auto b = sets.find(edges[i].second);
      if (a == b) return false;
      if (std::popcount(pattern(a) ^ pattern(b)) != 1) return false;
      quotient.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(quotient.begin(), quotient.end());
    quotient.erase(std::unique(quotient.begin(), quotient.end()), quotient.end());
    return quotient.size() == d * (std::size_t{1} << d) / 2;
  };

  for (std::size_t d = c + 1; d-- > 0;) {
    if ((std::size_t{1} << d) > n) continue;
    for (std::uint32_t kept = 0; kept < (std::uint32_t{1} << c); ++kept) {
      if (static_cast<std::size_t>(std::popcount(kept)) == d && is_cube_minor(kept, d)) return d;
    }
  }
  return 0;
}

std::map<std::size_t, std::size_t> degree_profile(const SimpleGraph& g) {
  std::map<std::size_t, std::size_t> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++out[g.degree(v)];
  return out;
}

std::pair<std::size_t, std::size_t> min_max_degree(const SimpleGraph& g) {
  auto profile = degree_profile(g);
  if (profile.empty()) return {0, 0};
  return {profile.begin()->first, profile.rbegin()->first};
}

}  // namespace xover
