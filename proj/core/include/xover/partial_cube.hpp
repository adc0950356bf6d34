#pragma once

// Partial cubes: the parallel relation on edges, cut extraction, isometric
// binary labeling, antipodality, VC-dimension and cube minors.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xover/graph.hpp"
#include "xover/word_set.hpp"

namespace xover {

/// uv || xy on the edges of a connected graph, evaluated with R = I_G.
/// Two undirected edges are related when some orientation of them is.
class ParallelRelation {
 public:
  explicit ParallelRelation(const SimpleGraph& g);

  /// Edges in lexicographic order; relation indices refer to this list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool related(std::size_t e, std::size_t f) const { return rel_[e * edges_.size() + f]; }
  /// Related pairs (e, f) with e < f.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// First triple (e, f, g) with e || f, f || g and not e || g, if any.
  std::optional<std::array<std::size_t, 3>> transitivity_violation() const;

 private:
  std::vector<Edge> edges_;
  std::vector<bool> rel_;
};

/// Throws PreconditionError for a disconnected graph.
ParallelRelation parallel_relation(const SimpleGraph& g);

struct PartialCubeEmbedding {
  /// labels[v] is a string over {0, 1}; coordinate i is cut i.
  std::vector<std::string> labels;
  /// Cut classes, ordered by their lexicographically first edge; each lists its
  /// edges in lexicographic order.
  std::vector<std::vector<Edge>> cuts;

  std::size_t dimension() const noexcept { return cuts.size(); }
};

/// The embedding if || is transitive and the induced labeling is isometric;
/// nullopt otherwise. The side of each cut containing vertex 0 is labeled 0.
/// Throws PreconditionError for a disconnected graph.
std::optional<PartialCubeEmbedding> is_partial_cube(const SimpleGraph& g);

/// Edge counts per cut, in cut order.
std::vector<std::size_t> cut_sizes(const PartialCubeEmbedding& e);

/// v -> the unique vertex at distance diam(g), when every vertex has exactly
/// one; nullopt otherwise (including disconnected graphs).
std::optional<std::vector<Vertex>> is_antipodal(const SimpleGraph& g);

/// Largest shattered coordinate set of a set of binary words; -1 for the empty set.
int vc_dimension(const WordSet& s);
/// Same, for rows of equal length over {'0', '1'}.
int vc_dimension(const std::vector<std::string>& rows);

/// Largest d such that contracting all but d cuts leaves the d-cube.
std::size_t largest_cube_minor_dim(const SimpleGraph& g, const PartialCubeEmbedding& e);

/// degree -> number of vertices.
std::map<std::size_t, std::size_t> degree_profile(const SimpleGraph& g);
/// (min, max) degree; (0, 0) for the empty graph.
std::pair<std::size_t, std::size_t> min_max_degree(const SimpleGraph& g);

}  // namespace xover
