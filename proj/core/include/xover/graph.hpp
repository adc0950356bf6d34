#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "xover/alphabet.hpp"
#include "xover/limits.hpp"
#include "xover/word_set.hpp"

namespace xover {

using Vertex = std::size_t;
/// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Simple undirected graph on vertices 0..n-1, optionally carrying one Word per vertex.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t vertex_count = 0) : adjacency_(vertex_count) {}
  /// Vertex i carries labels[i].
  explicit SimpleGraph(std::vector<Word> labels);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Throws PreconditionError on self-loops, duplicate edges or out-of-range vertices.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  /// Ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// All edges, lexicographically ordered.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const Word& label(Vertex v) const { return labels_.at(v); }
  const std::vector<Word>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(const Word& w) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Word> labels_;
  std::size_t edge_count_ = 0;
};

/// Breadth-first distances from `source`; kUnreachable for other components.
std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex source);

/// Dense all-pairs shortest-path distances.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const SimpleGraph& g);

  std::size_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::size_t size() const noexcept { return n_; }
  bool connected() const noexcept { return connected_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> d_;
  bool connected_ = true;
};

/// {z : d(x,z) + d(z,y) = d(x,y)}, ascending. Throws PreconditionError if x and y
/// lie in different components.
std::vector<Vertex> geodesic_interval(const SimpleGraph& g, Vertex x, Vertex y);

bool is_connected(const SimpleGraph& g);
/// Throws PreconditionError for a disconnected graph.
std::size_t diameter(const SimpleGraph& g);
/// Non-increasing.
std::vector<std::size_t> degree_sequence(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

/// Subgraph induced by `vertices` (renumbered in the given order; labels carried over).
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices);
/// Subgraph of a labeled graph induced by the vertices whose labels are in `s`.
SimpleGraph induced_subgraph(const SimpleGraph& g, const WordSet& s);
/// Subgraph of the Hamming graph induced by `s`, built without the whole space:
/// vertices in canonical order, edges between words at distance 1.
SimpleGraph hamming_subgraph(const WordSet& s);

/// Cartesian product of complete graphs K_{a_1} x ... x K_{a_n}, vertices in
/// canonical word order. Guarded by limits.max_space.
SimpleGraph hamming_graph(const AlphabetSpec& spec, const Limits& limits = {});

SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b);

}  // namespace xover
