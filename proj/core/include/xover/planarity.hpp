#pragma once

#include <cstddef>
#include <vector>

#include "xover/graph.hpp"

namespace xover {

struct PlanarityReport {
  bool planar = false;
  bool bipartite = false;
  /// Planar, bipartite, and every face of the embedding found has length 4.
  bool quadrangulation = false;
  /// Faces of the embedding as closed boundary walks (empty when not planar).
  std::vector<std::vector<Vertex>> faces;
  /// |E| - |V| + 2 when `quadrangulation`, else 0.
  std::size_t quadrangles = 0;
};

/// Exact planarity test with a combinatorial embedding (Boyer-Myrvold).
/// Requires a connected graph with at least 4 vertices.
PlanarityReport is_planar_quadrangulation(const SimpleGraph& g);

}  // namespace xover
