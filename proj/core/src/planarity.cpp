#include "xover/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>
#include <boost/property_map/property_map.hpp>

#include "xover/error.hpp"

namespace xover {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

struct FaceCollector : boost::planar_face_traversal_visitor {
  std::vector<std::vector<Vertex>>* faces;
  void begin_face() { faces->emplace_back(); }
  template <class V>
  void next_vertex(V v) {
    faces->back().push_back(static_cast<Vertex>(v));
  }
};

}  // namespace

PlanarityReport is_planar_quadrangulation(const SimpleGraph& g) {
  if (g.vertex_count() < 4) throw PreconditionError("planar quadrangulation check needs >= 4 vertices");
  if (!is_connected(g)) throw PreconditionError("planar quadrangulation check needs a connected graph");

  BoostGraph bg(g.vertex_count());
  for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next++);

  using Embedding = std::vector<std::vector<BoostEdge>>;
  Embedding embedding(boost::num_vertices(bg));
  PlanarityReport report;
  report.bipartite = is_bipartite(g);
  report.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!report.planar) return report;

  FaceCollector collector;
  collector.faces = &report.faces;
  boost::planar_face_traversal(bg, &embedding[0], collector);

  bool all_four = std::all_of(report.faces.begin(), report.faces.end(),
                              [](const auto& f) { return f.size() == 4; });
  report.quadrangulation = report.bipartite && all_four;
  if (report.quadrangulation) report.quadrangles = g.edge_count() + 2 - g.vertex_count();
  return report;
}

}  // namespace xover
