#include "xover/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "xover/error.hpp"

namespace xover {

SimpleGraph::SimpleGraph(std::vector<Word> labels)
    : adjacency_(labels.size()), labels_(std::move(labels)) {}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw PreconditionError("edge endpoint out of range");
  }
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) {
    throw PreconditionError("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) +
                            "}");
  }
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<Vertex> SimpleGraph::find(const Word& w) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), w);
  if (it != labels_.end() && *it == w) return static_cast<Vertex>(it - labels_.begin());
  // Labels need not be sorted for hand-built graphs.
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == w) return v;
  }
  return std::nullopt;
}

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex source) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const SimpleGraph& g) : n_(g.vertex_count()), d_(n_ * n_) {
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < n_; ++t) {
      if (row[t] == kUnreachable) connected_ = false;
    }
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

std::vector<Vertex> geodesic_interval(const SimpleGraph& g, Vertex x, Vertex y) {
  auto dx = bfs_distances(g, x);
  if (dx.at(y) == kUnreachable) {
    throw PreconditionError("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                            " lie in different components");
  }
  auto dy = bfs_distances(g, y);
  std::vector<Vertex> out;
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    if (dx[z] != kUnreachable && dx[z] + dy[z] == dx[y]) out.push_back(z);
  }
  return out;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](auto v) { return v == kUnreachable; });
}

std::size_t diameter(const SimpleGraph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d == kUnreachable) throw PreconditionError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<std::size_t> degree_sequence(const SimpleGraph& g) {
  std::vector<std::size_t> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices) {
  std::vector<std::size_t> position(g.vertex_count(), kUnreachable);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (position.at(vertices[i]) != kUnreachable) {
      throw PreconditionError("repeated vertex in induced_subgraph");
    }
    position[vertices[i]] = i;
  }
  SimpleGraph h = [&] {
    if (!g.has_labels()) return SimpleGraph(vertices.size());
    std::vector<Word> labels;
    labels.reserve(vertices.size());
    for (Vertex v : vertices) labels.push_back(g.label(v));
    return SimpleGraph(std::move(labels));
  }();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      std::size_t j = position[w];
      if (j != kUnreachable && i < j) h.add_edge(i, j);
    }
  }
  return h;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const WordSet& s) {
  if (!g.has_labels()) throw PreconditionError("induced_subgraph by words needs a labeled graph");
  std::vector<Vertex> vertices;
  vertices.reserve(s.size());
  for (const Word& w : s) {
    auto v = g.find(w);
    if (!v) throw PreconditionError("word " + w.to_string() + " is not a vertex of the graph");
    vertices.push_back(*v);
  }
  return induced_subgraph(g, vertices);
}

SimpleGraph hamming_subgraph(const WordSet& s) {
  const auto& spec = s.spec();
  const auto& idx = s.indices();
  std::unordered_map<std::uint64_t, Vertex> position;
  position.reserve(idx.size());
  for (Vertex v = 0; v < idx.size(); ++v) position.emplace(idx[v], v);
  SimpleGraph g(s.words());
  for (Vertex u = 0; u < idx.size(); ++u) {
    const Word& w = g.label(u);
    for (std::size_t p = 0; p < spec.length(); ++p) {
      // Only neighbors with a larger letter at p, so each edge is found once.
      for (std::uint64_t letter = w[p] + 1u; letter < spec.alphabet_size(p); ++letter) {
        auto it = position.find(idx[u] + (letter - w[p]) * spec.weight(p));
        if (it != position.end()) g.add_edge(u, it->second);
      }
    }
  }
  return g;
}

SimpleGraph hamming_graph(const AlphabetSpec& spec, const Limits& limits) {
  require_within("Hamming graph on " + spec.to_string(), spec.total_size(), limits.max_space);
  std::vector<std::uint64_t> all(spec.total_size());
  for (std::uint64_t i = 0; i < all.size(); ++i) all[i] = i;
  return hamming_subgraph(WordSet(spec, std::move(all)));
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i - 1, i);
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
  SimpleGraph g(a + b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

}  // namespace xover
