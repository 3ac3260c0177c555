#include "polycut/graph.hpp"

#include <algorithm>
#include <set>

#include "polycut/errors.hpp"

namespace polycut {

Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw InvalidInput("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::vector<VertexId> vertices, std::span<const Edge> edges) : ids_(std::move(vertices)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw InvalidInput("repeated vertex id");
  }
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], i);
  adjacency_.resize(ids_.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidInput("loop at vertex " + std::to_string(a));
    const std::size_t ia = index_of(a);
    const std::size_t ib = index_of(b);
    adjacency_[ia].push_back(ib);
    adjacency_[ib].push_back(ia);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw InvalidInput("repeated edge");
    }
  }
  edge_count_ = edges.size();
}

std::size_t Graph::index_of(VertexId v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) throw NotFound("vertex " + std::to_string(v) + " is not in the graph");
  return it->second;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  const auto& nbrs = adjacency_[index_of(a)];
  return std::binary_search(nbrs.begin(), nbrs.end(), index_of(b));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (std::size_t j : adjacency_[i]) {
      if (i < j) out.emplace_back(ids_[i], ids_[j]);
    }
  }
  return out;
}

std::vector<VertexId> Graph::neighbor_ids(VertexId v) const {
  std::vector<VertexId> out;
  for (std::size_t j : adjacency_[index_of(v)]) out.push_back(ids_[j]);
  return out;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::set<Edge> gone;
  for (const auto& [a, b] : removed) gone.insert(make_edge(a, b));
  std::vector<Edge> kept;
  for (const auto& e : edges()) {
    if (!gone.contains(e)) kept.push_back(e);
  }
  return Graph(ids_, kept);
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<VertexId> vs(keep.begin(), keep.end());
  std::sort(vs.begin(), vs.end());
  std::vector<Edge> kept;
  for (const auto& e : edges()) {
    if (std::binary_search(vs.begin(), vs.end(), e.first) &&
        std::binary_search(vs.begin(), vs.end(), e.second)) {
      kept.push_back(e);
    }
  }
  return Graph(std::move(vs), kept);
}

std::vector<std::vector<VertexId>> Graph::connected_components() const {
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> seen(ids_.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < ids_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> component;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      component.push_back(ids_[u]);
      for (std::size_t w : adjacency_[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

Graph skeleton_graph(const SimplicialComplex& complex) {
  std::set<Edge> edges;
  for (const auto& f : complex.facets()) {
    const auto vs = f.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) edges.emplace(vs[a], vs[b]);
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  const auto vs = complex.vertices();
  return Graph(std::vector<VertexId>(vs.begin(), vs.end()), list);
}

std::size_t min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw InvalidInput("minimum degree of an empty graph");
  std::size_t best = g.degree(0);
  for (std::size_t i = 1; i < g.vertex_count(); ++i) best = std::min(best, g.degree(i));
  return best;
}

}  // namespace polycut
