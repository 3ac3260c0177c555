#ifndef POLYCUT_GRAPH_HPP
#define POLYCUT_GRAPH_HPP

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polycut/complex.hpp"

namespace polycut {

/// Undirected edge, always stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(VertexId a, VertexId b);

/**
 * Simple undirected graph over arbitrary vertex ids.
 *
 * Vertices are held in increasing id order and addressed internally by their
 * position ("index"); the algorithms in cuts.hpp work on indices and translate
 * back to ids at the boundary.
 */
class Graph {
 public:
  Graph() = default;
  /// Loops and repeated edges are rejected with InvalidInput.
  Graph(std::vector<VertexId> vertices, std::span<const Edge> edges);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const VertexId> vertices() const& { return ids_; }
  std::span<const VertexId> vertices() && = delete;

  VertexId id(std::size_t index) const { return ids_[index]; }
  std::size_t index_of(VertexId v) const;
  bool has_vertex(VertexId v) const { return index_.contains(v); }

  std::span<const std::size_t> neighbors(std::size_t index) const { return adjacency_[index]; }
  std::size_t degree(std::size_t index) const { return adjacency_[index].size(); }
  bool adjacent(VertexId a, VertexId b) const;

  /// Sorted list of edges.
  std::vector<Edge> edges() const;
  std::vector<VertexId> neighbor_ids(VertexId v) const;

  Graph without_edges(std::span<const Edge> removed) const;
  Graph induced(std::span<const VertexId> keep) const;
  std::vector<std::vector<VertexId>> connected_components() const;
  bool connected() const { return connected_components().size() <= 1; }

 private:
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// 1-skeleton: u,v adjacent iff they share a facet.
Graph skeleton_graph(const SimplicialComplex& complex);

/// Throws InvalidInput on the empty graph.
std::size_t min_degree(const Graph& g);

}  // namespace polycut

#endif  // POLYCUT_GRAPH_HPP
