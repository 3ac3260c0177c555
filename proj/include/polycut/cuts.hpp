#ifndef POLYCUT_CUTS_HPP
#define POLYCUT_CUTS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polycut/graph.hpp"

namespace polycut {

/// The edge cut E(X, V \ X) of a graph, with X = side_x.
struct EdgeCut {
  std::vector<VertexId> side_x;  // sorted
  std::vector<Edge> edges;       // sorted

  std::size_t cardinality() const { return edges.size(); }
  bool operator==(const EdgeCut&) const = default;
};

struct CutClassification {
  bool trivial = false;
  std::optional<VertexId> star_vertex;
  std::size_t n_x = 0;     // |X ∩ V(D)|
  std::size_t n_xbar = 0;  // |X̄ ∩ V(D)|
};

/// Builds the cut with side X = `side_x`. Throws InvalidInput if X is empty,
/// the whole vertex set, or names a vertex not in `g`.
EdgeCut make_cut(const Graph& g, std::span<const VertexId> side_x);

/**
 * Deterministic global minimum edge cut (Stoer-Wagner, ties broken by vertex
 * index). A disconnected graph yields the zero cut with side_x = the
 * component of the smallest vertex. Throws InvalidInput when n < 2.
 */
EdgeCut global_min_cut(const Graph& g);

/// Edge connectivity λ(g).
std::size_t edge_connectivity(const Graph& g);

/**
 * Minimum edge cut separating `s_set` from `t_set` via unit-capacity max flow
 * with each terminal set contracted. The value is the maximum number of
 * edge-disjoint paths between the sets. The returned side is the set reachable
 * from `s_set` in the final residual network, i.e. the minimum cut closest to
 * the sources.
 */
EdgeCut min_cut_between(const Graph& g, std::span<const VertexId> s_set,
                        std::span<const VertexId> t_set);

/// Max-flow value only, stopping once it exceeds `limit`.
std::size_t edge_disjoint_paths(const Graph& g, std::span<const VertexId> s_set,
                                std::span<const VertexId> t_set, std::size_t limit);

inline constexpr std::size_t kOracleMaxVertices = 22;

/**
 * Every minimum edge cut of `g`, found by enumerating all 2^(n-1) - 1
 * bipartitions. Each cut is reported once, with the largest vertex on the
 * complement side. Throws OracleScaleExceeded when n > max_n.
 */
std::vector<EdgeCut> brute_force_min_cuts(const Graph& g, std::size_t max_n = kOracleMaxVertices);

/// Throws InvalidInput if `cut` is not the crossing set of its own side.
CutClassification classify(const Graph& g, const EdgeCut& cut);

/**
 * A minimum cut with at least two vertices on each side, if one exists.
 * `lambda` must equal λ(g) (checked, InvalidInput otherwise).
 *
 * Fix a minimum-degree vertex v0. Both sides of a minimum cut of a connected
 * graph induce connected subgraphs, so the side containing v0 contains a
 * neighbour b of v0. For each such b and each target t, the source-closest
 * minimum ({v0,b}, t)-cut is the cut with the largest t side among all
 * minimum ones; a nontrivial minimum cut exists iff one of those has value
 * lambda and leaves at least two vertices opposite. The first hit in (b, t)
 * order is returned.
 */
std::optional<EdgeCut> find_nontrivial_min_cut(const Graph& g, std::size_t lambda);

/**
 * True iff no fewer than k vertices separate g, checked with vertex-split
 * max flow: any separator of size < k misses one of the first k vertices,
 * so pairs (v_i, w) with i < k and w non-adjacent to v_i suffice.
 * Throws InvalidInput when k < 1 or n <= k.
 */
bool vertex_connectivity_at_least(const Graph& g, std::size_t k);

}  // namespace polycut

#endif  // POLYCUT_CUTS_HPP
