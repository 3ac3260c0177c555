#ifndef POLYCUT_CONSTRUCTIONS_HPP
#define POLYCUT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycut/complex.hpp"
#include "polycut/graph.hpp"

namespace polycut {

/**
 * A complex together with named vertices and two distinguished facets.
 *
 * For stacked_chain, f0 and f1 are disjoint facets of `complex`. For
 * nontrivial_cut_polytope they are the facets of the chain along which the
 * cyclic polytopes were glued, so they are no longer facets of the result.
 */
struct LabeledConstruction {
  SimplicialComplex complex;
  std::map<std::string, VertexId> labels;
  Facet f0;
  Facet f1;
  std::vector<Edge> designated_cut;
};

/// Boundary of the d-simplex on vertices 1..d+1.
SimplicialComplex boundary_simplex(int d);

/// Boundary of the cyclic d-polytope on vertices 1..n, facets by Gale evenness.
SimplicialComplex cyclic_boundary(int d, int n);

/// True if the d-subset `s` of {1..n} satisfies Gale's evenness condition.
bool gale_evenness(const Facet& s, int n);

/// Maps each vertex of the glued facet of `a` to its partner in `b`.
using FacetBijection = std::map<VertexId, VertexId>;

struct GluedComplex {
  SimplicialComplex complex;
  /// Where every vertex of `b` ended up in the result.
  std::map<VertexId, VertexId> b_renaming;
};

/**
 * Combinatorial connected sum: facets(a) \ {fa} together with the renamed
 * facets(b) \ {fb}. Vertices of fb take the id of their fa partner; the rest
 * of b receives fresh ids above max(a), in increasing order of their old ids.
 * Without an explicit bijection the sorted vertices of fa and fb are paired
 * in order.
 */
GluedComplex connected_sum_mapped(const SimplicialComplex& a, const Facet& fa,
                                  const SimplicialComplex& b, const Facet& fb,
                                  const std::optional<FacetBijection>& identify = std::nullopt);

SimplicialComplex connected_sum(const SimplicialComplex& a, const Facet& fa,
                                const SimplicialComplex& b, const Facet& fb,
                                const std::optional<FacetBijection>& identify = std::nullopt);

/// The stacked d-polytope on x_1..x_2d (vertex x_i has id i), with
/// f0 = {x_1..x_d}, f1 = {x_d+1..x_2d} and the edges between them.
LabeledConstruction stacked_chain(int d);

/// Number of vertices of the cyclic polytope glued onto each end of the chain.
int cyclic_factor_size(int d);

/// C # P_2d # C with the chain's f0/f1 cut as the designated cut.
LabeledConstruction nontrivial_cut_polytope(int d);

/// Flip `edge` of a triangulated 2-sphere; throws FlipIllegal when the flip
/// would create a repeated edge or a vertex of degree below 3.
SimplicialComplex edge_flip(const SimplicialComplex& complex, Edge edge);

/// Stacked 2-sphere on n vertices followed by `flip_count` random legal flips.
SimplicialComplex random_plane_triangulation(int n, int flip_count, std::uint64_t seed);

}  // namespace polycut

#endif  // POLYCUT_CONSTRUCTIONS_HPP
