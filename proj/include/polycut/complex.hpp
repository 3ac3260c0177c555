#ifndef POLYCUT_COMPLEX_HPP
#define POLYCUT_COMPLEX_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polycut {

using VertexId = std::uint32_t;

/**
 * A simplex given by its vertex set. Vertices are kept sorted, so two facets
 * compare equal exactly when they span the same vertices.
 */
class Facet {
 public:
  Facet() = default;
  explicit Facet(std::vector<VertexId> vertices);
  Facet(std::initializer_list<VertexId> vertices);

  std::span<const VertexId> vertices() const& { return vertices_; }
  std::span<const VertexId> vertices() && = delete;
  std::size_t size() const { return vertices_.size(); }
  bool contains(VertexId v) const;

  /// The facet with `v` removed; `v` must be present.
  Facet without(VertexId v) const;

  std::string to_string() const;

  auto operator<=>(const Facet&) const = default;
  bool operator==(const Facet&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

struct ValidationReport {
  bool pure = false;
  bool no_duplicate_facets = false;
  bool pseudomanifold = false;
  bool dual_connected = false;
  /// n - e + f, filled for dim 3 complexes only.
  std::optional<long> euler_characteristic;
  bool euler_ok = true;
  std::vector<std::string> problems;

  bool ok() const {
    return pure && no_duplicate_facets && pseudomanifold && dual_connected && euler_ok;
  }
};

/**
 * Pure facet-list representation of the boundary complex of a simplicial
 * polytope. `dim()` is the dimension d of the polytope, so a well-formed
 * complex has facets of exactly d vertices.
 *
 * The constructor only canonicalizes (sorts the facet list); purity,
 * duplicates and the pseudomanifold conditions are reported by validate().
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int dim, std::vector<Facet> facets);

  int dim() const { return dim_; }
  std::span<const Facet> facets() const& { return facets_; }
  std::span<const Facet> facets() && = delete;
  std::size_t facet_count() const { return facets_.size(); }
  std::span<const VertexId> vertices() const& { return vertices_; }
  std::span<const VertexId> vertices() && = delete;
  std::size_t vertex_count() const { return vertices_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_facet(const Facet& f) const;
  VertexId max_vertex() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int dim_ = 0;
  std::vector<Facet> facets_;
  std::vector<VertexId> vertices_;
};

/// Throws InvalidInput when the facet list is empty.
ValidationReport validate(const SimplicialComplex& complex);

/// Facets containing `v` with `v` removed, as a complex of dimension dim-1.
/// Throws NotFound if `v` is not a vertex.
SimplicialComplex link(const SimplicialComplex& complex, VertexId v);

}  // namespace polycut

#endif  // POLYCUT_COMPLEX_HPP
