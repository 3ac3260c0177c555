#include "polycut/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polycut/errors.hpp"
#include "polycut/random.hpp"

namespace polycut {

namespace {

Facet range_facet(VertexId first, VertexId last) {
  std::vector<VertexId> vs(last - first + 1);
  std::iota(vs.begin(), vs.end(), first);
  return Facet(std::move(vs));
}

// Depth-first walk over 1..n choosing members. A maximal run of members that
// has a non-member on both sides must have even length; runs touching 1 or n
// are free.
void gale_search(int n, int d, int pos, std::vector<VertexId>& chosen, int run,
                 bool seen_gap, std::vector<Facet>& out) {
  const int taken = static_cast<int>(chosen.size());
  if (taken > d || taken + (n - pos + 1) < d) return;
  if (pos > n) {
    if (taken == d) out.emplace_back(chosen);
    return;
  }
  chosen.push_back(static_cast<VertexId>(pos));
  gale_search(n, d, pos + 1, chosen, run + 1, seen_gap, out);
  chosen.pop_back();
  if (!seen_gap || run % 2 == 0) gale_search(n, d, pos + 1, chosen, 0, true, out);
}

std::size_t vertex_degree_in_sphere(const SimplicialComplex& c, VertexId v) {
  std::set<VertexId> nbrs;
  for (const auto& f : c.facets()) {
    if (!f.contains(v)) continue;
    for (VertexId w : f.vertices())
      if (w != v) nbrs.insert(w);
  }
  return nbrs.size();
}

}  // namespace

SimplicialComplex boundary_simplex(int d) {
  if (d < 2) throw InvalidInput("boundary_simplex needs d >= 2");
  const Facet all = range_facet(1, static_cast<VertexId>(d + 1));
  std::vector<Facet> facets;
  for (VertexId v : all.vertices()) facets.push_back(all.without(v));
  return SimplicialComplex(d, std::move(facets));
}

bool gale_evenness(const Facet& s, int n) {
  std::vector<bool> member(static_cast<std::size_t>(n) + 1, false);
  for (VertexId v : s.vertices()) {
    if (v < 1 || v > static_cast<VertexId>(n)) return false;
    member[v] = true;
  }
  for (int i = 1; i <= n; ++i) {
    if (member[i]) continue;
    int between = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (member[j]) {
        ++between;
        continue;
      }
      if (between % 2 != 0) return false;
    }
  }
  return true;
}

SimplicialComplex cyclic_boundary(int d, int n) {
  if (d < 2) throw InvalidInput("cyclic_boundary needs d >= 2");
  if (n <= d) throw InvalidInput("cyclic_boundary needs n >= d + 1");
  std::vector<Facet> facets;
  std::vector<VertexId> chosen;
  gale_search(n, d, 1, chosen, 0, false, facets);
  return SimplicialComplex(d, std::move(facets));
}

GluedComplex connected_sum_mapped(const SimplicialComplex& a, const Facet& fa,
                                  const SimplicialComplex& b, const Facet& fb,
                                  const std::optional<FacetBijection>& identify) {
  if (a.dim() != b.dim()) throw InvalidInput("connected sum of complexes of different dimension");
  if (!a.has_facet(fa)) throw NotFound("facet " + fa.to_string() + " is not a facet of the first complex");
  if (!b.has_facet(fb)) throw NotFound("facet " + fb.to_string() + " is not a facet of the second complex");

  FacetBijection pairing;
  if (identify) {
    pairing = *identify;
    std::set<VertexId> images;
    for (const auto& [from, to] : pairing) {
      if (!fa.contains(from) || !fb.contains(to)) throw InvalidInput("identification leaves the glued facets");
      images.insert(to);
    }
    if (pairing.size() != fa.size() || images.size() != fb.size()) {
      throw InvalidInput("identification is not a bijection between the glued facets");
    }
  } else {
    for (std::size_t i = 0; i < fa.size(); ++i) pairing.emplace(fa.vertices()[i], fb.vertices()[i]);
  }

  GluedComplex out;
  for (const auto& [from, to] : pairing) out.b_renaming.emplace(to, from);
  VertexId fresh = a.max_vertex() + 1;
  for (VertexId v : b.vertices()) {
    if (!fb.contains(v)) out.b_renaming.emplace(v, fresh++);
  }

  std::vector<Facet> facets;
  for (const auto& f : a.facets()) {
    if (f != fa) facets.push_back(f);
  }
  std::set<Facet> from_a(facets.begin(), facets.end());
  for (const auto& f : b.facets()) {
    if (f == fb) continue;
    std::vector<VertexId> renamed;
    for (VertexId v : f.vertices()) renamed.push_back(out.b_renaming.at(v));
    Facet g(std::move(renamed));
    if (from_a.contains(g)) throw InvalidInput("identification makes facet " + g.to_string() + " appear twice");
    facets.push_back(std::move(g));
  }
  out.complex = SimplicialComplex(a.dim(), std::move(facets));
  return out;
}

SimplicialComplex connected_sum(const SimplicialComplex& a, const Facet& fa,
                                const SimplicialComplex& b, const Facet& fb,
                                const std::optional<FacetBijection>& identify) {
  return connected_sum_mapped(a, fa, b, fb, identify).complex;
}

LabeledConstruction stacked_chain(int d) {
  if (d < 3) throw InvalidInput("stacked_chain needs d >= 3");
  const auto ud = static_cast<VertexId>(d);
  const SimplicialComplex simplex = boundary_simplex(d);
  const Facet simplex_base = range_facet(1, ud);

  // P_{d+1} is the simplex on x_1..x_{d+1}; each step glues a simplex on the
  // facet x_{j+1-d}..x_j and the apex becomes x_{j+1}.
  SimplicialComplex chain = simplex;
  for (VertexId j = ud + 1; j <= 2 * ud - 1; ++j) {
    chain = connected_sum(chain, range_facet(j + 1 - ud, j), simplex, simplex_base);
  }

  LabeledConstruction out;
  out.complex = std::move(chain);
  for (VertexId i = 1; i <= 2 * ud; ++i) out.labels.emplace("x_" + std::to_string(i), i);
  out.f0 = range_facet(1, ud);
  out.f1 = range_facet(ud + 1, 2 * ud);
  const Graph g = skeleton_graph(out.complex);
  for (VertexId u : out.f0.vertices()) {
    for (VertexId v : out.f1.vertices()) {
      if (g.adjacent(u, v)) out.designated_cut.push_back(make_edge(u, v));
    }
  }
  return out;
}

int cyclic_factor_size(int d) { return (d * d + d) / 2 + 1; }

LabeledConstruction nontrivial_cut_polytope(int d) {
  if (d < 4) throw InvalidInput("nontrivial_cut_polytope needs d >= 4");
  LabeledConstruction out = stacked_chain(d);
  const SimplicialComplex cyclic = cyclic_boundary(d, cyclic_factor_size(d));
  // {1..d} is a facet of every cyclic polytope (no gaps inside it).
  const Facet cyclic_facet = range_facet(1, static_cast<VertexId>(d));

  // Chain ids are untouched by both gluings, so the labels and the designated
  // cut carry over unchanged.
  SimplicialComplex sum = connected_sum(out.complex, out.f0, cyclic, cyclic_facet);
  sum = connected_sum(sum, out.f1, cyclic, cyclic_facet);
  out.complex = std::move(sum);
  return out;
}

SimplicialComplex edge_flip(const SimplicialComplex& complex, Edge edge) {
  if (complex.dim() != 3) throw InvalidInput("edge_flip needs a triangulated 2-sphere");
  const auto [u, v] = make_edge(edge.first, edge.second);

  std::vector<VertexId> opposite;
  for (const auto& f : complex.facets()) {
    if (f.contains(u) && f.contains(v)) {
      for (VertexId w : f.vertices())
        if (w != u && w != v) opposite.push_back(w);
    }
  }
  if (opposite.size() != 2) {
    throw FlipIllegal("edge {" + std::to_string(u) + " " + std::to_string(v) + "} is not in exactly two triangles");
  }
  const VertexId w = opposite[0];
  const VertexId x = opposite[1];
  for (const auto& f : complex.facets()) {
    if (f.contains(w) && f.contains(x)) {
      throw FlipIllegal("opposite vertices " + std::to_string(w) + " and " + std::to_string(x) + " are already adjacent");
    }
  }
  if (vertex_degree_in_sphere(complex, u) < 4 || vertex_degree_in_sphere(complex, v) < 4) {
    throw FlipIllegal("flip would leave a vertex of degree below 3");
  }

  std::vector<Facet> facets;
  for (const auto& f : complex.facets()) {
    if (!(f.contains(u) && f.contains(v))) facets.push_back(f);
  }
  facets.push_back(Facet{u, w, x});
  facets.push_back(Facet{v, w, x});
  return SimplicialComplex(3, std::move(facets));
}

SimplicialComplex random_plane_triangulation(int n, int flip_count, std::uint64_t seed) {
  if (n < 4) throw InvalidInput("random_plane_triangulation needs n >= 4");
  if (flip_count < 0) throw InvalidInput("flip count must be non-negative");
  Rng rng(seed);
  const SimplicialComplex tetra = boundary_simplex(3);
  const Facet tetra_base{1, 2, 3};

  SimplicialComplex sphere = tetra;
  for (int i = 4; i < n; ++i) {
    const Facet target = sphere.facets()[uniform_below(rng, sphere.facet_count())];
    sphere = connected_sum(sphere, target, tetra, tetra_base);
  }

  for (int k = 0; k < flip_count; ++k) {
    std::vector<Edge> candidates = skeleton_graph(sphere).edges();
    shuffle(std::span<Edge>(candidates), rng);
    bool flipped = false;
    for (const auto& e : candidates) {
      try {
        sphere = edge_flip(sphere, e);
        flipped = true;
        break;
      } catch (const FlipIllegal&) {
      }
    }
    if (!flipped) break;
  }
  return sphere;
}

}  // namespace polycut
