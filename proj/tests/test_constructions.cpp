#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "oracles/hull_oracle.hpp"
#include "polycut/constructions.hpp"
#include "polycut/cuts.hpp"
#include "polycut/errors.hpp"
#include "polycut/graph.hpp"
#include "test_support.hpp"

using namespace polycut;
using polycut::testing::octahedron;

namespace {

std::set<Facet> facet_set(const SimplicialComplex& c) { return {c.facets().begin(), c.facets().end()}; }

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) out.push_back(g.degree(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("boundary_simplex") {
    CHECK(facet_set(boundary_simplex(3)) ==
          std::set<Facet>{Facet{1, 2, 3}, Facet{1, 2, 4}, Facet{1, 3, 4}, Facet{2, 3, 4}});
    const auto s4 = boundary_simplex(4);
    CHECK(s4.facet_count() == 5);
    CHECK(skeleton_graph(s4).edge_count() == 10);
    CHECK(facet_set(boundary_simplex(2)) == std::set<Facet>{Facet{1, 2}, Facet{1, 3}, Facet{2, 3}});
    CHECK_THROWS_AS(boundary_simplex(1), InvalidInput);
  }

  TEST_CASE("cyclic polygon and small cyclic polytopes") {
    CHECK(facet_set(cyclic_boundary(2, 6)) ==
          std::set<Facet>{Facet{1, 2}, Facet{2, 3}, Facet{3, 4}, Facet{4, 5}, Facet{5, 6}, Facet{1, 6}});

    const auto c46 = cyclic_boundary(4, 6);
    CHECK(c46.facet_count() == 9);
    CHECK(skeleton_graph(c46).edge_count() == 15);
    CHECK(facet_set(c46) == oracle::moment_curve_hull_facets(4, 6));

    const auto c36 = cyclic_boundary(3, 6);
    CHECK(c36.facet_count() == 8);
    CHECK(facet_set(c36) == oracle::moment_curve_hull_facets(3, 6));

    CHECK_THROWS_AS(cyclic_boundary(4, 4), InvalidInput);
    CHECK_THROWS_AS(cyclic_boundary(1, 5), InvalidInput);
  }

  TEST_CASE("Gale evenness agrees with the exact moment-curve hull for d <= 4, n <= 8") {
    for (int d = 2; d <= 4; ++d) {
      for (int n = d + 1; n <= 8; ++n) {
        CAPTURE(d);
        CAPTURE(n);
        const auto c = cyclic_boundary(d, n);
        CHECK(facet_set(c) == oracle::moment_curve_hull_facets(d, n));
        CHECK(validate(c).ok());
      }
    }
  }

  TEST_CASE("facet enumeration matches the evenness predicate over all subsets") {
    for (int d = 2; d <= 6; ++d) {
      for (int n = d + 1; n <= 11; ++n) {
        std::set<Facet> expected;
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
          if (std::popcount(mask) != d) continue;
          std::vector<VertexId> vs;
          for (int i = 0; i < n; ++i)
            if (mask >> i & 1U) vs.push_back(static_cast<VertexId>(i + 1));
          const Facet f(vs);
          if (gale_evenness(f, n)) expected.insert(f);
        }
        CHECK(facet_set(cyclic_boundary(d, n)) == expected);
      }
    }
  }

  TEST_CASE("cyclic polytopes of dimension >= 4 have complete skeletons") {
    for (int d = 4; d <= 6; ++d) {
      for (int n = d + 1; n <= d + 6; ++n) {
        const Graph g = skeleton_graph(cyclic_boundary(d, n));
        CHECK(g.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2));
      }
    }
  }

  TEST_CASE("connected sum of two tetrahedra is the 5-vertex stacked sphere") {
    const auto tetra = boundary_simplex(3);
    const auto sum = connected_sum(tetra, Facet{2, 3, 4}, tetra, Facet{1, 2, 3});
    CHECK(sum.vertex_count() == 5);
    CHECK(sum.facet_count() == 6);
    CHECK(validate(sum).ok());
    for (int d = 3; d <= 7; ++d) {
      const auto s = boundary_simplex(d);
      CHECK(connected_sum(s, s.facets()[0], s, s.facets()[1]).facet_count() == static_cast<std::size_t>(2 * d));
    }
  }

  TEST_CASE("connected sum renaming and explicit bijections") {
    const auto tetra = boundary_simplex(3);
    FacetBijection pairing{{1, 3}, {2, 1}, {3, 2}};
    const auto glued = connected_sum_mapped(tetra, Facet{1, 2, 3}, tetra, Facet{1, 2, 3}, pairing);
    CHECK(glued.b_renaming.at(3) == 1);
    CHECK(glued.b_renaming.at(1) == 2);
    CHECK(glued.b_renaming.at(2) == 3);
    CHECK(glued.b_renaming.at(4) == 5);
    CHECK(validate(glued.complex).ok());
  }

  TEST_CASE("connected sum errors") {
    const auto tetra = boundary_simplex(3);
    CHECK_THROWS_AS(connected_sum(tetra, Facet{1, 2, 5}, tetra, Facet{1, 2, 3}), NotFound);
    CHECK_THROWS_AS(connected_sum(tetra, Facet{1, 2, 3}, tetra, Facet{1, 2, 9}), NotFound);
    const auto s4 = boundary_simplex(4);
    CHECK_THROWS_AS(connected_sum(tetra, Facet{1, 2, 3}, s4, Facet{1, 2, 3, 4}), InvalidInput);
    CHECK_THROWS_AS(connected_sum(tetra, Facet{1, 2, 3}, tetra, Facet{1, 2, 3}, FacetBijection{{1, 1}, {2, 1}, {3, 2}}),
                    InvalidInput);
    CHECK_THROWS_AS(connected_sum(tetra, Facet{1, 2, 3}, tetra, Facet{1, 2, 3}, FacetBijection{{1, 1}, {2, 2}}),
                    InvalidInput);
    CHECK_THROWS_AS(connected_sum(tetra, Facet{1, 2, 3}, tetra, Facet{1, 2, 3}, FacetBijection{{1, 1}, {2, 2}, {4, 3}}),
                    InvalidInput);
  }

  TEST_CASE("connected sum facet count over random gluings") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const int d = static_cast<int>(uniform_between(rng, 3, 6));
      const auto a = cyclic_boundary(d, static_cast<int>(uniform_between(rng, d + 1, d + 5)));
      const auto b = cyclic_boundary(d, static_cast<int>(uniform_between(rng, d + 1, d + 5)));
      const Facet fa = a.facets()[uniform_below(rng, a.facet_count())];
      const Facet fb = b.facets()[uniform_below(rng, b.facet_count())];
      const auto sum = connected_sum(a, fa, b, fb);
      CHECK(sum.facet_count() == a.facet_count() + b.facet_count() - 2);
      CHECK(sum.vertex_count() == a.vertex_count() + b.vertex_count() - static_cast<std::size_t>(d));
      CHECK(validate(sum).ok());
    }
  }

  TEST_CASE("cyclic polytope glued onto the chain validates") {
    const auto chain = stacked_chain(4);
    const auto sum = connected_sum(chain.complex, chain.f0, cyclic_boundary(4, 11), Facet{1, 2, 3, 4});
    CHECK(sum.vertex_count() == 8 + 11 - 4);
    CHECK(validate(sum).ok());
  }

  TEST_CASE("stacked chain for d = 4") {
    const auto chain = stacked_chain(4);
    CHECK(chain.complex.vertex_count() == 8);
    CHECK(skeleton_graph(chain.complex).edge_count() == 22);
    CHECK(chain.designated_cut.size() == 10);
    CHECK(chain.f0 == Facet{1, 2, 3, 4});
    CHECK(chain.f1 == Facet{5, 6, 7, 8});
    CHECK(chain.labels.at("x_1") == 1);
    CHECK(chain.labels.at("x_8") == 8);
    CHECK(stacked_chain(5).designated_cut.size() == 15);
    CHECK_THROWS_AS(stacked_chain(2), InvalidInput);
  }

  TEST_CASE("stacked chain counts for d = 3..10") {
    for (int d = 3; d <= 10; ++d) {
      CAPTURE(d);
      const auto chain = stacked_chain(d);
      const Graph g = skeleton_graph(chain.complex);
      CHECK(validate(chain.complex).ok());
      CHECK(g.edge_count() == static_cast<std::size_t>((3 * d * d - d) / 2));
      CHECK(g.edge_count() == static_cast<std::size_t>((d + 1) * d / 2 + (d - 1) * d));
      CHECK(chain.complex.has_facet(chain.f0));
      CHECK(chain.complex.has_facet(chain.f1));
      for (VertexId v : chain.f0.vertices()) CHECK_FALSE(chain.f1.contains(v));
      for (const auto& [u, v] : chain.designated_cut) {
        CHECK(chain.f0.contains(u));
        CHECK(chain.f1.contains(v));
      }
      if (d >= 4) CHECK(chain.designated_cut.size() == static_cast<std::size_t>((d * d + d) / 2));
      // The designated cut is the full crossing set of the f0/f1 split.
      const std::vector<VertexId> side(chain.f0.vertices().begin(), chain.f0.vertices().end());
      CHECK(make_cut(g, side).edges == chain.designated_cut);
    }
  }

  TEST_CASE("nontrivial cut polytope for d = 4") {
    const auto p = nontrivial_cut_polytope(4);
    CHECK(cyclic_factor_size(4) == 11);
    CHECK(p.complex.vertex_count() == 22);
    CHECK(validate(p.complex).ok());
    CHECK(p.designated_cut.size() == 10);
    const Graph g = skeleton_graph(p.complex);
    CHECK(min_degree(g) == 10);
    const auto parts = g.without_edges(p.designated_cut).connected_components();
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 11);
    CHECK(parts[1].size() == 11);
    // Designated cut is exactly E(X, X̄) for the component holding f0.
    CHECK(make_cut(g, parts[0]).edges == p.designated_cut);
    CHECK_THROWS_AS(nontrivial_cut_polytope(3), InvalidInput);
  }

  TEST_CASE("nontrivial cut polytope for d = 4..8") {
    for (int d = 4; d <= 8; ++d) {
      CAPTURE(d);
      const auto p = nontrivial_cut_polytope(d);
      const auto target = static_cast<std::size_t>((d * d + d) / 2);
      const Graph g = skeleton_graph(p.complex);
      CHECK(validate(p.complex).ok());
      CHECK(p.complex.vertex_count() == static_cast<std::size_t>(2 * d + 2 * (cyclic_factor_size(d) - d)));
      CHECK(p.designated_cut.size() == target);
      CHECK(min_degree(g) >= target);
      const auto parts = g.without_edges(p.designated_cut).connected_components();
      CHECK(parts.size() == 2);
      // Inclusion-minimal: both sides induce connected subgraphs.
      for (const auto& part : parts) CHECK(g.induced(part).connected());
    }
  }

  TEST_CASE("random plane triangulation small cases") {
    CHECK(random_plane_triangulation(4, 0, 1) == boundary_simplex(3));
    const auto five = random_plane_triangulation(5, 0, 9);
    CHECK(five.vertex_count() == 5);
    CHECK(min_degree(skeleton_graph(five)) == 3);
    const auto t = random_plane_triangulation(20, 200, 1);
    CHECK(validate(t).ok());
    CHECK(t.vertex_count() == 20);
    CHECK(skeleton_graph(t).edge_count() == 54);
    CHECK(random_plane_triangulation(20, 200, 1) == t);
    CHECK_THROWS_AS(random_plane_triangulation(3, 0, 1), InvalidInput);
  }

  TEST_CASE("random plane triangulations are 3-connected spheres") {
    std::set<std::size_t> min_degrees;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const int n = 8 + static_cast<int>(seed % 25);
      const auto t = random_plane_triangulation(n, static_cast<int>(seed * 7 % 300), seed);
      const Graph g = skeleton_graph(t);
      CHECK(validate(t).ok());
      CHECK(g.vertex_count() == static_cast<std::size_t>(n));
      CHECK(g.edge_count() == static_cast<std::size_t>(3 * n - 6));
      CHECK(vertex_connectivity_at_least(g, 3));
      min_degrees.insert(min_degree(g));
    }
    // Flips push the minimum degree above the stacked value of 3.
    CHECK(min_degrees.size() >= 2);
  }

  TEST_CASE("edge flips") {
    const auto oct = octahedron();
    for (const auto& e : skeleton_graph(oct).edges()) {
      const auto flipped = edge_flip(oct, e);
      CHECK(validate(flipped).ok());
      CHECK(degree_sequence(skeleton_graph(flipped)) == std::vector<std::size_t>{3, 3, 4, 4, 5, 5});
    }

    const auto tetra = boundary_simplex(3);
    for (const auto& e : skeleton_graph(tetra).edges()) CHECK_THROWS_AS(edge_flip(tetra, e), FlipIllegal);

    // Flipping 1-3 in the octahedron creates 5-6; flipping that back restores it.
    const auto once = edge_flip(oct, Edge{1, 3});
    CHECK(skeleton_graph(once).adjacent(5, 6));
    CHECK(edge_flip(once, Edge{5, 6}) == oct);

    CHECK_THROWS_AS(edge_flip(oct, Edge{1, 2}), FlipIllegal);
    CHECK_THROWS_AS(edge_flip(boundary_simplex(4), Edge{1, 2}), InvalidInput);
  }
}
