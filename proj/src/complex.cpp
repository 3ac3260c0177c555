#include "polycut/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "polycut/errors.hpp"

namespace polycut {

Facet::Facet(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InvalidInput("facet has a repeated vertex");
  }
}

Facet::Facet(std::initializer_list<VertexId> vertices)
    : Facet(std::vector<VertexId>(vertices)) {}

bool Facet::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Facet Facet::without(VertexId v) const {
  if (!contains(v)) throw NotFound("vertex " + std::to_string(v) + " not in facet " + to_string());
  std::vector<VertexId> rest;
  rest.reserve(vertices_.size() - 1);
  std::copy_if(vertices_.begin(), vertices_.end(), std::back_inserter(rest),
               [v](VertexId w) { return w != v; });
  return Facet(std::move(rest));
}

std::string Facet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? " " : "") << vertices_[i];
  os << '}';
  return os.str();
}

SimplicialComplex::SimplicialComplex(int dim, std::vector<Facet> facets)
    : dim_(dim), facets_(std::move(facets)) {
  if (dim_ < 1) throw InvalidInput("complex dimension must be at least 1");
  std::sort(facets_.begin(), facets_.end());
  std::set<VertexId> all;
  for (const auto& f : facets_) all.insert(f.vertices().begin(), f.vertices().end());
  vertices_.assign(all.begin(), all.end());
}

bool SimplicialComplex::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::has_facet(const Facet& f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f);
}

VertexId SimplicialComplex::max_vertex() const {
  if (vertices_.empty()) throw InvalidInput("complex has no vertices");
  return vertices_.back();
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

ValidationReport validate(const SimplicialComplex& complex) {
  const auto facets = complex.facets();
  if (facets.empty()) throw InvalidInput("complex has an empty facet list");

  ValidationReport report;
  const auto d = static_cast<std::size_t>(complex.dim());

  report.pure = std::all_of(facets.begin(), facets.end(),
                            [d](const Facet& f) { return f.size() == d; });
  if (!report.pure) {
    for (const auto& f : facets) {
      if (f.size() != d) {
        report.problems.push_back("facet " + f.to_string() + " has " + std::to_string(f.size()) +
                                  " vertices, expected " + std::to_string(d));
        break;
      }
    }
  }

  report.no_duplicate_facets = std::adjacent_find(facets.begin(), facets.end()) == facets.end();
  if (!report.no_duplicate_facets) report.problems.push_back("duplicate facets");

  // ridge -> indices of facets containing it
  std::map<Facet, std::vector<std::size_t>> ridges;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (VertexId v : facets[i].vertices()) ridges[facets[i].without(v)].push_back(i);
  }

  report.pseudomanifold = true;
  DisjointSets dual(facets.size());
  for (const auto& [ridge, owners] : ridges) {
    if (owners.size() != 2) {
      if (report.pseudomanifold) {
        report.problems.push_back("ridge " + ridge.to_string() + " lies in " +
                                  std::to_string(owners.size()) + " facet(s)");
      }
      report.pseudomanifold = false;
    }
    for (std::size_t k = 1; k < owners.size(); ++k) dual.unite(owners[0], owners[k]);
  }

  report.dual_connected = true;
  for (std::size_t i = 1; i < facets.size(); ++i) {
    if (dual.find(i) != dual.find(0)) {
      report.dual_connected = false;
      report.problems.push_back("facet-ridge graph is disconnected");
      break;
    }
  }

  if (complex.dim() == 3) {
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& f : facets) {
      const auto vs = f.vertices();
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) edges.emplace(vs[a], vs[b]);
    }
    const long chi = static_cast<long>(complex.vertex_count()) - static_cast<long>(edges.size()) +
                     static_cast<long>(facets.size());
    report.euler_characteristic = chi;
    report.euler_ok = chi == 2;
    if (!report.euler_ok) report.problems.push_back("n - e + f = " + std::to_string(chi) + ", expected 2");
  }
  return report;
}

SimplicialComplex link(const SimplicialComplex& complex, VertexId v) {
  if (!complex.has_vertex(v)) throw NotFound("vertex " + std::to_string(v) + " is not in the complex");
  if (complex.dim() < 2) throw InvalidInput("link needs a complex of dimension at least 2");
  std::vector<Facet> rest;
  for (const auto& f : complex.facets()) {
    if (f.contains(v)) rest.push_back(f.without(v));
  }
  return SimplicialComplex(complex.dim() - 1, std::move(rest));
}

}  // namespace polycut
