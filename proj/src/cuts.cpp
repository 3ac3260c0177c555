#include "polycut/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>

#include "flow_network.hpp"
#include "polycut/errors.hpp"

namespace polycut {

namespace {

std::vector<bool> membership(const Graph& g, std::span<const VertexId> vs, const char* what) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : vs) {
    if (!g.has_vertex(v)) throw InvalidInput(std::string(what) + " names vertex " + std::to_string(v) + " not in the graph");
    in[g.index_of(v)] = true;
  }
  return in;
}

EdgeCut cut_from_membership(const Graph& g, const std::vector<bool>& in_x) {
  EdgeCut cut;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (!in_x[i]) continue;
    cut.side_x.push_back(g.id(i));
    for (std::size_t j : g.neighbors(i)) {
      if (!in_x[j]) cut.edges.push_back(make_edge(g.id(i), g.id(j)));
    }
  }
  std::sort(cut.edges.begin(), cut.edges.end());
  return cut;
}

struct TerminalFlow {
  std::size_t value = 0;
  std::vector<bool> source_side;  // indexed by graph vertex
};

// Contract s_in to node 0 and t_in to node 1; every other vertex keeps a node.
TerminalFlow terminal_flow(const Graph& g, const std::vector<bool>& s_in, const std::vector<bool>& t_in,
                           std::size_t limit, bool want_side) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> node(n);
  std::size_t next = 2;
  for (std::size_t i = 0; i < n; ++i) node[i] = s_in[i] ? 0 : t_in[i] ? 1 : next++;

  detail::FlowNetwork net(next);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : g.neighbors(i)) {
      if (i < j && node[i] != node[j]) net.add_arc_pair(node[i], node[j], 1, 1);
    }
  }
  TerminalFlow out;
  out.value = net.max_flow(0, 1, limit);
  if (want_side) {
    const auto reach = net.residual_reachable(0);
    out.source_side.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.source_side[i] = reach[node[i]];
  }
  return out;
}

void check_terminals(const std::vector<bool>& s_in, const std::vector<bool>& t_in) {
  bool any_s = false;
  bool any_t = false;
  for (std::size_t i = 0; i < s_in.size(); ++i) {
    if (s_in[i] && t_in[i]) throw InvalidInput("source and sink sets overlap");
    any_s = any_s || s_in[i];
    any_t = any_t || t_in[i];
  }
  if (!any_s || !any_t) throw InvalidInput("source and sink sets must be nonempty");
}

// Internally vertex-disjoint s-t paths, capped at `limit`.
std::size_t vertex_disjoint_paths(const Graph& g, std::size_t s, std::size_t t, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  const int big = static_cast<int>(n);
  detail::FlowNetwork net(2 * n);  // 2i = in, 2i+1 = out
  for (std::size_t i = 0; i < n; ++i) {
    net.add_arc_pair(2 * i, 2 * i + 1, (i == s || i == t) ? big : 1, 0);
    for (std::size_t j : g.neighbors(i)) net.add_arc_pair(2 * i + 1, 2 * j, 1, 0);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

}  // namespace

EdgeCut make_cut(const Graph& g, std::span<const VertexId> side_x) {
  const auto in_x = membership(g, side_x, "cut side");
  const auto count = static_cast<std::size_t>(std::count(in_x.begin(), in_x.end(), true));
  if (count == 0 || count == g.vertex_count()) throw InvalidInput("cut side must be a nonempty proper subset");
  return cut_from_membership(g, in_x);
}

EdgeCut global_min_cut(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InvalidInput("global minimum cut needs at least two vertices");

  const auto components = g.connected_components();
  if (components.size() > 1) return make_cut(g, components.front());

  // Stoer-Wagner on a dense weight matrix; groups[i] lists the original
  // vertices merged into i.
  std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : g.neighbors(i)) w[i][j] = 1;
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[i] = {i};
  std::vector<bool> merged(n, false);

  int best = std::numeric_limits<int>::max();
  std::vector<std::size_t> best_side;
  std::vector<int> key(n);
  std::vector<bool> added(n);

  for (std::size_t phase = n; phase > 1; --phase) {
    std::fill(key.begin(), key.end(), 0);
    std::fill(added.begin(), added.end(), false);
    std::size_t prev = n;
    std::size_t last = n;
    for (std::size_t step = 0; step < phase; ++step) {
      std::size_t pick = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (merged[i] || added[i]) continue;
        if (pick == n || key[i] > key[pick]) pick = i;
      }
      added[pick] = true;
      prev = last;
      last = pick;
      for (std::size_t i = 0; i < n; ++i) {
        if (!merged[i] && !added[i]) key[i] += w[pick][i];
      }
    }
    if (key[last] < best) {
      best = key[last];
      best_side = groups[last];
    }
    groups[prev].insert(groups[prev].end(), groups[last].begin(), groups[last].end());
    for (std::size_t i = 0; i < n; ++i) {
      w[prev][i] += w[last][i];
      w[i][prev] = w[prev][i];
    }
    w[prev][prev] = 0;
    merged[last] = true;
  }

  std::vector<bool> in_x(n, false);
  for (std::size_t i : best_side) in_x[i] = true;
  return cut_from_membership(g, in_x);
}

std::size_t edge_connectivity(const Graph& g) { return global_min_cut(g).cardinality(); }

EdgeCut min_cut_between(const Graph& g, std::span<const VertexId> s_set, std::span<const VertexId> t_set) {
  const auto s_in = membership(g, s_set, "source set");
  const auto t_in = membership(g, t_set, "sink set");
  check_terminals(s_in, t_in);
  const auto flow = terminal_flow(g, s_in, t_in, std::numeric_limits<std::size_t>::max(), true);
  return cut_from_membership(g, flow.source_side);
}

std::size_t edge_disjoint_paths(const Graph& g, std::span<const VertexId> s_set, std::span<const VertexId> t_set,
                                std::size_t limit) {
  const auto s_in = membership(g, s_set, "source set");
  const auto t_in = membership(g, t_set, "sink set");
  check_terminals(s_in, t_in);
  return terminal_flow(g, s_in, t_in, limit, false).value;
}

std::vector<EdgeCut> brute_force_min_cuts(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.vertex_count();
  if (n > max_n || n > 63) {
    throw OracleScaleExceeded("exhaustive cut enumeration refused for " + std::to_string(n) + " vertices (limit " +
                              std::to_string(std::min<std::size_t>(max_n, 63)) + ")");
  }
  if (n < 2) throw InvalidInput("cut enumeration needs at least two vertices");

  std::vector<std::uint64_t> nbr(n, 0);
  std::vector<int> deg(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : g.neighbors(i)) nbr[i] |= std::uint64_t{1} << j;
    deg[i] = static_cast<int>(g.degree(i));
  }

  // Gray-code walk over subsets of the first n-1 vertices; the last vertex
  // stays on the complement side so each bipartition is seen once.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  std::uint64_t mask = 0;
  int cut = 0;
  int best = std::numeric_limits<int>::max();
  std::vector<std::uint64_t> best_masks;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto v = static_cast<std::size_t>(std::countr_zero(step));
    const std::uint64_t bit = std::uint64_t{1} << v;
    const int inside = std::popcount(nbr[v] & mask & ~bit);
    if (mask & bit) {
      mask &= ~bit;
      cut -= deg[v] - 2 * inside;
    } else {
      mask |= bit;
      cut += deg[v] - 2 * inside;
    }
    if (cut < best) {
      best = cut;
      best_masks.clear();
    }
    if (cut == best) best_masks.push_back(mask);
  }

  std::sort(best_masks.begin(), best_masks.end());
  std::vector<EdgeCut> cuts;
  cuts.reserve(best_masks.size());
  for (std::uint64_t m : best_masks) {
    std::vector<bool> in_x(n, false);
    for (std::size_t i = 0; i < n; ++i) in_x[i] = (m >> i) & 1U;
    cuts.push_back(cut_from_membership(g, in_x));
  }
  return cuts;
}

CutClassification classify(const Graph& g, const EdgeCut& cut) {
  const EdgeCut recomputed = make_cut(g, cut.side_x);
  if (recomputed.edges != cut.edges) throw InvalidInput("cut edges do not match the crossing set of its side");

  const auto in_x = membership(g, cut.side_x, "cut side");
  const std::size_t x_size = cut.side_x.size();
  const std::size_t xbar_size = g.vertex_count() - x_size;

  CutClassification c;
  std::set<VertexId> touched;
  for (const auto& [a, b] : cut.edges) {
    touched.insert(a);
    touched.insert(b);
  }
  for (VertexId v : touched) {
    if (in_x[g.index_of(v)]) {
      ++c.n_x;
    } else {
      ++c.n_xbar;
    }
  }
  c.trivial = std::min(x_size, xbar_size) == 1;
  if (c.trivial) {
    VertexId star = 0;
    if (x_size == 1) {
      star = cut.side_x.front();
    } else {
      for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (!in_x[i]) star = g.id(i);
    }
    c.star_vertex = star;
    if (cut.cardinality() != g.degree(g.index_of(star))) {
      throw InvalidInput("singleton-side cut is not the star of its vertex");
    }
  }
  return c;
}

std::optional<EdgeCut> find_nontrivial_min_cut(const Graph& g, std::size_t lambda) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InvalidInput("nontrivial cut search needs at least two vertices");
  if (lambda != edge_connectivity(g)) throw InvalidInput("lambda does not equal the edge connectivity of the graph");
  if (n < 4) return std::nullopt;

  std::size_t v0 = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (g.degree(i) < g.degree(v0)) v0 = i;

  for (std::size_t b : g.neighbors(v0)) {
    std::vector<bool> s_in(n, false);
    s_in[v0] = s_in[b] = true;
    for (std::size_t t = 0; t < n; ++t) {
      if (s_in[t]) continue;
      std::vector<bool> t_in(n, false);
      t_in[t] = true;
      const auto flow = terminal_flow(g, s_in, t_in, lambda, true);
      if (flow.value != lambda) continue;
      const auto opposite = static_cast<std::size_t>(std::count(flow.source_side.begin(), flow.source_side.end(), false));
      if (opposite >= 2) return cut_from_membership(g, flow.source_side);
    }
  }
  return std::nullopt;
}

bool vertex_connectivity_at_least(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (k < 1) throw InvalidInput("connectivity threshold must be at least 1");
  if (n <= k) throw InvalidInput("k-connectivity needs more than k vertices");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t w = 0; w < n; ++w) {
      if (w == i || g.adjacent(g.id(i), g.id(w))) continue;
      if (vertex_disjoint_paths(g, i, w, k - 1) < k) return false;
    }
  }
  return true;
}

}  // namespace polycut
