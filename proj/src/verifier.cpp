#include "polycut/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "polycut/constructions.hpp"
#include "polycut/errors.hpp"
#include "polycut/facet_io.hpp"
#include "polycut/graph.hpp"
#include "polycut/random.hpp"
#include "polycut/report_json.hpp"

namespace polycut {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

bool boundary_counts_hold(const CutClassification& c, int d) {
  const auto bound = static_cast<std::size_t>(d);
  return c.n_x >= bound && c.n_xbar >= bound;
}

}  // namespace

VerificationReport analyze(const SimplicialComplex& complex, const Provenance& provenance,
                           const AnalyzeOptions& options) {
  const ValidationReport validation = validate(complex);
  if (!validation.ok()) throw InvalidInput("invalid complex: " + join(validation.problems, "; "));

  const Graph g = skeleton_graph(complex);
  const int d = complex.dim();
  const long bound = 4L * d - 7;

  VerificationReport r;
  r.d = d;
  r.n_vertices = g.vertex_count();
  r.provenance = provenance;
  r.delta = min_degree(g);
  r.lambda = edge_connectivity(g);
  const auto lambda = static_cast<long>(r.lambda);
  const auto delta = static_cast<long>(r.delta);

  r.theorem_applicable = d == 3 || lambda <= bound;
  r.corollary_holds = lambda >= std::min(delta, bound + 1);
  r.witness = find_nontrivial_min_cut(g, r.lambda);
  r.all_min_cuts_trivial = !r.witness.has_value();
  r.d_connected = g.vertex_count() > static_cast<std::size_t>(d) &&
                  vertex_connectivity_at_least(g, static_cast<std::size_t>(d));

  auto flag = [&r](std::string what) { r.contradictions.push_back(std::move(what)); };

  if (r.lambda > r.delta) flag("edge connectivity exceeds minimum degree");

  if (r.witness) {
    r.witness_classification = classify(g, *r.witness);
    if (r.witness->cardinality() != r.lambda) flag("witness cardinality differs from lambda");
    if (r.witness_classification->trivial) flag("witness cut is trivial");
    if (r.d_connected) r.lemma21_holds = boundary_counts_hold(*r.witness_classification, d);
  }

  const bool use_oracle = options.oracle == OracleMode::force ||
                          (options.oracle == OracleMode::automatic && g.vertex_count() <= kOracleMaxVertices);
  if (use_oracle) {
    const auto cuts = brute_force_min_cuts(g);
    r.oracle_checked = true;
    if (cuts.front().cardinality() != r.lambda) flag("exhaustive minimum cut differs from global_min_cut");
    bool oracle_nontrivial = false;
    for (const auto& cut : cuts) {
      const auto c = classify(g, cut);
      if (c.trivial) continue;
      oracle_nontrivial = true;
      if (r.d_connected) {
        r.lemma21_holds = r.lemma21_holds.value_or(true) && boundary_counts_hold(c, d);
      }
    }
    if (oracle_nontrivial == r.all_min_cuts_trivial) flag("exhaustive triviality verdict differs from flow search");
  }

  if (r.lemma21_holds == false) flag("nontrivial minimum cut with fewer than d boundary vertices on a side");

  // lambda >= min(delta, 4d-6) follows from triviality below 4d-7 plus
  // lambda <= delta; both are computed independently, so check they agree.
  const bool trivial_where_expected = !r.theorem_applicable || r.all_min_cuts_trivial;
  if (trivial_where_expected && r.lambda <= r.delta && !r.corollary_holds) {
    flag("connectivity bound inconsistent with the triviality verdict");
  }

  if (provenance.polytopal) {
    if (!r.d_connected) flag("polytope graph is not d-connected");
    if (r.theorem_applicable && !r.all_min_cuts_trivial) flag("nontrivial minimum edge cut with lambda <= 4d-7");
    if (!r.corollary_holds) flag("edge connectivity below min(delta, 4d-6)");
    if (d == 3 && r.lambda != r.delta) flag("plane triangulation with lambda != delta");
  }
  return r;
}

LinkReport verify_links(const SimplicialComplex& complex, std::uint64_t sample_seed) {
  LinkReport report;
  report.d = complex.dim();
  report.vertices_total = complex.vertex_count();

  std::vector<VertexId> targets(complex.vertices().begin(), complex.vertices().end());
  if (targets.size() > kLinkSampleThreshold) {
    Rng rng(sample_seed);
    shuffle(std::span<VertexId>(targets), rng);
    targets.resize(kLinkSampleSize);
    std::sort(targets.begin(), targets.end());
    report.sampled = true;
  }
  report.vertices_checked = targets.size();

  const Graph g = skeleton_graph(complex);
  const int d = complex.dim();
  for (VertexId v : targets) {
    auto fail = [&](std::string why) { report.failures.push_back({v, std::move(why)}); };
    const SimplicialComplex lk = link(complex, v);
    const ValidationReport valid = validate(lk);
    if (!valid.ok()) {
      fail("link is not a valid complex: " + join(valid.problems, "; "));
      continue;
    }
    const auto nbrs = g.neighbor_ids(v);
    if (!std::equal(nbrs.begin(), nbrs.end(), lk.vertices().begin(), lk.vertices().end())) {
      fail("link vertices differ from the neighbours of the vertex");
      continue;
    }
    if (d < 3) continue;
    const Graph lg = skeleton_graph(lk);
    const auto k = static_cast<std::size_t>(d - 1);
    if (lg.vertex_count() <= k || !vertex_connectivity_at_least(lg, k)) {
      fail("link graph is not " + std::to_string(k) + "-connected");
    }
  }
  return report;
}

std::optional<CampaignFamily> parse_family(const std::string& name) {
  if (name == "plane-triangulations") return CampaignFamily::plane_triangulations;
  if (name == "connected-sum-spheres") return CampaignFamily::connected_sum_spheres;
  if (name == "proposition-constructions") return CampaignFamily::proposition_constructions;
  return std::nullopt;
}

std::string family_name(CampaignFamily family) {
  switch (family) {
    case CampaignFamily::plane_triangulations:
      return "plane-triangulations";
    case CampaignFamily::connected_sum_spheres:
      return "connected-sum-spheres";
    case CampaignFamily::proposition_constructions:
      return "proposition-constructions";
  }
  return "unknown";
}

namespace {

void check_config(const CampaignConfig& c) {
  switch (c.family) {
    case CampaignFamily::plane_triangulations:
      if (c.n_min < 4 || c.n_max < c.n_min) throw InvalidInput("triangulation sizes need 4 <= n_min <= n_max");
      break;
    case CampaignFamily::connected_sum_spheres:
      if (c.d < 3) throw InvalidInput("connected-sum spheres need d >= 3");
      if (c.pieces_min < 1 || c.pieces_max < c.pieces_min) throw InvalidInput("piece counts need 1 <= min <= max");
      break;
    case CampaignFamily::proposition_constructions:
      if (c.d_min < 4 || c.d_max < c.d_min) throw InvalidInput("proposition constructions need 4 <= d_min <= d_max");
      break;
  }
}

std::pair<SimplicialComplex, std::string> random_connected_sum(int d, int pieces, Rng& rng) {
  auto random_piece = [&](std::string& name) {
    if (uniform_below(rng, 2) == 0) {
      name = "simplex";
      return boundary_simplex(d);
    }
    const int n = static_cast<int>(uniform_between(rng, d + 2, d + 6));
    name = "cyclic(" + std::to_string(d) + "," + std::to_string(n) + ")";
    return cyclic_boundary(d, n);
  };

  std::string name;
  SimplicialComplex sum = random_piece(name);
  std::string descriptor = "connected-sum d=" + std::to_string(d) + " pieces=[" + name;
  for (int i = 1; i < pieces; ++i) {
    SimplicialComplex piece = random_piece(name);
    const Facet fa = sum.facets()[uniform_below(rng, sum.facet_count())];
    const Facet fb = piece.facets()[uniform_below(rng, piece.facet_count())];
    std::vector<VertexId> images(fb.vertices().begin(), fb.vertices().end());
    shuffle(std::span<VertexId>(images), rng);
    FacetBijection pairing;
    for (std::size_t k = 0; k < fa.size(); ++k) pairing.emplace(fa.vertices()[k], images[k]);
    sum = connected_sum(sum, fa, piece, fb, pairing);
    descriptor += "," + name;
  }
  descriptor += "]";
  return {std::move(sum), std::move(descriptor)};
}

}  // namespace

std::pair<SimplicialComplex, Provenance> campaign_instance(const CampaignConfig& config, std::size_t index) {
  check_config(config);
  const std::uint64_t seed = derive_seed(config.seed, index);
  Rng rng(seed);
  Provenance p;
  p.seed = seed;
  p.polytopal = true;

  switch (config.family) {
    case CampaignFamily::plane_triangulations: {
      const int n = static_cast<int>(uniform_between(rng, config.n_min, config.n_max));
      const int flips = static_cast<int>(uniform_between(rng, 0, 10L * n));
      const std::uint64_t gen_seed = rng();
      p.construction = "triangulation n=" + std::to_string(n) + " flips=" + std::to_string(flips) +
                       " seed=" + std::to_string(gen_seed);
      return {random_plane_triangulation(n, flips, gen_seed), p};
    }
    case CampaignFamily::connected_sum_spheres: {
      const int pieces = static_cast<int>(uniform_between(rng, config.pieces_min, config.pieces_max));
      auto [complex, descriptor] = random_connected_sum(config.d, pieces, rng);
      p.construction = std::move(descriptor);
      return {std::move(complex), p};
    }
    case CampaignFamily::proposition_constructions: {
      const int span = config.d_max - config.d_min + 1;
      const int d = config.d_min + static_cast<int>(index % static_cast<std::size_t>(span));
      p.construction = "nontrivial-cut-polytope d=" + std::to_string(d);
      return {nontrivial_cut_polytope(d).complex, p};
    }
  }
  throw InvalidInput("unknown campaign family");
}

std::size_t CampaignSummary::passed() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const CampaignInstance& i) { return i.passed(); }));
}

std::size_t default_worker_count() {
  if (const char* env = std::getenv("POLYCUT_WORKERS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

CampaignSummary campaign(const CampaignConfig& config) {
  check_config(config);
  CampaignSummary summary;
  summary.config = config;
  summary.instances.resize(config.count);

  auto run_one = [&config](std::size_t index) {
    CampaignInstance inst;
    inst.index = index;
    try {
      auto [complex, provenance] = campaign_instance(config, index);
      inst.seed = provenance.seed;
      inst.descriptor = provenance.construction;
      inst.complex = complex;
      inst.report = analyze(complex, provenance);
      inst.links = verify_links(complex, provenance.seed);
      if (provenance.polytopal && !inst.links.ok()) {
        inst.report.contradictions.push_back("vertex link fails the polytope-boundary conditions");
      }
    } catch (const std::exception& e) {
      inst.report.contradictions.push_back(std::string("instance could not be analysed: ") + e.what());
    }
    return inst;
  };

  const std::size_t workers = std::min(config.workers ? config.workers : default_worker_count(),
                                       std::max<std::size_t>(config.count, 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) summary.instances[i] = run_one(i);
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  if (config.out_dir) write_contradiction_reports(summary, *config.out_dir);
  return summary;
}

std::size_t write_contradiction_reports(const CampaignSummary& summary, const std::filesystem::path& dir) {
  std::size_t written = 0;
  for (const auto& inst : summary.instances) {
    if (inst.passed()) continue;
    std::filesystem::create_directories(dir);
    const auto stem = dir / ("contradiction_" + std::to_string(inst.index));
    if (inst.complex.facet_count() > 0) write_facet_file(stem.string() + ".fl", inst.complex);
    std::ofstream(stem.string() + ".json") << instance_to_json(inst).dump(2) << '\n';
    ++written;
  }
  return written;
}

}  // namespace polycut
