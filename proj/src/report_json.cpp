#include "polycut/report_json.hpp"

namespace polycut {

namespace {

Json vertex_list(std::span<const VertexId> vs) { return Json(std::vector<VertexId>(vs.begin(), vs.end())); }

Json edge_list(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

Json to_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["pure"] = r.pure;
  j["no_duplicate_facets"] = r.no_duplicate_facets;
  j["pseudomanifold"] = r.pseudomanifold;
  j["dual_connected"] = r.dual_connected;
  j["euler_characteristic"] = optional_json(r.euler_characteristic);
  j["euler_ok"] = r.euler_ok;
  j["problems"] = r.problems;
  return j;
}

Json to_json(const EdgeCut& cut) {
  Json j;
  j["side_x"] = vertex_list(cut.side_x);
  j["edges"] = edge_list(cut.edges);
  j["cardinality"] = cut.cardinality();
  return j;
}

Json to_json(const CutClassification& c) {
  Json j;
  j["trivial"] = c.trivial;
  j["star_vertex"] = optional_json(c.star_vertex);
  j["n_x"] = c.n_x;
  j["n_xbar"] = c.n_xbar;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["status"] = r.contradiction() ? "CONTRADICTION" : "OK";
  j["d"] = r.d;
  j["n_vertices"] = r.n_vertices;
  j["delta"] = r.delta;
  j["lambda"] = r.lambda;
  j["theorem_applicable"] = r.theorem_applicable;
  j["all_min_cuts_trivial"] = r.all_min_cuts_trivial;
  j["corollary_holds"] = r.corollary_holds;
  j["lemma21_holds"] = optional_json(r.lemma21_holds);
  j["d_connected"] = r.d_connected;
  j["oracle_checked"] = r.oracle_checked;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["witness_classification"] = r.witness_classification ? to_json(*r.witness_classification) : Json(nullptr);
  j["provenance"] = {{"construction", r.provenance.construction},
                     {"seed", r.provenance.seed},
                     {"polytopal", r.provenance.polytopal}};
  j["contradictions"] = r.contradictions;
  return j;
}

Json to_json(const LinkReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["d"] = r.d;
  j["vertices_total"] = r.vertices_total;
  j["vertices_checked"] = r.vertices_checked;
  j["sampled"] = r.sampled;
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"vertex", f.vertex}, {"reason", f.reason}});
  j["failures"] = failures;
  return j;
}

Json instance_to_json(const CampaignInstance& inst) {
  Json j;
  j["index"] = inst.index;
  j["status"] = inst.passed() ? "OK" : "CONTRADICTION";
  j["report"] = to_json(inst.report);
  j["links"] = to_json(inst.links);
  return j;
}

Json to_json(const CampaignSummary& s) {
  const auto& c = s.config;
  Json config;
  config["family"] = family_name(c.family);
  config["count"] = c.count;
  config["seed"] = c.seed;
  switch (c.family) {
    case CampaignFamily::plane_triangulations:
      config["n_min"] = c.n_min;
      config["n_max"] = c.n_max;
      break;
    case CampaignFamily::connected_sum_spheres:
      config["d"] = c.d;
      config["pieces_min"] = c.pieces_min;
      config["pieces_max"] = c.pieces_max;
      break;
    case CampaignFamily::proposition_constructions:
      config["d_min"] = c.d_min;
      config["d_max"] = c.d_max;
      break;
  }

  Json instances = Json::array();
  for (const auto& inst : s.instances) {
    const auto& r = inst.report;
    Json row;
    row["index"] = inst.index;
    row["seed"] = inst.seed;
    row["construction"] = inst.descriptor;
    row["d"] = r.d;
    row["n_vertices"] = r.n_vertices;
    row["delta"] = r.delta;
    row["lambda"] = r.lambda;
    row["theorem_applicable"] = r.theorem_applicable;
    row["all_min_cuts_trivial"] = r.all_min_cuts_trivial;
    row["corollary_holds"] = r.corollary_holds;
    row["lemma21_holds"] = optional_json(r.lemma21_holds);
    row["witness_cardinality"] = r.witness ? Json(r.witness->cardinality()) : Json(nullptr);
    row["oracle_checked"] = r.oracle_checked;
    row["links_ok"] = inst.links.ok();
    row["status"] = inst.passed() ? "OK" : "CONTRADICTION";
    instances.push_back(std::move(row));
  }

  Json j;
  j["config"] = config;
  j["passed"] = s.passed();
  j["failed"] = s.failed();
  j["instances"] = instances;
  return j;
}

Json labels_sidecar(const LabeledConstruction& construction) {
  Json labels = Json::object();
  // Order x_1, x_2, ... by vertex id rather than lexicographically by name.
  std::vector<std::pair<VertexId, std::string>> by_id;
  for (const auto& [name, id] : construction.labels) by_id.emplace_back(id, name);
  std::sort(by_id.begin(), by_id.end());
  for (const auto& [id, name] : by_id) labels[name] = id;

  Json j;
  j["labels"] = labels;
  j["f0"] = vertex_list(construction.f0.vertices());
  j["f1"] = vertex_list(construction.f1.vertices());
  j["designated_cut"] = edge_list(construction.designated_cut);
  return j;
}

}  // namespace polycut
