#ifndef POLYCUT_VERIFIER_HPP
#define POLYCUT_VERIFIER_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycut/complex.hpp"
#include "polycut/cuts.hpp"

namespace polycut {

/// Where a complex came from. Bound checks only count as violations when
/// `polytopal` is set, i.e. the construction guarantees a polytope.
struct Provenance {
  std::string construction;
  std::uint64_t seed = 0;
  bool polytopal = false;
};

enum class OracleMode {
  automatic,  // cross-check with brute force when n <= kOracleMaxVertices
  force,      // always cross-check; OracleScaleExceeded above the limit
  off,
};

struct AnalyzeOptions {
  OracleMode oracle = OracleMode::automatic;
};

struct VerificationReport {
  int d = 0;
  std::size_t n_vertices = 0;
  std::size_t delta = 0;
  std::size_t lambda = 0;
  /// lambda <= 4d - 7; always true for d = 3 where every plane triangulation is covered.
  bool theorem_applicable = false;
  bool all_min_cuts_trivial = true;
  /// lambda >= min(delta, 4d - 6)
  bool corollary_holds = false;
  /// Boundary counts of the witness, filled when a witness exists and the
  /// graph was verified d-connected.
  std::optional<bool> lemma21_holds;
  std::optional<EdgeCut> witness;
  std::optional<CutClassification> witness_classification;
  /// Graph verified d-connected (vertex connectivity).
  bool d_connected = false;
  bool oracle_checked = false;
  Provenance provenance;
  /// Empty when every check passed.
  std::vector<std::string> contradictions;

  bool contradiction() const { return !contradictions.empty(); }
};

/// Throws InvalidInput (carrying the validation problems) for invalid complexes.
VerificationReport analyze(const SimplicialComplex& complex, const Provenance& provenance,
                           const AnalyzeOptions& options = {});

struct LinkFailure {
  VertexId vertex = 0;
  std::string reason;
};

struct LinkReport {
  int d = 0;
  std::size_t vertices_total = 0;
  std::size_t vertices_checked = 0;
  bool sampled = false;
  std::vector<LinkFailure> failures;

  bool ok() const { return failures.empty(); }
};

inline constexpr std::size_t kLinkSampleThreshold = 200;
inline constexpr std::size_t kLinkSampleSize = 50;

/**
 * Necessary conditions for every vertex link of a d-polytope boundary: the
 * link validates as a complex of dimension d-1, spans exactly the skeleton
 * neighbours of the vertex, and its skeleton is (d-1)-connected. Above
 * kLinkSampleThreshold vertices a uniform sample of kLinkSampleSize vertices
 * (drawn with `sample_seed`) is checked instead.
 */
LinkReport verify_links(const SimplicialComplex& complex, std::uint64_t sample_seed = 0);

enum class CampaignFamily { plane_triangulations, connected_sum_spheres, proposition_constructions };

std::optional<CampaignFamily> parse_family(const std::string& name);
std::string family_name(CampaignFamily family);

struct CampaignConfig {
  CampaignFamily family = CampaignFamily::plane_triangulations;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  /// plane triangulations: vertex count range
  int n_min = 10;
  int n_max = 40;
  /// connected-sum spheres: polytope dimension
  int d = 4;
  /// proposition constructions cycle through d_min..d_max
  int d_min = 4;
  int d_max = 8;
  /// connected-sum spheres: number of glued pieces
  int pieces_min = 2;
  int pieces_max = 5;
  /// 0 = hardware concurrency
  std::size_t workers = 0;
  /// Contradiction reports are written here when set.
  std::optional<std::filesystem::path> out_dir;
};

struct CampaignInstance {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string descriptor;
  VerificationReport report;
  LinkReport links;
  SimplicialComplex complex;

  bool passed() const { return !report.contradiction() && links.ok(); }
};

struct CampaignSummary {
  CampaignConfig config;
  std::vector<CampaignInstance> instances;

  std::size_t passed() const;
  std::size_t failed() const { return instances.size() - passed(); }
};

/// Throws InvalidInput on nonsensical ranges.
CampaignSummary campaign(const CampaignConfig& config);

/// Writes contradiction_<index>.fl and .json for every failed instance.
/// Returns the number of instances written.
std::size_t write_contradiction_reports(const CampaignSummary& summary, const std::filesystem::path& dir);

/// Generates instance `index` of the campaign without analysing it.
std::pair<SimplicialComplex, Provenance> campaign_instance(const CampaignConfig& config, std::size_t index);

/// Reads POLYCUT_WORKERS, falling back to the hardware concurrency.
std::size_t default_worker_count();

}  // namespace polycut

#endif  // POLYCUT_VERIFIER_HPP
