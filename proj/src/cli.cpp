#include "polycut/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>

#include "polycut/constructions.hpp"
#include "polycut/errors.hpp"
#include "polycut/facet_io.hpp"
#include "polycut/report_json.hpp"
#include "polycut/verifier.hpp"

namespace polycut {

namespace {

struct ConstructOptions {
  std::string kind;
  std::optional<int> d;
  std::optional<int> n;
  int flips = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct AnalyzeCliOptions {
  std::string path;
  bool oracle = false;
  bool no_oracle = false;
  bool assume_polytopal = false;
};

struct CampaignCliOptions {
  std::string family;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::string out;
  int d = 4;
  int n_min = 10;
  int n_max = 40;
  int d_min = 4;
  int d_max = 8;
  std::size_t workers = 0;
};

int require_d(const ConstructOptions& o) {
  if (!o.d) throw InvalidInput("--d is required for --kind " + o.kind);
  return *o.d;
}

int do_construct(const ConstructOptions& o, std::ostream& out) {
  std::optional<LabeledConstruction> labeled;
  SimplicialComplex complex;
  if (o.kind == "simplex") {
    complex = boundary_simplex(require_d(o));
  } else if (o.kind == "cyclic") {
    if (!o.n) throw InvalidInput("--n is required for --kind cyclic");
    complex = cyclic_boundary(require_d(o), *o.n);
  } else if (o.kind == "stacked-chain") {
    labeled = stacked_chain(require_d(o));
  } else if (o.kind == "nontrivial") {
    labeled = nontrivial_cut_polytope(require_d(o));
  } else if (o.kind == "triangulation") {
    if (o.d && *o.d != 3) throw InvalidInput("triangulations are 3-dimensional; got --d " + std::to_string(*o.d));
    if (!o.n) throw InvalidInput("--n is required for --kind triangulation");
    complex = random_plane_triangulation(*o.n, o.flips, o.seed);
  } else {
    throw InvalidInput("unknown kind '" + o.kind + "'");
  }
  if (labeled) complex = labeled->complex;

  write_facet_file(o.out, complex);
  out << "wrote " << o.out << " (dim " << complex.dim() << ", " << complex.vertex_count() << " vertices, "
      << complex.facet_count() << " facets)\n";
  if (labeled) {
    const std::string sidecar = o.out + ".labels.json";
    std::ofstream(sidecar) << labels_sidecar(*labeled).dump(2) << '\n';
    out << "wrote " << sidecar << '\n';
  }
  return kExitOk;
}

int do_validate(const std::string& path, std::ostream& out) {
  const SimplicialComplex complex = read_facet_file(path);
  const ValidationReport report = validate(complex);
  out << to_json(report).dump(2) << '\n';
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int do_analyze(const AnalyzeCliOptions& o, std::ostream& out) {
  const SimplicialComplex complex = read_facet_file(o.path);
  AnalyzeOptions options;
  if (o.oracle) options.oracle = OracleMode::force;
  if (o.no_oracle) options.oracle = OracleMode::off;
  if (o.oracle && complex.vertex_count() > kOracleMaxVertices) {
    throw OracleScaleExceeded("--oracle needs at most " + std::to_string(kOracleMaxVertices) + " vertices, file has " +
                              std::to_string(complex.vertex_count()));
  }

  Provenance provenance;
  provenance.construction = "file:" + o.path;
  // A 2-dimensional pseudomanifold whose vertex links are all cycles is a
  // 2-sphere, hence polytopal by Steinitz.
  const ValidationReport validation = validate(complex);
  provenance.polytopal =
      o.assume_polytopal || (complex.dim() == 3 && validation.ok() && verify_links(complex).ok());

  const VerificationReport report = analyze(complex, provenance, options);
  out << to_json(report).dump(2) << '\n';
  return report.contradiction() ? kExitCheckFailed : kExitOk;
}

int do_links(const std::string& path, std::uint64_t seed, std::ostream& out) {
  const SimplicialComplex complex = read_facet_file(path);
  if (!validate(complex).ok()) throw InvalidInput("input is not a valid complex; run validate for details");
  const LinkReport report = verify_links(complex, seed);
  out << to_json(report).dump(2) << '\n';
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int do_campaign(const CampaignCliOptions& o, std::ostream& out) {
  const auto family = parse_family(o.family);
  if (!family) throw InvalidInput("unknown family '" + o.family + "'");
  CampaignConfig config;
  config.family = *family;
  config.count = o.count;
  config.seed = o.seed;
  config.d = o.d;
  config.n_min = o.n_min;
  config.n_max = o.n_max;
  config.d_min = o.d_min;
  config.d_max = o.d_max;
  config.workers = o.workers;
  config.out_dir = o.out;

  std::filesystem::create_directories(o.out);
  const CampaignSummary summary = campaign(config);
  const auto summary_path = std::filesystem::path(o.out) / "summary.json";
  std::ofstream(summary_path) << to_json(summary).dump(2) << '\n';
  out << family_name(config.family) << ": " << summary.passed() << "/" << summary.instances.size()
      << " instances passed; summary in " << summary_path.string() << '\n';
  return summary.failed() == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial polytope constructions and minimum edge cut checks", "polycut"};
  app.require_subcommand(1);

  ConstructOptions construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a complex and write it as a facet list");
  construct_cmd->add_option("--kind", construct.kind, "simplex|cyclic|stacked-chain|nontrivial|triangulation")
      ->required()
      ->check(CLI::IsMember({"simplex", "cyclic", "stacked-chain", "nontrivial", "triangulation"}));
  construct_cmd->add_option("--d", construct.d, "Polytope dimension");
  construct_cmd->add_option("--n", construct.n, "Vertex count (cyclic, triangulation)");
  construct_cmd->add_option("--flips", construct.flips, "Random edge flips (triangulation)")->check(CLI::NonNegativeNumber);
  construct_cmd->add_option("--seed", construct.seed, "Random seed (triangulation)");
  construct_cmd->add_option("--out", construct.out, "Output facet-list path")->required();

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check the pseudomanifold conditions of a facet list");
  validate_cmd->add_option("path", validate_path)->required();

  AnalyzeCliOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Minimum edge cut report for a facet list");
  analyze_cmd->add_option("path", analyze_opts.path)->required();
  auto* oracle_flag = analyze_cmd->add_flag("--oracle", analyze_opts.oracle, "Force the exhaustive cross-check");
  analyze_cmd->add_flag("--no-oracle", analyze_opts.no_oracle, "Skip the exhaustive cross-check")->excludes(oracle_flag);
  analyze_cmd->add_flag("--assume-polytopal", analyze_opts.assume_polytopal,
                        "Treat the input as a polytope boundary so bound violations are reported");

  std::string links_path;
  std::uint64_t links_seed = 0;
  auto* links_cmd = app.add_subcommand("links", "Check every vertex link");
  links_cmd->add_option("path", links_path)->required();
  links_cmd->add_option("--seed", links_seed, "Sampling seed for large complexes");

  CampaignCliOptions camp;
  auto* campaign_cmd = app.add_subcommand("campaign", "Randomized verification campaign");
  campaign_cmd->add_option("--family", camp.family, "plane-triangulations|connected-sum-spheres|proposition-constructions")
      ->required();
  campaign_cmd->add_option("--count", camp.count, "Number of instances");
  campaign_cmd->add_option("--seed", camp.seed, "Campaign seed");
  campaign_cmd->add_option("--out", camp.out, "Output directory")->required();
  campaign_cmd->add_option("--d", camp.d, "Dimension for connected-sum spheres");
  campaign_cmd->add_option("--n-min", camp.n_min, "Smallest triangulation");
  campaign_cmd->add_option("--n-max", camp.n_max, "Largest triangulation");
  campaign_cmd->add_option("--d-min", camp.d_min, "Smallest dimension for proposition constructions");
  campaign_cmd->add_option("--d-max", camp.d_max, "Largest dimension for proposition constructions");
  campaign_cmd->add_option("--workers", camp.workers, "Worker threads (default: POLYCUT_WORKERS or all cores)");

  std::vector<std::string> argv_storage{"polycut"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*construct_cmd) return do_construct(construct, out);
    if (*validate_cmd) return do_validate(validate_path, out);
    if (*analyze_cmd) return do_analyze(analyze_opts, out);
    if (*links_cmd) return do_links(links_path, links_seed, out);
    if (*campaign_cmd) return do_campaign(camp, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const OracleScaleExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace polycut
