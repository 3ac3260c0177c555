#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polycut/cli.hpp"
#include "polycut/constructions.hpp"
#include "polycut/facet_io.hpp"
#include "polycut/report_json.hpp"

using namespace polycut;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& name)
      : path_(std::filesystem::temp_directory_path() / ("polycut_cli_" + name)) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct then analyze the d=4 construction") {
    ScratchDir dir("nontrivial");
    const auto fl = dir.file("p4.fl");
    REQUIRE(run({"construct", "--kind", "nontrivial", "--d", "4", "--out", fl}).code == kExitOk);
    CHECK(read_facet_file(fl).vertex_count() == 22);

    const auto labels = Json::parse(slurp(fl + ".labels.json"));
    CHECK(labels["designated_cut"].size() == 10);
    CHECK(labels["f0"].size() == 4);

    const Run r = run({"analyze", fl, "--oracle"});
    CHECK(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    CHECK(j["delta"] == 10);
    CHECK(j["lambda"] == 10);
    CHECK(j["all_min_cuts_trivial"] == false);
    CHECK(j["theorem_applicable"] == false);
    CHECK(j["oracle_checked"] == true);
    CHECK(j["status"] == "OK");
  }

  TEST_CASE("other constructions") {
    ScratchDir dir("kinds");
    CHECK(run({"construct", "--kind", "simplex", "--d", "5", "--out", dir.file("s.fl")}).code == kExitOk);
    CHECK(read_facet_file(dir.file("s.fl")) == boundary_simplex(5));
    CHECK(run({"construct", "--kind", "cyclic", "--d", "4", "--n", "8", "--out", dir.file("c.fl")}).code == kExitOk);
    CHECK(read_facet_file(dir.file("c.fl")) == cyclic_boundary(4, 8));
    CHECK(run({"construct", "--kind", "stacked-chain", "--d", "5", "--out", dir.file("p.fl")}).code == kExitOk);
    CHECK(std::filesystem::exists(dir.file("p.fl.labels.json")));
    CHECK(run({"construct", "--kind", "triangulation", "--n", "25", "--flips", "60", "--seed", "3", "--out",
               dir.file("t.fl")})
              .code == kExitOk);
    CHECK(read_facet_file(dir.file("t.fl")) == random_plane_triangulation(25, 60, 3));

    const Run tri = run({"analyze", dir.file("t.fl")});
    CHECK(tri.code == kExitOk);
    const auto j = Json::parse(tri.out);
    CHECK(j["all_min_cuts_trivial"] == true);
    CHECK(j["provenance"]["polytopal"] == true);
  }

  TEST_CASE("bad construct arguments exit 2") {
    ScratchDir dir("badconstruct");
    CHECK(run({"construct", "--kind", "cube", "--d", "3", "--out", dir.file("x.fl")}).code == kExitInvalidInput);
    CHECK(run({"construct", "--kind", "nontrivial", "--d", "3", "--out", dir.file("x.fl")}).code == kExitInvalidInput);
    CHECK(run({"construct", "--kind", "cyclic", "--d", "4", "--out", dir.file("x.fl")}).code == kExitInvalidInput);
    CHECK(run({"construct", "--kind", "triangulation", "--d", "4", "--n", "10", "--out", dir.file("x.fl")}).code ==
          kExitInvalidInput);
    CHECK(run({}).code == kExitInvalidInput);
  }

  TEST_CASE("validate exit codes") {
    ScratchDir dir("validate");
    const auto good = dir.file("good.fl");
    write_facet_file(good, boundary_simplex(3));
    CHECK(run({"validate", good}).code == kExitOk);

    const auto partial = dir.file("partial.fl");
    std::ofstream(partial) << "dim 3\n1 2 3\n1 2 4\n";
    const Run r = run({"validate", partial});
    CHECK(r.code == kExitCheckFailed);
    CHECK(Json::parse(r.out)["pseudomanifold"] == false);

    const auto garbage = dir.file("garbage.fl");
    std::ofstream(garbage) << "dimension three\n";
    const Run g = run({"validate", garbage});
    CHECK(g.code == kExitInvalidInput);
    CHECK_FALSE(g.err.empty());

    CHECK(run({"validate", dir.file("missing.fl")}).code == kExitInvalidInput);
  }

  TEST_CASE("analyze rejects invalid complexes and oversize oracle requests") {
    ScratchDir dir("analyze");
    const auto partial = dir.file("partial.fl");
    std::ofstream(partial) << "dim 3\n1 2 3\n1 2 4\n";
    CHECK(run({"analyze", partial}).code == kExitInvalidInput);

    const auto big = dir.file("big.fl");
    write_facet_file(big, random_plane_triangulation(30, 10, 1));
    CHECK(run({"analyze", big, "--oracle"}).code == kExitInvalidInput);
    CHECK(run({"analyze", big, "--no-oracle"}).code == kExitOk);
    CHECK(run({"analyze", big, "--oracle", "--no-oracle"}).code == kExitInvalidInput);
  }

  TEST_CASE("round trip through the facet format is idempotent") {
    ScratchDir dir("roundtrip");
    const auto a = dir.file("a.fl");
    REQUIRE(run({"construct", "--kind", "nontrivial", "--d", "5", "--out", a}).code == kExitOk);
    const auto b = dir.file("b.fl");
    write_facet_file(b, read_facet_file(a));
    CHECK(slurp(a) == slurp(b));
    auto ja = Json::parse(run({"analyze", a, "--no-oracle"}).out);
    auto jb = Json::parse(run({"analyze", b, "--no-oracle"}).out);
    ja.erase("provenance");
    jb.erase("provenance");
    CHECK(ja == jb);
  }

  TEST_CASE("links subcommand") {
    ScratchDir dir("links");
    const auto fl = dir.file("c.fl");
    write_facet_file(fl, cyclic_boundary(4, 9));
    const Run r = run({"links", fl});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["ok"] == true);
  }

  TEST_CASE("campaign writes a summary") {
    ScratchDir dir("campaign");
    const auto out = (dir.path() / "run").string();
    const Run r = run({"campaign", "--family", "plane-triangulations", "--count", "8", "--seed", "1", "--out", out,
                       "--n-max", "18", "--workers", "1"});
    CHECK(r.code == kExitOk);
    const auto summary = Json::parse(slurp(out + "/summary.json"));
    CHECK(summary["instances"].size() == 8);

    const auto again = (dir.path() / "again").string();
    run({"campaign", "--family", "plane-triangulations", "--count", "8", "--seed", "1", "--out", again, "--n-max",
         "18", "--workers", "2"});
    CHECK(slurp(again + "/summary.json") == slurp(out + "/summary.json"));

    CHECK(run({"campaign", "--family", "cubes", "--out", out}).code == kExitInvalidInput);
  }
}
