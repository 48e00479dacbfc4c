#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "tiling/excise.hpp"

using namespace tiling;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out, err;
  json report() const { return json::parse(out); }
};

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Removed when the test binary exits.
struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("tilingproof_cli_" + std::to_string(::getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

fs::path scratch_dir() {
  static Scratch s;
  return s.dir;
}

RunResult run(const std::string &args) {
  fs::path err = scratch_dir() / "stderr.txt";
  std::string cmd = std::string(TILINGPROOF_EXE) + " " + args + " 2>" + err.string();
  RunResult r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string fx(const std::string &name) { return fixtures::path(name); }

} // namespace

TEST_CASE("version and help") {
  auto r = run("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("1.0.0") != std::string::npos);
  CHECK(run("--help").code == 0);
  CHECK(run("no-such-command").code == 2);
}

TEST_CASE("check: verdicts and exit codes") {
  auto fano = run("check " + fx("fano.json") + " --q 2");
  CHECK(fano.code == 1);
  auto j = fano.report();
  CHECK(j["verdict"]["outcome"] == "Counterexample");
  CHECK(j["witnessVerified"] == true);
  CHECK(j["exitCode"] == 1);
  CHECK(j["inputs"].size() == 1);

  auto line = run("check " + fx("one_line.json") + " --q 2");
  CHECK(line.code == 0);
  CHECK(line.report()["verdict"]["outcome"] == "True");

  auto budget = run("check " + fx("ninegon.json") + " --q 3 --budget 10");
  CHECK(budget.code == 2);
  CHECK(budget.report()["verdict"]["outcome"] == "ResourceExceeded");

  auto a = run("--jobs 1 check " + fx("desargues.json") + " --q 3").report();
  auto b = run("--jobs 3 check " + fx("desargues.json") + " --q 3").report();
  CHECK(a["verdict"]["outcome"] == "True");
  CHECK(a["verdict"]["outcome"] == b["verdict"]["outcome"]);
}

TEST_CASE("verify a stored configuration") {
  auto r = run("verify " + fx("fano.json") + " " + fx("fano_plane.json"));
  CHECK(r.code == 0);
  auto j = r.report();
  CHECK(j["satisfiesHypotheses"] == true);
  CHECK(j["conclusionHolds"] == false);
  CHECK(j["counterexample"] == true);
  CHECK(run("verify " + fx("pappus9x9.json") + " " + fx("fano_plane.json")).code != 0);
}

TEST_CASE("propagate reproduces the Case 1 matrix") {
  auto r = run("propagate " + fx("pappus12x9.json") + " --seed 10,4,-1");
  CHECK(r.code == 0);
  CHECK(matrix_from_json(r.report()["matrix"]) == testing_util::fixture_matrix("pappus_case1"));
  auto capped = run("propagate " + fx("pappus12x9.json") + " --seed 10,4,-1 --sweeps 3");
  CHECK(capped.report()["matrix"] == r.report()["matrix"]);
  CHECK(run("propagate " + fx("pappus12x9.json") + " --seed 10,4").code == 2);
}

TEST_CASE("excise and realize the 9-gon grope over GF(4)") {
  auto ok = run("excise " + fx("ninegon-grope.json") + " --face marked --group R*");
  CHECK(ok.code == 0);
  CHECK(ok.report()["excisable"] == true);

  auto bad = run("excise " + fx("ninegon-grope.json") + " --face marked --group F4*");
  CHECK(bad.code == 1);
  auto j = bad.report();
  CHECK(j["excisable"] == false);
  REQUIRE(j.contains("failingCochain"));
  CHECK(j["defect"] != 0);

  fs::path cochain = scratch_dir() / "cochain.json";
  write_json_file(cochain.string(), j["failingCochain"]);
  auto real = run("realize " + fx("ninegon-grope.json") + " --cochain " + cochain.string() + " --q 4");
  CHECK(real.code == 1);
  auto rj = real.report();
  CHECK(rj["realized"] == true);
  CHECK(rj["counterexample"] == true);
}

TEST_CASE("generate, validate and subdivide match the library") {
  auto gen = run("generate " + fx("one_line_sphere.json"));
  CHECK(gen.code == 0);
  CHECK(matrix_from_json(gen.report()["matrix"]) == testing_util::fixture_matrix("one_line"));
  CHECK(gen.report()["bijective"] == true);

  auto val = run("validate " + fx("tetrahedron.json") + " --matrix " + fx("desargues.json") + " --group F3*");
  CHECK(val.code == 0);
  CHECK(val.report()["report"]["ok"] == true);

  auto target = run("validate " + fx("pappus_torus_case2.json") + " --matrix " + fx("pappus_case2.json") +
                    " --group R* --target 14,8");
  CHECK(target.code == 0);

  auto hex = run("validate " + fx("unreal-hexagon.json") + " --matrix " + fx("hexagon6_aux.json"));
  CHECK(hex.code == 1);

  auto sub = run("subdivide " + fx("one_line_sphere.json"));
  CHECK(sub.code == 0);
  CHECK(sub.report()["complex"] == read_json_file(fx("octahedron.json")));
}

TEST_CASE("grope commands") {
  auto nine = run("grope ninegon");
  CHECK(nine.code == 0);
  CHECK(nine.report()["grope"] == grope_to_json(fixtures::ninegon_grope_shape()));
  CHECK(run("grope two-stage").report()["grope"] == grope_to_json(fixtures::two_stage_grope_shape()));

  auto base = run("grope base " + fx("tetrahedron.json"));
  CHECK(base.code == 0);
  fs::path gp = scratch_dir() / "base.json";
  write_json_file(gp.string(), base.report()["grope"]);
  auto glued = run("grope glue " + gp.string() + " --face 2 --k 3 --disc 9 --group F2*");
  CHECK(glued.code == 0);
  CHECK(glued.report()["grope"]["gluings"].size() == 1);
  auto refused = run("grope glue " + gp.string() + " --face 2 --k 3 --disc 9 --group F4*");
  CHECK(refused.code == 2);
  CHECK(refused.err.find("NotTorsionCoprime") != std::string::npos);
}

TEST_CASE("prove-validate") {
  auto r = run("prove-validate " + fx("certificates/pappus.json"));
  CHECK(r.code == 0);
  CHECK(r.report()["report"]["ok"] == true);
  CHECK(r.report()["report"]["leaves"].size() == 4);
}

TEST_CASE("quaternion commands") {
  auto p = run("quat pappus");
  CHECK(p.code == 1);
  CHECK(p.report()["defect"] == "-1");
  CHECK(p.report()["conclusionProduct"] == "-1");
  auto s = run("quat soundness --trials 20 --seed 5");
  CHECK(s.code == 0);
  CHECK(s.report()["passed"] == 20);
  CHECK(run("quat soundness --trials 5").code == 2);
}

TEST_CASE("selftest and exported fixtures") {
  auto st = run("selftest");
  CHECK(st.code == 0);
  for (const auto &c : st.report()["checks"])
    CHECK(c["passed"] == true);

  fs::path out = scratch_dir() / "export";
  auto ex = run("export-fixtures " + out.string());
  REQUIRE(ex.code == 0);
  int compared = 0;
  for (const auto &entry : fs::recursive_directory_iterator(out)) {
    if (!entry.is_regular_file())
      continue;
    fs::path rel = fs::relative(entry.path(), out);
    INFO(rel.string());
    CHECK(read_json_file(entry.path().string()) == read_json_file(fx(rel.string())));
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("errors go to stderr as JSON with exit 2") {
  auto r = run("excise " + fx("ninegon-grope.json") + " --face marked --group Q*");
  CHECK(r.code == 2);
  auto e = json::parse(r.err);
  CHECK(e.dump().find("BadGroup") != std::string::npos);
  CHECK(run("check /no/such/file.json --q 2").code == 2);
  CHECK(run("check " + fx("fano.json") + " --q 6").code == 2);
}
