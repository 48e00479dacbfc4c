// tilingproof: command-line front end. Reports go to stdout as JSON.
// Exit codes: 0 claim verified, 1 counterexample or violation, 2 usage or
// resource error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tiling/certcheck.hpp"
#include "tiling/fixtures.hpp"
#include "tiling/json_io.hpp"
#include "tiling/realize.hpp"
#include "tiling/skew.hpp"

using namespace tiling;
namespace fx = tiling::fixtures;
namespace fs = std::filesystem;

namespace {

constexpr const char *kVersion = "1.0.0";

std::string digest(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  uint64_t h = 1469598103934665603ull; // FNV-1a
  char ch;
  while (in.get(ch)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Run {
  json report = json::object();
  std::vector<std::string> inputs;

  json load(const std::string &path) {
    inputs.push_back(path);
    return read_json_file(path);
  }
  int finish(int code) {
    json in = json::object();
    for (const auto &p : inputs)
      in[p] = digest(p);
    report["inputs"] = in;
    report["version"] = kVersion;
    report["exitCode"] = code;
    std::cout << report.dump(2) << "\n";
    return code;
  }
};

Seed parse_seed(const std::string &s) {
  int r, c, v;
  char a, b;
  std::istringstream in(s);
  if (!(in >> r >> a >> c >> b >> v) || a != ',' || b != ',' || (v != 1 && v != -1))
    throw CLI::ValidationError("--seed", "expected r,c,v with v = 1 or -1");
  return {r, c, tri_from_int(v)};
}

std::pair<int, int> parse_cell(const std::string &s) {
  int r, c;
  char a;
  std::istringstream in(s);
  if (!(in >> r >> a >> c) || a != ',')
    throw CLI::ValidationError("cell", "expected i,j");
  return {r, c};
}

int face_index(const std::string &face, const json &doc, const DeltaComplex &K) {
  if (face == "marked") {
    if (!doc.contains("marked"))
      throw Error("FaceNotFound", "complex has no marked face");
    return doc.at("marked").get<int>() - 1;
  }
  int f = std::stoi(face) - 1;
  if (f < 0 || f >= K.face_count())
    throw Error("FaceNotFound", "face " + face + " out of range");
  return f;
}

json skew_point_json(const SkewPoint &P) { return {to_string(P.x), to_string(P.y)}; }

// Writes every builder-backed fixture into dir.
void export_fixtures(const std::string &dir) {
  fs::create_directories(fs::path(dir) / "certificates");
  auto put = [&](const std::string &name, const json &j) { write_json_file((fs::path(dir) / name).string(), j); };
  for (int q : {2, 3, 4})
    put("q_points" + std::to_string(q) + ".json", matrix_to_json(fx::q_points(q)));
  put("fano.json", matrix_to_json(fx::fano()));
  put("incidence_axiom.json", matrix_to_json(fx::incidence_axiom()));
  put("hexagon6.json", matrix_to_json(fx::hexagon6()));
  put("hexagon6_aux.json", matrix_to_json(fx::hexagon6_aux()));
  put("hexagon6_f3.json", config_to_json(fx::hexagon6_f3()));
  put("fano_plane.json", config_to_json(fx::fano_plane()));

  MarkedComplex tet = desargues_tetrahedron();
  put("desargues.json", matrix_to_json(generate_theorem(tet)));
  put("tetrahedron.json", complex_to_json(tet));
  put("one_line_sphere.json", complex_to_json(fx::one_line_sphere()));
  put("octahedron.json", complex_to_json(octahedral_subdivide(fx::one_line_sphere())));
  put("pappus_torus.json", complex_to_json(fx::pappus_torus()));
  put("pappus_torus_case2.json", complex_to_json(fx::pappus_torus_case2()));
  put("pappus_torus_bijective.json", complex_to_json(fx::pappus_torus_bijective()));
  auto with_gluings = [](const MarkedComplex &MC, const Grope &G) {
    json j = complex_to_json(MC);
    j["gluings"] = grope_to_json(G).at("gluings");
    return j;
  };
  put("ninegon-grope.json", with_gluings(fx::ninegon_grope(), fx::ninegon_grope_shape()));
  put("ninegon.json", matrix_to_json(generate_theorem(fx::ninegon_grope())));
  put("two-stage-grope.json", with_gluings(fx::two_stage_grope(), fx::two_stage_grope_shape()));
  put("non-grope.json", complex_to_json(fx::non_grope()));
  put("unreal-hexagon.json", complex_to_json(fx::unreal_hexagon()));
  put("ninegon-disc.json", surface_to_json(fan_disc(9)));

  auto elementary = [](const std::string &file, std::optional<std::pair<int, int>> target = {}) {
    json j{{"leaf", "elementary"}, {"complex", "../" + file}};
    if (target)
      j["target"] = {target->first, target->second};
    return j;
  };
  json aux = json::array();
  for (const AuxKind &a : fx::pappus_aux_steps()) {
    if (auto *p = std::get_if<PointOnTwoLines>(&a))
      aux.push_back({{"kind", "point_on"}, {"lines", {p->c1, p->c2}}});
    else if (auto *l = std::get_if<LineThroughTwoPoints>(&a))
      aux.push_back({{"kind", "line_through"}, {"points", {l->r1, l->r2}}});
  }
  put("certificates/pappus.json",
      {{"base", matrix_to_json(fx::pappus9x9())},
       {"aux", aux},
       {"group", "R*"},
       {"tree",
        {{"cell", {10, 4}},
         {"minus", elementary("pappus_torus.json")},
         {"plus",
          {{"cell", {10, 10}},
           {"minus", elementary("pappus_torus_case2.json", std::pair{14, 8})},
           {"plus",
            {{"cell", {1, 1}}, {"minus", {{"leaf", "contradiction"}}}, {"plus", {{"leaf", "tautology"}}}}}}}}}});
  put("certificates/incidence_axiom.json",
      {{"base", matrix_to_json(fx::incidence_axiom())},
       {"aux", json::array()},
       {"group", "R*"},
       {"tree", {{"cell", {1, 1}}, {"minus", {{"leaf", "contradiction"}}}, {"plus", {{"leaf", "tautology"}}}}}});
  put("certificates/desargues.json", {{"base", matrix_to_json(generate_theorem(tet))},
                                      {"aux", json::array()},
                                      {"group", "F3*"},
                                      {"tree", elementary("tetrahedron.json")}});
  put("certificates/one_line.json", {{"base", matrix_to_json(generate_theorem(fx::one_line_sphere()))},
                                     {"aux", json::array()},
                                     {"group", "F2*"},
                                     {"tree", elementary("one_line_sphere.json")}});
  put("certificates/ninegon.json", {{"base", matrix_to_json(generate_theorem(fx::ninegon_grope()))},
                                    {"aux", json::array()},
                                    {"group", "F2*"},
                                    {"tree", elementary("ninegon-grope.json")}});
}

struct Check {
  std::string name;
  bool ok;
};

std::vector<Check> selftest(const std::string &dir) {
  std::vector<Check> out;
  auto run = [&](const std::string &name, auto fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception &e) {
      std::cerr << name << ": " << e.what() << "\n";
    }
    out.push_back({name, ok});
  };
  auto mat = [&](const std::string &f) { return matrix_from_json(read_json_file(dir + "/" + f)); };
  run("pappus case 1 propagation", [&] {
    return propagate(mat("pappus12x9.json"), {{10, 4, Tri::MinusOne}}) == mat("pappus_case1.json");
  });
  run("fano counterexample over GF(2)", [&] {
    Verdict v = check_theorem(fx::fano(), 2);
    return v.outcome == Outcome::Counterexample && verify_configuration(fx::fano(), *v.counterexample);
  });
  run("hexagon counterexample over GF(3)", [&] {
    Configuration C = fx::hexagon6_f3();
    return verify_configuration(fx::hexagon6(), C) && !conclusion_holds(C);
  });
  run("9-gon grope excision over F2*, F4*, F8*", [&] {
    const DeltaComplex &K = fx::ninegon_grope().complex;
    return can_excise(K, 0, GroupSpec::finite_field(2)) && !can_excise(K, 0, GroupSpec::finite_field(4)) &&
           can_excise(K, 0, GroupSpec::finite_field(8));
  });
  run("non-grope excision over R* and Z/4", [&] {
    const DeltaComplex &K = fx::non_grope().complex;
    return can_excise(K, 0, GroupSpec::reals()) && !can_excise(K, 0, GroupSpec::cyclic(4));
  });
  for (const char *c : {"pappus", "desargues", "one_line", "incidence_axiom", "ninegon"})
    run(std::string("certificate ") + c,
        [&] { return validate_certificate(load_certificate(dir + "/certificates/" + c + ".json")).ok(); });
  run("quaternion Pappus counterexample", [&] {
    PappusCounterexample P = pappus_counterexample(Quaternion::i(), Quaternion::j());
    return P.conclusion_product == Quaternion(-1);
  });
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Tiling proofs for projective incidence theorems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for searches")->check(CLI::PositiveNumber);

  Run run;
  for (int a = 0; a < argc; ++a)
    run.report["command"].push_back(argv[a]);
  int code = 0;

  // check
  std::string matrix_path, config_path, complex_path, cert_path, group = "R*", face = "marked";
  int q = 2;
  uint64_t budget = SearchOptions{}.node_budget;
  bool fix_first = false;
  auto *check = app.add_subcommand("check", "search GF(q) for a counterexample to a theorem");
  check->add_option("matrix", matrix_path)->required()->check(CLI::ExistingFile);
  check->add_option("--q", q, "field order")->required();
  check->add_option("--budget", budget, "node budget");
  check->add_flag("--fix-first", fix_first, "pin the first search variable up to collineation");
  check->callback([&] {
    IncidenceMatrix M = matrix_from_json(run.load(matrix_path));
    SearchOptions o;
    o.node_budget = budget;
    o.fix_first = fix_first;
    o.jobs = jobs;
    Verdict v = check_theorem(M, q, o);
    run.report["verdict"] = verdict_to_json(v);
    if (v.counterexample)
      run.report["witnessVerified"] = verify_configuration(M, *v.counterexample) && !conclusion_holds(*v.counterexample);
    code = v.outcome == Outcome::Counterexample ? 1 : v.outcome == Outcome::ResourceExceeded ? 2 : 0;
  });

  auto *verify = app.add_subcommand("verify", "check a configuration against a matrix");
  verify->add_option("matrix", matrix_path)->required()->check(CLI::ExistingFile);
  verify->add_option("config", config_path)->required()->check(CLI::ExistingFile);
  verify->callback([&] {
    IncidenceMatrix M = matrix_from_json(run.load(matrix_path));
    Configuration C = config_from_json(run.load(config_path));
    bool sat = verify_configuration(M, C);
    bool concl = conclusion_holds(C);
    run.report["satisfiesHypotheses"] = sat;
    run.report["conclusionHolds"] = concl;
    run.report["counterexample"] = sat && !concl;
    code = sat ? 0 : 1;
  });

  std::vector<std::string> seeds;
  std::string sweeps = "fix";
  auto *prop = app.add_subcommand("propagate", "fill -1 entries forced by the incidence axiom");
  prop->add_option("matrix", matrix_path)->required()->check(CLI::ExistingFile);
  prop->add_option("--seed", seeds, "r,c,v (repeatable)");
  prop->add_option("--sweeps", sweeps, "sweep count or 'fix'");
  prop->callback([&] {
    IncidenceMatrix M = matrix_from_json(run.load(matrix_path));
    std::vector<Seed> s;
    for (const auto &x : seeds)
      s.push_back(parse_seed(x));
    std::optional<int> cap;
    if (sweeps != "fix")
      cap = std::stoi(sweeps);
    IncidenceMatrix X = propagate(M, s, cap);
    run.report["matrix"] = matrix_to_json(X);
    if (auto w = contradicts_incidence_axiom(X))
      run.report["contradiction"] = {{"rows", w->rows}, {"cols", w->cols}};
    run.report["tautology"] = is_tautology(X);
  });

  auto *excise = app.add_subcommand("excise", "decide whether a face can be excised over a group");
  excise->add_option("complex", complex_path)->required()->check(CLI::ExistingFile);
  excise->add_option("--face", face, "1-based face id or 'marked'");
  excise->add_option("--group", group, "R*, C*, Fq*, Fq(X)*, Z/n or a JSON spec");
  excise->callback([&] {
    json doc = run.load(complex_path);
    DeltaComplex K = complex_from_json(doc);
    int f = face_index(face, doc, K);
    GroupSpec G = GroupSpec::parse(group);
    bool ok = can_excise(K, f, G);
    run.report["face"] = f + 1;
    run.report["group"] = json::parse(G.describe());
    run.report["excisable"] = ok;
    if (!ok && !G.infinite && !G.full_torsion)
      for (long n : G.torsion)
        if (auto U = failing_cochain(K, f, n)) {
          run.report["failingCochain"] = cochain_to_json(*U, n);
          run.report["defect"] = face_defect(K, f, *U, n);
          break;
        }
    code = ok ? 0 : 1;
  });

  auto *gen = app.add_subcommand("generate", "theorem generated by a labeled complex");
  gen->add_option("complex", complex_path)->required()->check(CLI::ExistingFile);
  gen->callback([&] {
    MarkedComplex MC = marked_from_json(run.load(complex_path));
    run.report["matrix"] = matrix_to_json(generate_theorem(MC));
    run.report["bijective"] = labeling_bijective(MC);
  });

  std::string target;
  auto *val = app.add_subcommand("validate", "validate an elementary tiling proof");
  val->add_option("complex", complex_path)->required()->check(CLI::ExistingFile);
  val->add_option("--matrix", matrix_path)->required()->check(CLI::ExistingFile);
  val->add_option("--group", group);
  val->add_option("--target", target, "i,j for a proof by contradiction");
  val->callback([&] {
    MarkedComplex MC = marked_from_json(run.load(complex_path));
    IncidenceMatrix M = matrix_from_json(run.load(matrix_path));
    GroupSpec G = GroupSpec::parse(group);
    ValidationReport R;
    if (target.empty()) {
      R = validate_elementary_proof(MC, M, G);
    } else {
      auto [i, j] = parse_cell(target);
      R = validate_with_target(MC, M, G, i, j);
    }
    run.report["report"] = report_to_json(R);
    code = R.ok() && R.excisable ? 0 : 1;
  });

  auto *sub = app.add_subcommand("subdivide", "octahedral subdivision of a labeled complex");
  sub->add_option("complex", complex_path)->required()->check(CLI::ExistingFile);
  sub->callback([&] { run.report["complex"] = complex_to_json(octahedral_subdivide(marked_from_json(run.load(complex_path)))); });

  std::string cochain_path;
  auto *real = app.add_subcommand("realize", "configuration from a Z/n cochain over GF(q)");
  real->add_option("complex", complex_path)->required()->check(CLI::ExistingFile);
  real->add_option("--cochain", cochain_path)->required()->check(CLI::ExistingFile);
  real->add_option("--q", q)->required();
  real->callback([&] {
    MarkedComplex MC = marked_from_json(run.load(complex_path));
    json cj = run.load(cochain_path);
    GaloisField F(q);
    FieldCochain U = exponentiate_cochain(cochain_from_json(cj), cj.at("modulus").get<long>(), F);
    auto C = realize_from_cochain(MC, U, q);
    if (!C) {
      run.report["realized"] = false;
      run.report["error"] = "PlacementFailed";
      code = 2;
      return;
    }
    IncidenceMatrix M = generate_theorem(MC);
    run.report["realized"] = true;
    run.report["configuration"] = config_to_json(*C);
    bool counter = verify_configuration(M, *C) && !conclusion_holds(*C);
    run.report["counterexample"] = counter;
    code = counter ? 1 : 0;
  });

  // grope builders
  auto *grope = app.add_subcommand("grope", "build generalized gropes");
  grope->require_subcommand(1);
  auto *g_nine = grope->add_subcommand("ninegon", "9-gon disc glued into a one-line sphere");
  g_nine->callback([&] { run.report["grope"] = grope_to_json(fx::ninegon_grope_shape()); });
  auto *g_two = grope->add_subcommand("two-stage", "a second 9-gon glued into the first");
  g_two->callback([&] { run.report["grope"] = grope_to_json(fx::two_stage_grope_shape()); });
  auto *g_base = grope->add_subcommand("base", "complexity-0 grope from a closed surface");
  g_base->add_option("complex", complex_path)->required()->check(CLI::ExistingFile);
  g_base->callback([&] { run.report["grope"] = grope_to_json(grope_base(complex_from_json(run.load(complex_path)))); });
  std::string surface_path;
  int glue_face = 1, k = 3, offset = 0, disc_sides = 0;
  auto *g_glue = grope->add_subcommand("glue", "replace a face by a surface glued along a k-fold covering");
  g_glue->add_option("grope", complex_path)->required()->check(CLI::ExistingFile);
  g_glue->add_option("--face", glue_face, "1-based face")->required();
  g_glue->add_option("--k", k)->required();
  g_glue->add_option("--group", group);
  g_glue->add_option("--offset", offset);
  auto *surf_opt = g_glue->add_option("--surface", surface_path, "bounded surface JSON")->check(CLI::ExistingFile);
  auto *disc_opt = g_glue->add_option("--disc", disc_sides, "fan-triangulated disc with this many sides");
  surf_opt->excludes(disc_opt);
  g_glue->callback([&] {
    Grope G = grope_from_json(run.load(complex_path));
    BoundedSurface S;
    if (!surface_path.empty())
      S = surface_from_json(run.load(surface_path));
    else if (disc_sides > 0)
      S = fan_disc(disc_sides);
    else
      throw CLI::ValidationError("glue", "give --surface or --disc");
    run.report["grope"] = grope_to_json(grope_glue(G, glue_face - 1, S, k, GroupSpec::parse(group), offset));
  });

  auto *pv = app.add_subcommand("prove-validate", "validate a proof certificate");
  pv->add_option("certificate", cert_path)->required()->check(CLI::ExistingFile);
  pv->callback([&] {
    run.inputs.push_back(cert_path);
    CertificateReport R = validate_certificate(load_certificate(cert_path));
    run.report["report"] = certificate_report_to_json(R);
    code = R.ok() ? 0 : 1;
  });

  // quaternions
  auto *quat = app.add_subcommand("quat", "computations over the rational quaternions");
  quat->require_subcommand(1);
  std::string u_text = "i", v_text = "j";
  auto *qp = quat->add_subcommand("pappus", "Pappus configuration where the conclusion fails");
  qp->add_option("--u", u_text);
  qp->add_option("--v", v_text);
  qp->callback([&] {
    PappusCounterexample P = pappus_counterexample(parse_quaternion(u_text), parse_quaternion(v_text));
    json pts = json::array(), vals = json::object();
    for (const auto &p : P.config.points)
      pts.push_back(skew_point_json(p));
    for (const auto &[e, x] : P.edge_values)
      vals[std::to_string(e + 1)] = to_string(x);
    run.report["points"] = pts;
    run.report["edgeValues"] = vals;
    run.report["defect"] = to_string(P.defect);
    run.report["conclusionProduct"] = to_string(P.conclusion_product);
    bool counter = P.conclusion_product != Quaternion(1);
    run.report["counterexample"] = counter;
    code = counter ? 1 : 0;
  });
  int trials = 100;
  uint64_t seed = 0;
  auto *qs = quat->add_subcommand("soundness", "random Desargues instances over the quaternions");
  qs->add_option("--trials", trials);
  qs->add_option("--seed", seed)->required();
  qs->callback([&] {
    SoundnessReport R = desargues_soundness_sample(trials, seed);
    run.report["trials"] = R.trials;
    run.report["passed"] = R.passed;
    run.report["rejected"] = R.rejected;
    code = R.ok() ? 0 : 1;
  });

  std::string fixture_dir = TILING_FIXTURE_DIR;
  auto *st = app.add_subcommand("selftest", "run the bundled fixture checks");
  st->add_option("--fixtures", fixture_dir);
  st->callback([&] {
    json checks = json::array();
    bool all = true;
    for (const Check &c : selftest(fixture_dir)) {
      checks.push_back({{"name", c.name}, {"passed", c.ok}});
      all = all && c.ok;
    }
    run.report["checks"] = checks;
    code = all ? 0 : 1;
  });

  std::string out_dir;
  auto *ex = app.add_subcommand("export-fixtures", "write the builder-backed fixture files");
  ex->add_option("dir", out_dir)->required();
  ex->callback([&] {
    export_fixtures(out_dir);
    run.report["written"] = out_dir;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error &e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return run.finish(code);
}
