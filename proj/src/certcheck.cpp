#include "tiling/certcheck.hpp"

#include <filesystem>

#include "tiling/json_io.hpp"

namespace tiling {

std::string to_string(LeafKind k) {
  switch (k) {
  case LeafKind::Tautology:
    return "tautology";
  case LeafKind::AxiomContradiction:
    return "contradiction";
  case LeafKind::Elementary:
    return "elementary";
  }
  return "?";
}

namespace {

std::pair<int, int> cell_pair(const json &j) {
  auto v = j.get<std::vector<int>>();
  if (v.size() != 2)
    throw Error("ParseError", "certificate: a cell needs two indices");
  return {v[0], v[1]};
}

AuxKind aux_from_json(const json &j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "point_on") {
    auto [a, b] = cell_pair(j.at("lines"));
    return PointOnTwoLines{a, b};
  }
  if (kind == "line_through") {
    auto [a, b] = cell_pair(j.at("points"));
    return LineThroughTwoPoints{a, b};
  }
  if (kind == "generic_point")
    return GenericPoint{};
  if (kind == "generic_line")
    return GenericLine{};
  throw Error("ParseError", "certificate: unknown auxiliary step '" + kind + "'");
}

json aux_to_json(const AuxKind &a) {
  if (auto *p = std::get_if<PointOnTwoLines>(&a))
    return {{"kind", "point_on"}, {"lines", {p->c1, p->c2}}};
  if (auto *l = std::get_if<LineThroughTwoPoints>(&a))
    return {{"kind", "line_through"}, {"points", {l->r1, l->r2}}};
  if (std::holds_alternative<GenericPoint>(a))
    return {{"kind", "generic_point"}};
  return {{"kind", "generic_line"}};
}

std::shared_ptr<CaseNode> node_from_json(const json &j, const std::string &base_dir) {
  auto node = std::make_shared<CaseNode>();
  if (j.contains("cell")) {
    node->cell = cell_pair(j.at("cell"));
    // a missing branch is left empty and reported as a coverage gap
    if (j.contains("minus") && !j.at("minus").is_null())
      node->minus = node_from_json(j.at("minus"), base_dir);
    if (j.contains("plus") && !j.at("plus").is_null())
      node->plus = node_from_json(j.at("plus"), base_dir);
    return node;
  }
  std::string kind = j.at("leaf").get<std::string>();
  Justification &J = node->leaf;
  if (kind == "tautology") {
    J.kind = LeafKind::Tautology;
  } else if (kind == "contradiction") {
    J.kind = LeafKind::AxiomContradiction;
    if (j.contains("witness")) {
      auto rows = j.at("witness").at("rows").get<std::vector<int>>();
      auto cols = j.at("witness").at("cols").get<std::vector<int>>();
      if (rows.size() != 3 || cols.size() != 3)
        throw Error("ParseError", "certificate: a witness needs three rows and three columns");
      PatternWitness w{};
      for (int k = 0; k < 3; ++k)
        w.rows[k] = rows[k], w.cols[k] = cols[k];
      J.expected = w;
    }
  } else if (kind == "elementary") {
    J.kind = LeafKind::Elementary;
    const json &c = j.at("complex");
    if (c.is_string()) {
      std::filesystem::path p(c.get<std::string>());
      if (p.is_relative())
        p = std::filesystem::path(base_dir) / p;
      J.source = c.get<std::string>();
      J.complex = marked_from_json(read_json_file(p.string()));
    } else {
      J.complex = marked_from_json(c);
    }
    if (j.contains("target"))
      J.target = cell_pair(j.at("target"));
  } else {
    throw Error("ParseError", "certificate: unknown leaf kind '" + kind + "'");
  }
  return node;
}

json node_to_json(const CaseNode &n) {
  if (!n.is_leaf()) {
    json j{{"cell", {n.cell->first, n.cell->second}}};
    if (n.minus)
      j["minus"] = node_to_json(*n.minus);
    if (n.plus)
      j["plus"] = node_to_json(*n.plus);
    return j;
  }
  const Justification &J = n.leaf;
  json j{{"leaf", to_string(J.kind)}};
  if (J.expected) {
    const auto &w = *J.expected;
    j["witness"] = {{"rows", {w.rows[0], w.rows[1], w.rows[2]}}, {"cols", {w.cols[0], w.cols[1], w.cols[2]}}};
  }
  if (J.complex)
    j["complex"] = J.source.empty() ? complex_to_json(*J.complex) : json(J.source);
  if (J.target)
    j["target"] = {J.target->first, J.target->second};
  return j;
}

bool witness_holds(const IncidenceMatrix &M, const PatternWitness &w) {
  static const int pattern[3][3] = {{-1, 1, 0}, {1, 1, 1}, {1, 1, -1}}; // 0 = any
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      int r = w.rows[a], c = w.cols[b];
      if (r < 1 || r > M.rows() || c < 1 || c > M.cols())
        return false;
      if (pattern[a][b] != 0 && to_int(M.at(r, c)) != pattern[a][b])
        return false;
    }
  return true;
}

std::string seed_text(const std::vector<Seed> &path) {
  std::string s;
  for (const Seed &x : path)
    s += "(" + std::to_string(x.row) + "," + std::to_string(x.col) + ")=" + std::to_string(to_int(x.value)) + " ";
  return s.empty() ? "root" : s.substr(0, s.size() - 1);
}

LeafResult check_leaf(const Justification &J, const IncidenceMatrix &M, const GroupSpec &G,
                      const std::vector<Seed> &path) {
  LeafResult R;
  R.path = path;
  R.kind = J.kind;
  switch (J.kind) {
  case LeafKind::Tautology:
    R.passed = is_tautology(M);
    if (!R.passed)
      R.diagnostics.push_back("matrix is not a tautology: (1,1) is not +1");
    break;
  case LeafKind::AxiomContradiction: {
    auto w = contradicts_incidence_axiom(M);
    R.passed = w.has_value();
    if (!w)
      R.diagnostics.push_back("no forbidden pattern in the propagated matrix");
    if (J.expected && !witness_holds(M, *J.expected)) {
      R.passed = false;
      R.diagnostics.push_back("the claimed witness is not a forbidden pattern");
    }
    break;
  }
  case LeafKind::Elementary: {
    try {
      ValidationReport V = J.target ? validate_with_target(*J.complex, M, G, J.target->first, J.target->second)
                                    : validate_elementary_proof(*J.complex, M, G);
      R.passed = V.ok() && V.excisable;
      for (const auto &v : V.violations)
        R.diagnostics.push_back(v.property + ": " + v.detail);
      if (!V.excisable)
        R.diagnostics.push_back("marked face is not excisable over " + G.describe());
      R.report = V;
    } catch (const Error &e) {
      R.passed = false;
      R.diagnostics.push_back(e.what());
    }
    break;
  }
  }
  return R;
}

void walk(const CaseNode &n, const IncidenceMatrix &M, const GroupSpec &G, std::vector<Seed> &path,
          std::vector<LeafResult> &out) {
  if (n.is_leaf()) {
    out.push_back(check_leaf(n.leaf, M, G, path));
    return;
  }
  auto [i, j] = *n.cell;
  std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ") after " + seed_text(path);
  if (!n.minus || !n.plus)
    throw Error("CoverageGap", "case node " + where + " lacks a branch");
  if (i < 1 || i > M.rows() || j < 1 || j > M.cols())
    throw Error("CoverageGap", "case cell " + where + " lies outside the matrix");
  if (M.at(i, j) != Tri::Zero)
    throw Error("CoverageGap", "case cell " + where + " is already decided");
  for (Tri v : {Tri::MinusOne, Tri::PlusOne}) {
    path.push_back({i, j, v});
    IncidenceMatrix child = propagate(M, {{i, j, v}});
    walk(v == Tri::MinusOne ? *n.minus : *n.plus, child, G, path, out);
    path.pop_back();
  }
}

} // namespace

Certificate certificate_from_json(const json &j, const std::string &base_dir) {
  try {
    Certificate C;
    C.base = matrix_from_json(j.at("base"));
    if (j.contains("aux"))
      for (const auto &a : j.at("aux"))
        C.aux.push_back(aux_from_json(a));
    C.group = group_from_json(j.at("group"));
    C.tree = node_from_json(j.at("tree"), base_dir);
    return C;
  } catch (const Error &e) {
    if (e.code() == "ParseError")
      throw;
    throw Error("ParseError", std::string("certificate: ") + e.what());
  } catch (const std::exception &e) {
    throw Error("ParseError", std::string("certificate: ") + e.what());
  }
}

Certificate load_certificate(const std::string &path) {
  std::string dir = std::filesystem::path(path).parent_path().string();
  return certificate_from_json(read_json_file(path), dir.empty() ? "." : dir);
}

json certificate_to_json(const Certificate &C) {
  json aux = json::array();
  for (const auto &a : C.aux)
    aux.push_back(aux_to_json(a));
  return json{{"base", matrix_to_json(C.base)},
              {"aux", aux},
              {"group", C.group.describe()},
              {"tree", C.tree ? node_to_json(*C.tree) : json()}};
}

bool CertificateReport::ok() const {
  for (const auto &l : leaves)
    if (!l.passed)
      return false;
  return !leaves.empty();
}

CertificateReport validate_certificate(const Certificate &C) {
  if (!C.tree)
    throw Error("CoverageGap", "certificate has no case tree");
  IncidenceMatrix M = C.base;
  for (const auto &a : C.aux)
    M = aux_join(M, a);
  CertificateReport R;
  R.rows = M.rows();
  R.cols = M.cols();
  // the root is justified on the propagated matrix as well
  IncidenceMatrix start = propagate(M, {});
  std::vector<Seed> path;
  walk(*C.tree, start, C.group, path, R.leaves);
  return R;
}

json certificate_report_to_json(const CertificateReport &R) {
  json leaves = json::array();
  for (const auto &l : R.leaves) {
    json seeds = json::array();
    for (const Seed &s : l.path)
      seeds.push_back({s.row, s.col, to_int(s.value)});
    json j{{"path", seeds}, {"kind", to_string(l.kind)}, {"passed", l.passed}, {"diagnostics", l.diagnostics}};
    if (l.report)
      j["report"] = report_to_json(*l.report);
    leaves.push_back(j);
  }
  return json{{"ok", R.ok()}, {"matrix", {R.rows, R.cols}}, {"leaves", leaves}};
}

} // namespace tiling
