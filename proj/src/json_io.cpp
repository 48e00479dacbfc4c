#include "tiling/json_io.hpp"

#include <fstream>

namespace tiling {

namespace {

template <class Fn> auto guarded(const char *what, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error &) {
    throw;
  } catch (const std::exception &e) {
    throw Error("ParseError", std::string(what) + ": " + e.what());
  }
}

} // namespace

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("ParseError", "cannot open " + path);
  return guarded(path.c_str(), [&] { return json::parse(in); });
}

void write_json_file(const std::string &path, const json &j) {
  std::ofstream out(path);
  if (!out)
    throw Error("IOError", "cannot write " + path);
  out << j.dump(2) << "\n";
}

json matrix_to_json(const IncidenceMatrix &M) {
  return json{{"m", M.rows()}, {"n", M.cols()}, {"entries", M.to_ints()}};
}

IncidenceMatrix matrix_from_json(const json &j) {
  return guarded("matrix", [&] {
    auto rows = j.at("entries").get<std::vector<std::vector<int>>>();
    IncidenceMatrix M = IncidenceMatrix::from_ints(rows);
    if (j.contains("m") && j.at("m").get<int>() != M.rows())
      throw Error("ParseError", "matrix: row count differs from m");
    if (j.contains("n") && j.at("n").get<int>() != M.cols())
      throw Error("ParseError", "matrix: column count differs from n");
    return M;
  });
}

json config_to_json(const Configuration &C) {
  json pts = json::array(), lns = json::array();
  for (const auto &P : C.points)
    pts.push_back({P.c[0], P.c[1], P.c[2]});
  for (const auto &L : C.lines)
    lns.push_back({L.c[0], L.c[1], L.c[2]});
  return json{{"q", C.q}, {"points", pts}, {"lines", lns}};
}

Configuration config_from_json(const json &j) {
  return guarded("configuration", [&] {
    Configuration C;
    C.q = j.at("q").get<int>();
    GaloisField F(C.q);
    auto coords = [&](const json &t) {
      auto v = t.get<std::vector<int>>();
      if (v.size() != 3)
        throw Error("ParseError", "configuration: coordinates need 3 entries");
      Coords c{};
      for (int k = 0; k < 3; ++k) {
        if (v[k] < 0 || v[k] >= C.q)
          throw Error("ParseError", "configuration: coordinate outside the field");
        c[k] = static_cast<Elem>(v[k]);
      }
      return c;
    };
    for (const auto &t : j.at("points"))
      C.points.push_back(make_point(F, coords(t)));
    for (const auto &t : j.at("lines"))
      C.lines.push_back(make_line(F, coords(t)));
    return C;
  });
}

json stats_to_json(const SearchStats &s) {
  return json{{"nodesExpanded", s.nodes_expanded},
              {"propagationsForced", s.propagations_forced},
              {"elapsedMs", s.elapsed_ms}};
}

json verdict_to_json(const Verdict &v) {
  json j{{"outcome", to_string(v.outcome)}, {"stats", stats_to_json(v.stats)}};
  if (v.counterexample)
    j["counterexample"] = config_to_json(*v.counterexample);
  return j;
}

json complex_to_json(const DeltaComplex &K) {
  json edges = json::array(), faces = json::array();
  for (const Edge &e : K.edges())
    edges.push_back({e.tail + 1, e.head + 1});
  for (const Face &f : K.faces()) {
    json row = json::array();
    for (const DirEdge &d : f.sides)
      row.push_back(d.forward ? d.edge + 1 : -(d.edge + 1));
    faces.push_back(row);
  }
  return json{{"vertices", K.vertex_count()}, {"edges", edges}, {"faces", faces}};
}

json complex_to_json(const MarkedComplex &MC) {
  json j = complex_to_json(MC.complex);
  j["p"] = {{"vertices", MC.labels.p_vertex}, {"edges", MC.labels.p_edge}};
  j["l"] = {{"faces", MC.labels.l_face}, {"edges", MC.labels.l_edge}};
  j["marked"] = MC.marked + 1;
  return j;
}

DeltaComplex complex_from_json(const json &j) {
  return guarded("complex", [&] {
    int nv = j.at("vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges")) {
      auto v = e.get<std::vector<int>>();
      if (v.size() != 2)
        throw Error("ParseError", "complex: an edge needs two endpoints");
      edges.push_back({v[0] - 1, v[1] - 1});
    }
    std::vector<Face> faces;
    for (const auto &f : j.at("faces")) {
      auto v = f.get<std::vector<int>>();
      if (v.size() != 3)
        throw Error("ParseError", "complex: a face needs three signed edges");
      Face face;
      for (int k = 0; k < 3; ++k) {
        if (v[k] == 0)
          throw Error("ParseError", "complex: edge ids are 1-based and signed");
        face.sides[k] = DirEdge{std::abs(v[k]) - 1, v[k] > 0};
      }
      faces.push_back(face);
    }
    DeltaComplex K(nv, std::move(edges), std::move(faces));
    return DeltaComplex(K.vertex_count(), K.edges(), K.faces(), K.is_simplicial());
  });
}

MarkedComplex marked_from_json(const json &j) {
  return guarded("complex", [&] {
    MarkedComplex MC;
    MC.complex = complex_from_json(j);
    MC.labels.p_vertex = j.at("p").at("vertices").get<std::vector<int>>();
    MC.labels.p_edge = j.at("p").at("edges").get<std::vector<int>>();
    MC.labels.l_face = j.at("l").at("faces").get<std::vector<int>>();
    MC.labels.l_edge = j.at("l").at("edges").get<std::vector<int>>();
    MC.marked = j.at("marked").get<int>() - 1;
    if (static_cast<int>(MC.labels.p_vertex.size()) != MC.complex.vertex_count() ||
        static_cast<int>(MC.labels.p_edge.size()) != MC.complex.edge_count() ||
        static_cast<int>(MC.labels.l_face.size()) != MC.complex.face_count() ||
        static_cast<int>(MC.labels.l_edge.size()) != MC.complex.edge_count())
      throw Error("ParseError", "complex: label lists do not match the cell counts");
    if (MC.marked < 0 || MC.marked >= MC.complex.face_count())
      throw Error("ParseError", "complex: marked face out of range");
    return MC;
  });
}

json grope_to_json(const Grope &G) {
  json j = complex_to_json(G.complex);
  json gl = json::array();
  for (const Gluing &g : G.gluings)
    gl.push_back({{"face", g.face + 1}, {"k", g.k}, {"offset", g.offset}});
  j["gluings"] = gl;
  return j;
}

Grope grope_from_json(const json &j) {
  return guarded("grope", [&] {
    Grope G{complex_from_json(j), {}};
    if (j.contains("gluings"))
      for (const auto &g : j.at("gluings"))
        G.gluings.push_back({g.at("face").get<int>() - 1, g.at("k").get<int>(), g.value("offset", 0)});
    return G;
  });
}

json surface_to_json(const BoundedSurface &S) {
  json j = complex_to_json(S.complex);
  json b = json::array();
  for (int v : S.boundary)
    b.push_back(v + 1);
  j["boundary"] = b;
  return j;
}

BoundedSurface surface_from_json(const json &j) {
  return guarded("surface", [&] {
    BoundedSurface S{complex_from_json(j), {}};
    for (int v : j.at("boundary").get<std::vector<int>>())
      S.boundary.push_back(v - 1);
    return S;
  });
}

json group_to_json(const GroupSpec &G) {
  json j{{"infinite", G.infinite}};
  if (G.full_torsion)
    j["torsion"] = "full";
  else
    j["torsion"] = G.torsion;
  return j;
}

GroupSpec group_from_json(const json &j) {
  return guarded("group", [&] {
    if (j.is_string())
      return GroupSpec::parse(j.get<std::string>());
    return GroupSpec::parse(j.dump());
  });
}

json cochain_to_json(const Cochain &U, long n) {
  json vals = json::object();
  for (auto [e, r] : U)
    vals[std::to_string(e + 1)] = r;
  return json{{"modulus", n}, {"values", vals}};
}

Cochain cochain_from_json(const json &j) {
  return guarded("cochain", [&] {
    Cochain U;
    for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it)
      U[std::stoi(it.key()) - 1] = it.value().get<long>();
    return U;
  });
}

json violation_to_json(const Violation &v) {
  json j{{"property", v.property}, {"detail", v.detail}};
  if (v.point)
    j["cell"] = {v.point, v.line};
  return j;
}

json report_to_json(const ValidationReport &R) {
  json vs = json::array();
  for (const auto &v : R.violations)
    vs.push_back(violation_to_json(v));
  return json{{"ok", R.ok()}, {"excisable", R.excisable}, {"violations", vs}};
}

} // namespace tiling
