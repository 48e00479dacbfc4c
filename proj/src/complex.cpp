#include "tiling/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace tiling {

DeltaComplex::DeltaComplex(int vertices, std::vector<Edge> edges, std::vector<Face> faces, bool simplicial)
    : nv_(vertices), edges_(std::move(edges)), faces_(std::move(faces)), simplicial_(simplicial) {
  if (nv_ < 0)
    throw Error("BadComplex", "negative vertex count");
  for (size_t e = 0; e < edges_.size(); ++e) {
    const Edge &x = edges_[e];
    if (x.tail < 0 || x.tail >= nv_ || x.head < 0 || x.head >= nv_)
      throw Error("BadComplex", "edge " + std::to_string(e + 1) + " has an endpoint out of range");
  }
  for (size_t f = 0; f < faces_.size(); ++f) {
    const auto &s = faces_[f].sides;
    for (const DirEdge &d : s)
      if (d.edge < 0 || d.edge >= edge_count())
        throw Error("BadComplex", "face " + std::to_string(f + 1) + " uses a missing edge");
    for (int k = 0; k < 3; ++k)
      if (s[k].to(edges_) != s[(k + 1) % 3].from(edges_))
        throw Error("BadComplex", "face " + std::to_string(f + 1) + " is not a closed walk");
  }
  if (simplicial_ && !is_simplicial())
    throw Error("BadComplex", "complex is flagged simplicial but is not");
}

DeltaComplex DeltaComplex::from_triangles(int vertices, const std::vector<std::array<int, 3>> &tris) {
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> ids;
  std::vector<Face> faces;
  for (const auto &t : tris) {
    Face f;
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      auto key = std::minmax(a, b);
      auto it = ids.find(key);
      if (it == ids.end()) {
        it = ids.emplace(key, static_cast<int>(edges.size())).first;
        edges.push_back({a, b});
      }
      f.sides[k] = DirEdge{it->second, edges[it->second].tail == a && edges[it->second].head == b};
    }
    faces.push_back(f);
  }
  DeltaComplex K(vertices, std::move(edges), std::move(faces), false);
  K.simplicial_ = K.is_simplicial();
  return K;
}

std::array<int, 3> DeltaComplex::face_vertices(int f) const {
  const auto &s = faces_.at(f).sides;
  return {s[0].from(edges_), s[1].from(edges_), s[2].from(edges_)};
}

std::vector<int> DeltaComplex::edge_degrees() const {
  std::vector<int> deg(edges_.size(), 0);
  for (const Face &f : faces_)
    for (const DirEdge &d : f.sides)
      ++deg[d.edge];
  return deg;
}

bool DeltaComplex::is_simplicial() const {
  std::set<std::pair<int, int>> pairs;
  for (const Edge &e : edges_) {
    if (e.tail == e.head)
      return false;
    if (!pairs.insert(std::minmax(e.tail, e.head)).second)
      return false;
  }
  std::set<std::array<int, 3>> triples;
  for (int f = 0; f < face_count(); ++f) {
    auto v = face_vertices(f);
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
      return false;
    if (!triples.insert(v).second)
      return false;
  }
  return true;
}

std::optional<std::vector<int>> is_closed_orientable_surface(const DeltaComplex &K) {
  const auto &E = K.edges();
  const int nE = K.edge_count(), nF = K.face_count();
  if (nF == 0)
    return std::nullopt;
  std::vector<std::vector<std::pair<int, int>>> uses(nE); // (face, +-1)
  for (int f = 0; f < nF; ++f)
    for (const DirEdge &d : K.faces()[f].sides)
      uses[d.edge].push_back({f, d.forward ? 1 : -1});
  for (const auto &u : uses)
    if (u.size() != 2)
      return std::nullopt;

  std::vector<int> sign(nF, 0);
  for (int start = 0; start < nF; ++start) {
    if (sign[start])
      continue;
    sign[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (const DirEdge &d : K.faces()[f].sides) {
        const auto &u = uses[d.edge];
        for (int k = 0; k < 2; ++k) {
          auto [g, dg] = u[k];
          auto [h, dh] = u[1 - k];
          if (g != f)
            continue;
          int want = -sign[f] * dg * dh; // sign[h] * dh == -sign[f] * dg
          if (h == f) {
            if (dg == dh)
              return std::nullopt;
          } else if (!sign[h]) {
            sign[h] = want;
            stack.push_back(h);
          } else if (sign[h] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }

  // Vertex links: edge ends at a vertex, joined through face corners.
  std::vector<int> parent(2 * nE);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Face &f : K.faces())
    for (int k = 0; k < 3; ++k) {
      const DirEdge &in = f.sides[k], &out = f.sides[(k + 1) % 3];
      int a = 2 * in.edge + (in.forward ? 1 : 0);
      int b = 2 * out.edge + (out.forward ? 0 : 1);
      parent[find(a)] = find(b);
    }
  std::vector<std::set<int>> roots(K.vertex_count());
  for (int e = 0; e < nE; ++e) {
    roots[E[e].tail].insert(find(2 * e));
    roots[E[e].head].insert(find(2 * e + 1));
  }
  for (const auto &r : roots)
    if (r.size() != 1)
      return std::nullopt;
  return sign;
}

namespace {

struct Pairs {
  // (point label, line label, description) per structural pair
  struct Item {
    int point, line;
    std::string what;
  };
  std::vector<Item> plus, minus, edge_in_face;
};

std::string vname(int v) { return "vertex " + std::to_string(v + 1); }
std::string ename(int e) { return "edge " + std::to_string(e + 1); }
std::string fname(int f) { return "face " + std::to_string(f + 1); }

Pairs structural_pairs(const MarkedComplex &MC) {
  const DeltaComplex &K = MC.complex;
  const Labeling &L = MC.labels;
  const auto &E = K.edges();
  Pairs P;
  for (int f = 0; f < K.face_count(); ++f) {
    std::set<int> seen;
    for (const DirEdge &d : K.faces()[f].sides)
      if (seen.insert(d.edge).second)
        P.edge_in_face.push_back({L.p_edge[d.edge], L.l_face[f], ename(d.edge) + " in " + fname(f)});
  }
  for (int e = 0; e < K.edge_count(); ++e) {
    P.plus.push_back({L.p_vertex[E[e].tail], L.l_edge[e], vname(E[e].tail) + " on " + ename(e)});
    if (E[e].head != E[e].tail)
      P.plus.push_back({L.p_vertex[E[e].head], L.l_edge[e], vname(E[e].head) + " on " + ename(e)});
    P.plus.push_back({L.p_edge[e], L.l_edge[e], ename(e) + " on itself"});
  }
  std::set<std::pair<int, int>> vertex_edge, edge_edge;
  for (int f = 0; f < K.face_count(); ++f) {
    auto verts = K.face_vertices(f);
    std::set<int> fe;
    for (const DirEdge &d : K.faces()[f].sides)
      fe.insert(d.edge);
    for (int j : fe) {
      for (int v : verts)
        if (v != E[j].tail && v != E[j].head && vertex_edge.insert({v, j}).second)
          P.minus.push_back({L.p_vertex[v], L.l_edge[j], vname(v) + " off " + ename(j)});
      for (int i : fe)
        if (i != j && edge_edge.insert({i, j}).second)
          P.minus.push_back({L.p_edge[i], L.l_edge[j], ename(i) + " off " + ename(j)});
    }
  }
  return P;
}

bool labels_in_range(const MarkedComplex &MC, int m, int n, std::vector<Violation> *out) {
  const DeltaComplex &K = MC.complex;
  const Labeling &L = MC.labels;
  bool ok = true;
  auto shape = [&](const std::string &msg) {
    ok = false;
    if (out)
      out->push_back({"shape", msg});
  };
  if (static_cast<int>(L.p_vertex.size()) != K.vertex_count() || static_cast<int>(L.p_edge.size()) != K.edge_count() ||
      static_cast<int>(L.l_face.size()) != K.face_count() || static_cast<int>(L.l_edge.size()) != K.edge_count()) {
    shape("labeling sizes do not match the complex");
    return false;
  }
  for (int x : L.p_vertex)
    if (x < 1 || x > m)
      shape("point label " + std::to_string(x) + " outside 1.." + std::to_string(m));
  for (int x : L.p_edge)
    if (x < 1 || x > m)
      shape("point label " + std::to_string(x) + " outside 1.." + std::to_string(m));
  for (int x : L.l_face)
    if (x < 1 || x > n)
      shape("line label " + std::to_string(x) + " outside 1.." + std::to_string(n));
  for (int x : L.l_edge)
    if (x < 1 || x > n)
      shape("line label " + std::to_string(x) + " outside 1.." + std::to_string(n));
  if (MC.marked < 0 || MC.marked >= K.face_count())
    shape("marked face out of range");
  return ok;
}

} // namespace

ValidationReport validate_elementary_proof(const MarkedComplex &MC, const IncidenceMatrix &M, const GroupSpec &G) {
  ValidationReport R;
  if (!labels_in_range(MC, M.rows(), M.cols(), &R.violations))
    return R;
  Pairs P = structural_pairs(MC);

  int zero_pairs = 0;
  bool zero_in_marked = false;
  for (int f = 0; f < MC.complex.face_count(); ++f) {
    if (MC.labels.l_face[f] != 1)
      continue;
    std::set<int> seen;
    for (const DirEdge &d : MC.complex.faces()[f].sides)
      if (seen.insert(d.edge).second && MC.labels.p_edge[d.edge] == 1) {
        ++zero_pairs;
        zero_in_marked |= f == MC.marked;
      }
  }
  if (zero_pairs != 1 || !zero_in_marked)
    R.violations.push_back({"0", std::to_string(zero_pairs) +
                                     " edge/face pairs carry p = l = 1; exactly one, in the marked face, is required",
                            1, 1});
  bool skip_unique = zero_pairs == 1;

  auto expect = [&](const Pairs::Item &it, Tri want, const char *prop) {
    Tri got = M.at(it.point, it.line);
    if (got != want)
      R.violations.push_back({prop,
                              it.what + ": M[" + std::to_string(it.point) + "][" + std::to_string(it.line) +
                                  "] = " + std::to_string(to_int(got)),
                              it.point, it.line});
  };
  for (const auto &it : P.edge_in_face) {
    if (skip_unique && it.point == 1 && it.line == 1)
      continue;
    expect(it, Tri::PlusOne, "+1");
  }
  for (const auto &it : P.plus)
    expect(it, Tri::PlusOne, "+1");
  for (const auto &it : P.minus)
    expect(it, Tri::MinusOne, "-1");

  R.excisable = can_excise(MC.complex, MC.marked, G);
  if (!R.excisable)
    R.violations.push_back({"*", "marked " + fname(MC.marked) + " cannot be excised over " + G.describe()});
  return R;
}

ValidationReport validate_with_target(const MarkedComplex &MC, const IncidenceMatrix &M, const GroupSpec &G, int i,
                                      int j) {
  IncidenceMatrix C = contradiction_form(M, i, j);
  MarkedComplex X = MC;
  auto swap_label = [](std::vector<int> &v, int a) {
    for (int &x : v)
      x = x == 1 ? a : x == a ? 1 : x;
  };
  swap_label(X.labels.p_vertex, i);
  swap_label(X.labels.p_edge, i);
  swap_label(X.labels.l_face, j);
  swap_label(X.labels.l_edge, j);
  return validate_elementary_proof(X, C, G);
}

bool labeling_bijective(const MarkedComplex &MC) {
  const DeltaComplex &K = MC.complex;
  const Labeling &L = MC.labels;
  auto is_perm = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k] != static_cast<int>(k) + 1)
        return false;
    return true;
  };
  if (static_cast<int>(L.p_vertex.size()) != K.vertex_count() || static_cast<int>(L.p_edge.size()) != K.edge_count() ||
      static_cast<int>(L.l_face.size()) != K.face_count() || static_cast<int>(L.l_edge.size()) != K.edge_count())
    return false;
  std::vector<int> p = L.p_vertex, l = L.l_face;
  p.insert(p.end(), L.p_edge.begin(), L.p_edge.end());
  l.insert(l.end(), L.l_edge.begin(), L.l_edge.end());
  return is_perm(p) && is_perm(l);
}

IncidenceMatrix generate_theorem(const MarkedComplex &MC) {
  if (!labeling_bijective(MC))
    throw Error("NotBijective", "p and l must be bijections onto 1..m and 1..n");
  const int m = MC.complex.vertex_count() + MC.complex.edge_count();
  const int n = MC.complex.face_count() + MC.complex.edge_count();
  IncidenceMatrix M(m, n);
  Pairs P = structural_pairs(MC);
  auto put = [&](const Pairs::Item &it, Tri v) {
    Tri cur = M.at(it.point, it.line);
    if (cur != Tri::Zero && cur != v)
      throw Error("LabelConflict", it.what + " needs both signs");
    M.set_cell(it.point - 1, it.line - 1, v);
  };
  for (const auto &it : P.edge_in_face)
    if (!(it.point == 1 && it.line == 1))
      put(it, Tri::PlusOne);
  for (const auto &it : P.plus)
    put(it, Tri::PlusOne);
  for (const auto &it : P.minus)
    put(it, Tri::MinusOne);
  return M;
}

namespace {

// Collects triangles with per-edge and per-face labels, then builds a
// simplicial complex whose edges are keyed by their vertex pair.
struct TriangleBuilder {
  std::vector<int> vertex_point;
  std::vector<std::array<int, 3>> tris;
  std::vector<int> face_line;
  std::map<std::pair<int, int>, std::pair<int, int>> edge_label; // (point, line)

  int add_vertex(int point) {
    vertex_point.push_back(point);
    return static_cast<int>(vertex_point.size()) - 1;
  }
  void label_edge(int a, int b, std::pair<int, int> lab) {
    auto key = std::minmax(a, b);
    auto [it, fresh] = edge_label.emplace(key, lab);
    if (!fresh && it->second != lab)
      throw Error("LabelConflict", "subdivision produced two labels for one edge");
  }
  int add_face(std::array<int, 3> t, int line) {
    tris.push_back(t);
    face_line.push_back(line);
    return static_cast<int>(tris.size()) - 1;
  }
  MarkedComplex build(int marked) const {
    MarkedComplex out;
    out.complex = DeltaComplex::from_triangles(static_cast<int>(vertex_point.size()), tris);
    out.labels.p_vertex = vertex_point;
    out.labels.l_face = face_line;
    for (const Edge &e : out.complex.edges()) {
      auto lab = edge_label.at(std::minmax(e.tail, e.head));
      out.labels.p_edge.push_back(lab.first);
      out.labels.l_edge.push_back(lab.second);
    }
    out.marked = marked;
    return out;
  }
};

} // namespace

MarkedComplex octahedral_subdivide(const MarkedComplex &MC) {
  const DeltaComplex &K = MC.complex;
  const Labeling &L = MC.labels;
  const auto &E = K.edges();
  for (int f = 0; f < K.face_count(); ++f) {
    auto v = K.face_vertices(f);
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2])
      throw Error("DegenerateFace", fname(f) + " repeats a vertex");
  }
  TriangleBuilder B;
  for (int v = 0; v < K.vertex_count(); ++v)
    B.add_vertex(L.p_vertex[v]);

  std::set<int> kept;
  for (const DirEdge &d : K.faces()[MC.marked].sides)
    kept.insert(d.edge);
  // Edges off the marked face become tail - m1 - m2 - head, with m1 carrying
  // the head's point and m2 the tail's, so colours keep alternating.
  std::vector<std::array<int, 2>> mids(K.edge_count(), {-1, -1});
  for (int e = 0; e < K.edge_count(); ++e) {
    std::pair<int, int> lab{L.p_edge[e], L.l_edge[e]};
    if (kept.count(e)) {
      B.label_edge(E[e].tail, E[e].head, lab);
      continue;
    }
    int m1 = B.add_vertex(L.p_vertex[E[e].head]);
    int m2 = B.add_vertex(L.p_vertex[E[e].tail]);
    mids[e] = {m1, m2};
    B.label_edge(E[e].tail, m1, lab);
    B.label_edge(m1, m2, lab);
    B.label_edge(m2, E[e].head, lab);
  }

  int marked_out = -1;
  for (int f = 0; f < K.face_count(); ++f) {
    const auto &s = K.faces()[f].sides;
    auto v = K.face_vertices(f);
    if (f == MC.marked) {
      marked_out = B.add_face(v, L.l_face[f]);
      continue;
    }
    // colour k = corner v[k]; side k joins colours k and k+1
    auto side_of = [&](int c1, int c2) {
      for (int k = 0; k < 3; ++k)
        if ((k == c1 && (k + 1) % 3 == c2) || (k == c2 && (k + 1) % 3 == c1))
          return k;
      throw Error("DegenerateFace", "bad colour pair");
    };
    std::map<int, int> col;
    for (int k = 0; k < 3; ++k)
      col[v[k]] = k;
    int inner[3];
    for (int k = 0; k < 3; ++k) {
      inner[k] = B.add_vertex(L.p_vertex[v[k]]);
      col[inner[k]] = k;
    }
    // path along side k from v[k] to v[k+1]
    auto side_path = [&](int k) {
      const DirEdge &d = s[k];
      std::vector<int> path{v[k]};
      if (mids[d.edge][0] >= 0) {
        auto [m1, m2] = mids[d.edge];
        if (d.forward) {
          path.push_back(m1);
          path.push_back(m2);
        } else {
          path.push_back(m2);
          path.push_back(m1);
        }
        col[path[1]] = (k + 1) % 3;
        col[path[2]] = k;
      }
      path.push_back(v[(k + 1) % 3]);
      return path;
    };
    std::vector<std::array<int, 3>> local;
    const int a = v[0], b = v[1], c = v[2];
    const int a2 = inner[0], b2 = inner[1], c2 = inner[2];
    const int opposite[3] = {c2, a2, b2}; // apex over side k
    for (int k = 0; k < 3; ++k) {
      auto path = side_path(k);
      for (size_t t = 0; t + 1 < path.size(); ++t)
        local.push_back({path[t], path[t + 1], opposite[k]});
    }
    local.push_back({a, c2, b2});
    local.push_back({b, a2, c2});
    local.push_back({c, b2, a2});
    local.push_back({a2, b2, c2});
    for (const auto &t : local) {
      for (int k = 0; k < 3; ++k) {
        int x = t[k], y = t[(k + 1) % 3];
        const DirEdge &d = s[side_of(col.at(x), col.at(y))];
        B.label_edge(x, y, {L.p_edge[d.edge], L.l_edge[d.edge]});
      }
      B.add_face(t, L.l_face[f]);
    }
  }
  MarkedComplex out = B.build(marked_out);
  if (!out.complex.simplicial())
    throw Error("NotSimplicial", "subdivision did not produce a simplicial complex");
  return out;
}

MarkedComplex desargues_tetrahedron() {
  // points: 1..6 = edge points 12,13,14,23,24,34; 7..10 = vertices 1..4
  // lines: 1 = face 124 (marked), 2 = 123, 3 = 234, 4 = 134; 5..10 = edge lines
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  auto de = [](int e, bool fwd) { return DirEdge{e, fwd}; };
  std::vector<Face> faces{
      Face{{de(0, true), de(4, true), de(2, false)}},  // 1 -> 2 -> 4 -> 1
      Face{{de(0, true), de(3, true), de(1, false)}},  // 1 -> 2 -> 3 -> 1
      Face{{de(3, true), de(5, true), de(4, false)}},  // 2 -> 3 -> 4 -> 2
      Face{{de(1, true), de(5, true), de(2, false)}},  // 1 -> 3 -> 4 -> 1
  };
  MarkedComplex MC;
  MC.complex = DeltaComplex(4, edges, faces, true);
  MC.labels.p_vertex = {7, 8, 9, 10};
  MC.labels.p_edge = {1, 2, 3, 4, 5, 6};
  MC.labels.l_face = {1, 2, 3, 4};
  MC.labels.l_edge = {5, 6, 7, 8, 9, 10};
  MC.marked = 0;
  return MC;
}

DeltaComplex polygon_surface(int genus) {
  if (genus < 0)
    throw Error("BadArgument", "genus must be nonnegative");
  if (genus == 0) {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    return DeltaComplex(3, edges,
                        {Face{{DirEdge{0, true}, DirEdge{1, true}, DirEdge{2, false}}},
                         Face{{DirEdge{2, true}, DirEdge{1, false}, DirEdge{0, false}}}});
  }
  // edges 0..2g-1 are the loops a_i, b_i at the corner vertex 0; spokes
  // 2g..6g-1 run from corner i to the centre 1
  const int sides = 4 * genus, loops = 2 * genus;
  std::vector<Edge> edges;
  for (int i = 0; i < loops; ++i)
    edges.push_back({0, 0});
  for (int i = 0; i < sides; ++i)
    edges.push_back({0, 1});
  std::vector<Face> faces;
  for (int i = 0; i < sides; ++i) {
    int block = i / 4, pos = i % 4;
    int gen = 2 * block + (pos % 2);
    bool fwd = pos < 2;
    int spoke = loops + i, next = loops + (i + 1) % sides;
    faces.push_back(Face{{DirEdge{gen, fwd}, DirEdge{next, true}, DirEdge{spoke, false}}});
  }
  return DeltaComplex(2, edges, faces);
}

DeltaComplex random_surface(int genus, int faces, std::mt19937_64 &rng) {
  DeltaComplex K = polygon_surface(genus);
  int nv = K.vertex_count();
  std::vector<Edge> E = K.edges();
  std::vector<Face> F = K.faces();
  auto head_of = [&](const DirEdge &d) { return d.to(E); };
  auto tail_of = [&](const DirEdge &d) { return d.from(E); };
  while (static_cast<int>(F.size()) < faces) {
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      // stellar subdivision of a face
      int f = std::uniform_int_distribution<int>(0, static_cast<int>(F.size()) - 1)(rng);
      Face old = F[f];
      int c = nv++;
      int spoke[3];
      for (int k = 0; k < 3; ++k) {
        spoke[k] = static_cast<int>(E.size());
        E.push_back({tail_of(old.sides[k]), c});
      }
      F[f] = Face{{old.sides[0], DirEdge{spoke[1], true}, DirEdge{spoke[0], false}}};
      F.push_back(Face{{old.sides[1], DirEdge{spoke[2], true}, DirEdge{spoke[1], false}}});
      F.push_back(Face{{old.sides[2], DirEdge{spoke[0], true}, DirEdge{spoke[2], false}}});
      continue;
    }
    // edge subdivision: e = t -> h becomes t -> m, plus a new edge m -> h
    int e = std::uniform_int_distribution<int>(0, static_cast<int>(E.size()) - 1)(rng);
    std::vector<std::pair<int, int>> uses; // (face, side)
    for (int f = 0; f < static_cast<int>(F.size()); ++f)
      for (int k = 0; k < 3; ++k)
        if (F[f].sides[k].edge == e)
          uses.push_back({f, k});
    bool twice = false;
    for (size_t a = 0; a < uses.size(); ++a)
      for (size_t b = a + 1; b < uses.size(); ++b)
        twice = twice || uses[a].first == uses[b].first;
    if (twice)
      continue;
    int m = nv++;
    int head = E[e].head;
    int rest = static_cast<int>(E.size());
    E[e].head = m;
    E.push_back({m, head});
    for (auto [f, k] : uses) {
      Face old = F[f];
      const DirEdge &s = old.sides[k];
      const DirEdge &s1 = old.sides[(k + 1) % 3], &s2 = old.sides[(k + 2) % 3];
      int z = head_of(s1);
      int g = static_cast<int>(E.size());
      E.push_back({m, z});
      DirEdge first = s.forward ? DirEdge{e, true} : DirEdge{rest, false};
      DirEdge second = s.forward ? DirEdge{rest, true} : DirEdge{e, false};
      F[f] = Face{{first, DirEdge{g, true}, s2}};
      F.push_back(Face{{second, s1, DirEdge{g, false}}});
    }
  }
  return DeltaComplex(nv, E, F);
}

} // namespace tiling
