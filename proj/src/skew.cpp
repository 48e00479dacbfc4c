#include "tiling/skew.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace tiling {

Quaternion Quaternion::inverse() const {
  mpq_class n = norm();
  if (n == 0)
    throw Error("DivisionByZero", "the zero quaternion has no inverse");
  return {a / n, -b / n, -c / n, -d / n};
}

Quaternion operator+(const Quaternion &x, const Quaternion &y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}
Quaternion operator-(const Quaternion &x, const Quaternion &y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}
Quaternion operator-(const Quaternion &x) { return {-x.a, -x.b, -x.c, -x.d}; }
Quaternion operator*(const Quaternion &x, const Quaternion &y) {
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d, x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b, x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

std::string to_string(const Quaternion &q) {
  std::ostringstream os;
  bool any = false;
  auto term = [&](const mpq_class &v, const char *unit) {
    if (v == 0)
      return;
    mpq_class mag = abs(v);
    if (any)
      os << (v < 0 ? '-' : '+');
    else if (v < 0)
      os << '-';
    if (!(*unit && mag == 1))
      os << mag.get_str();
    os << unit;
    any = true;
  };
  term(q.a, "");
  term(q.b, "i");
  term(q.c, "j");
  term(q.d, "k");
  if (!any)
    os << "0";
  return os.str();
}

namespace {

mpq_class parse_rational(const std::string &s) {
  if (s.empty())
    throw Error("ParseError", "empty rational");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' && ch != '+')
      throw Error("ParseError", "bad rational '" + s + "'");
  mpq_class r;
  try {
    r = mpq_class(s[0] == '+' ? s.substr(1) : s);
  } catch (const std::exception &) {
    throw Error("ParseError", "bad rational '" + s + "'");
  }
  if (r.get_den() == 0)
    throw Error("ParseError", "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

} // namespace

Quaternion parse_quaternion(const std::string &raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s += ch;
  if (s.empty())
    throw Error("ParseError", "empty quaternion");
  if (s.find(',') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string p;
    while (std::getline(ss, p, ','))
      parts.push_back(p);
    if (parts.size() != 4)
      throw Error("ParseError", "expected four comma-separated rationals");
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]), parse_rational(parts[3])};
  }
  Quaternion q;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    std::string num = s.substr(start, pos - start);
    char unit = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k'))
      unit = s[pos++];
    if (num.empty() && !unit)
      throw Error("ParseError", "cannot read quaternion '" + raw + "'");
    mpq_class v = num.empty() ? mpq_class(1) : parse_rational(num);
    if (sign < 0)
      v = -v;
    switch (unit) {
    case 'i':
      q.b += v;
      break;
    case 'j':
      q.c += v;
      break;
    case 'k':
      q.d += v;
      break;
    default:
      q.a += v;
    }
  }
  return q;
}

std::vector<std::string> quaternion_parts(const Quaternion &q) {
  auto f = [](const mpq_class &v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); };
  return {f(q.a), f(q.b), f(q.c), f(q.d)};
}

SkewPoint operator-(const SkewPoint &p, const SkewPoint &q) { return {p.x - q.x, p.y - q.y}; }
SkewPoint operator+(const SkewPoint &p, const SkewPoint &q) { return {p.x + q.x, p.y + q.y}; }
SkewPoint operator*(const Quaternion &k, const SkewPoint &p) { return {k * p.x, k * p.y}; }

bool on_line(const SkewPoint &P, const SkewLine &L) { return (P.x * L.a + P.y * L.b + L.c).is_zero(); }

SkewLine skew_join(const SkewPoint &P, const SkewPoint &Q) {
  SkewPoint v = Q - P;
  SkewLine L;
  if (v.x.is_zero() && v.y.is_zero())
    throw Error("CoincidentPoints", "a line needs two distinct points");
  if (v.x.is_zero()) {
    L.a = 1;
    L.b = 0;
  } else {
    L.b = 1;
    L.a = -(v.x.inverse() * v.y);
  }
  L.c = -(P.x * L.a + P.y * L.b);
  return L;
}

namespace {

// k with w = k v, if any (v nonzero).
std::optional<Quaternion> left_ratio(const SkewPoint &w, const SkewPoint &v) {
  Quaternion k = v.x.is_zero() ? w.y * v.y.inverse() : w.x * v.x.inverse();
  if (k * v.x == w.x && k * v.y == w.y)
    return k;
  return std::nullopt;
}

} // namespace

bool skew_collinear(const SkewPoint &A, const SkewPoint &B, const SkewPoint &C) {
  SkewPoint v = B - A, w = C - A;
  if (v.x.is_zero() && v.y.is_zero())
    return true;
  return left_ratio(w, v).has_value();
}

Quaternion left_bracket(const SkewPoint &Y, const SkewPoint &Z, const SkewPoint &X) {
  SkewPoint v = Z - X;
  if (v.x.is_zero() && v.y.is_zero())
    throw Error("DegenerateDenominator", "Z coincides with X");
  auto k = left_ratio(Y - X, v);
  if (!k)
    throw Error("NotCollinear", "Y is not on the line XZ");
  return *k;
}

MenelausResult menelaus_check(const SkewPoint &A, const SkewPoint &B, const SkewPoint &C, const SkewPoint &D,
                              const SkewPoint &E, const SkewPoint &F) {
  if (A == B || B == C || C == A || skew_collinear(A, B, C))
    throw Error("DegenerateTriangle", "A, B, C must not be collinear");
  auto side = [](const SkewPoint &P, const SkewPoint &Q, const SkewPoint &X, const char *name) {
    if (X == P || X == Q)
      throw Error("DegeneratePoint", std::string(name) + " coincides with a vertex");
    if (!skew_collinear(P, Q, X))
      throw Error("NotCollinear", std::string(name) + " is not on its side");
  };
  side(A, B, D, "D");
  side(B, C, E, "E");
  side(C, A, F, "F");
  MenelausResult r;
  r.product = left_bracket(A, B, D) * left_bracket(B, C, E) * left_bracket(C, A, F);
  r.product_is_one = r.product == Quaternion(1);
  r.collinear = skew_collinear(D, E, F);
  return r;
}

namespace {

// Mutable face set used by the shelling and disc checks.
struct DiscState {
  std::vector<std::array<int, 3>> tris; // oriented vertex triples
  std::vector<char> alive;
  std::map<std::pair<int, int>, int> edge_use; // unordered pair -> alive faces using it

  explicit DiscState(const TriangulatedDisc &D) {
    for (int f = 0; f < D.complex.face_count(); ++f)
      tris.push_back(D.complex.face_vertices(f));
    alive.assign(tris.size(), 1);
    for (const auto &t : tris)
      for (int k = 0; k < 3; ++k)
        ++edge_use[std::minmax(t[k], t[(k + 1) % 3])];
  }
  int alive_count() const { return static_cast<int>(std::count(alive.begin(), alive.end(), 1)); }
  bool boundary_edge(int a, int b) const {
    auto it = edge_use.find(std::minmax(a, b));
    return it != edge_use.end() && it->second == 1;
  }
  std::set<int> boundary_vertices() const {
    std::set<int> out;
    for (const auto &[e, n] : edge_use)
      if (n == 1) {
        out.insert(e.first);
        out.insert(e.second);
      }
    return out;
  }
  bool is_free(int f, const std::set<int> &bverts) const {
    const auto &t = tris[f];
    int nb = 0, lone = -1;
    for (int k = 0; k < 3; ++k)
      if (boundary_edge(t[k], t[(k + 1) % 3])) {
        ++nb;
        lone = k;
      }
    if (nb >= 2)
      return true;
    if (nb == 1)
      return !bverts.count(t[(lone + 2) % 3]);
    return false;
  }
  void remove(int f) {
    alive[f] = 0;
    const auto &t = tris[f];
    for (int k = 0; k < 3; ++k) {
      auto key = std::minmax(t[k], t[(k + 1) % 3]);
      if (--edge_use[key] == 0)
        edge_use.erase(key);
    }
  }
};

// Boundary cycle of the alive faces, oriented along the faces; empty if the
// boundary edges do not form a single cycle.
std::vector<int> boundary_cycle(const DiscState &S) {
  std::map<int, int> next;
  for (size_t f = 0; f < S.tris.size(); ++f) {
    if (!S.alive[f])
      continue;
    const auto &t = S.tris[f];
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      if (S.boundary_edge(a, b)) {
        if (next.count(a))
          return {};
        next[a] = b;
      }
    }
  }
  if (next.empty())
    return {};
  std::vector<int> cycle{next.begin()->first};
  while (true) {
    int v = next[cycle.back()];
    if (v == cycle.front())
      break;
    if (static_cast<int>(cycle.size()) > static_cast<int>(next.size()))
      return {};
    cycle.push_back(v);
  }
  if (cycle.size() != next.size())
    return {};
  return cycle;
}

void check_state(const DiscState &S) {
  std::vector<std::array<int, 3>> tris;
  for (size_t f = 0; f < S.tris.size(); ++f)
    if (S.alive[f])
      tris.push_back(S.tris[f]);
  // relabel the used vertices densely
  std::map<int, int> id;
  for (auto &t : tris)
    for (int &v : t) {
      auto it = id.emplace(v, static_cast<int>(id.size())).first;
      v = it->second;
    }
  TriangulatedDisc D = disc_from_triangles(static_cast<int>(id.size()), tris);
  check_disc(D);
}

} // namespace

TriangulatedDisc disc_from_triangles(int vertices, const std::vector<std::array<int, 3>> &tris) {
  TriangulatedDisc D;
  D.complex = DeltaComplex::from_triangles(vertices, tris);
  DiscState S(D);
  D.boundary = boundary_cycle(S);
  if (!D.boundary.empty()) {
    // start at the smallest vertex for a stable presentation
    auto it = std::min_element(D.boundary.begin(), D.boundary.end());
    std::rotate(D.boundary.begin(), it, D.boundary.end());
  }
  return D;
}

void check_disc(const TriangulatedDisc &D) {
  const DeltaComplex &K = D.complex;
  auto fail = [](const std::string &why) { throw Error("NotADisc", why); };
  if (K.face_count() == 0)
    fail("no faces");
  if (!K.is_simplicial())
    fail("not simplicial");
  std::vector<int> deg = K.edge_degrees();
  for (int d : deg)
    if (d > 2)
      fail("an edge lies in more than two faces");
  if (K.vertex_count() - K.edge_count() + K.face_count() != 1)
    fail("Euler characteristic is not 1");
  // interior edges are traversed once in each direction
  std::vector<int> fwd(K.edge_count(), 0);
  for (const Face &f : K.faces())
    for (const DirEdge &d : f.sides)
      fwd[d.edge] += d.forward ? 1 : -1;
  for (int e = 0; e < K.edge_count(); ++e)
    if (deg[e] == 2 && fwd[e] != 0)
      fail("faces are not coherently oriented");
  DiscState S(D);
  std::vector<int> cyc = boundary_cycle(S);
  if (cyc.empty())
    fail("boundary is not a single cycle");
  if (cyc.size() != D.boundary.size())
    fail("boundary cycle does not match the boundary edges");
  auto it = std::find(cyc.begin(), cyc.end(), D.boundary.empty() ? -1 : D.boundary[0]);
  if (it == cyc.end())
    fail("boundary cycle does not match the boundary edges");
  std::rotate(cyc.begin(), it, cyc.end());
  if (cyc != D.boundary)
    fail("boundary cycle does not match the boundary edges");
  // connected and every vertex used
  std::vector<int> parent(K.vertex_count());
  for (int v = 0; v < K.vertex_count(); ++v)
    parent[v] = v;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<char> used(K.vertex_count(), 0);
  for (const Edge &e : K.edges()) {
    parent[find(e.tail)] = find(e.head);
    used[e.tail] = used[e.head] = 1;
  }
  for (int v = 0; v < K.vertex_count(); ++v) {
    if (!used[v])
      fail("isolated vertex");
    if (find(v) != find(0))
      fail("not connected");
  }
}

std::vector<int> free_faces(const TriangulatedDisc &D) {
  check_disc(D);
  DiscState S(D);
  auto bv = S.boundary_vertices();
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(S.tris.size()); ++f)
    if (S.is_free(f, bv))
      out.push_back(f);
  return out;
}

std::vector<int> shell(const TriangulatedDisc &D) {
  check_disc(D);
  DiscState S(D);
  std::vector<int> order;
  while (S.alive_count() > 1) {
    auto bv = S.boundary_vertices();
    int pick = -1;
    for (int f = 0; f < static_cast<int>(S.tris.size()) && pick < 0; ++f)
      if (S.alive[f] && S.is_free(f, bv))
        pick = f;
    if (pick < 0)
      throw Error("NotADisc", "no free face left");
    S.remove(pick);
    order.push_back(pick);
    check_state(S);
  }
  return order;
}

TriangulatedDisc random_disc(int faces, std::mt19937_64 &rng) {
  if (faces < 1)
    throw Error("BadArgument", "a disc needs at least one face");
  std::vector<std::array<int, 3>> tris{{0, 1, 2}};
  std::vector<int> bd{0, 1, 2};
  int nv = 3;
  std::set<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
  auto add_edge = [&](int a, int b) { edges.insert(std::minmax(a, b)); };
  while (static_cast<int>(tris.size()) < faces) {
    int left = faces - static_cast<int>(tris.size());
    int move = std::uniform_int_distribution<int>(0, 2)(rng);
    if (move == 1 && left >= 2) { // stellar subdivision of a face
      size_t f = std::uniform_int_distribution<size_t>(0, tris.size() - 1)(rng);
      auto [a, b, c] = tris[f];
      int d = nv++;
      tris[f] = {a, b, d};
      tris.push_back({b, c, d});
      tris.push_back({c, a, d});
      add_edge(a, d), add_edge(b, d), add_edge(c, d);
      continue;
    }
    int n = static_cast<int>(bd.size());
    int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (move == 2 && n > 3) { // ear across two consecutive boundary edges
      int a = bd[i], b = bd[(i + 1) % n], c = bd[(i + 2) % n];
      if (!edges.count(std::minmax(a, c))) {
        tris.push_back({a, c, b});
        add_edge(a, c);
        bd.erase(bd.begin() + (i + 1) % n);
        continue;
      }
    }
    // cone over a boundary edge
    int a = bd[i], b = bd[(i + 1) % n];
    int c = nv++;
    tris.push_back({b, a, c});
    add_edge(a, c), add_edge(b, c);
    bd.insert(bd.begin() + i + 1, c);
  }
  TriangulatedDisc D = disc_from_triangles(nv, tris);
  check_disc(D);
  return D;
}

namespace {

Quaternion edge_value(const DeltaComplex &K, const QuaternionCochain &U, int a, int b) {
  for (int e = 0; e < K.edge_count(); ++e) {
    const Edge &x = K.edges()[e];
    if (x.tail == a && x.head == b)
      return U.at(e);
    if (x.tail == b && x.head == a)
      return U.at(e).inverse();
  }
  throw Error("NotADisc", "no edge between consecutive vertices");
}

Quaternion word(const DeltaComplex &K, const QuaternionCochain &U, const std::vector<int> &cycle) {
  Quaternion p(1);
  for (size_t t = 0; t < cycle.size(); ++t)
    p = p * edge_value(K, U, cycle[t], cycle[(t + 1) % cycle.size()]);
  return p;
}

Quaternion face_product(const DeltaComplex &K, const Face &f, const QuaternionCochain &U) {
  Quaternion p(1);
  for (const DirEdge &d : f.sides)
    p = p * (d.forward ? U.at(d.edge) : U.at(d.edge).inverse());
  (void)K;
  return p;
}

} // namespace

BoundaryValue evaluate_boundary(const TriangulatedDisc &D, const QuaternionCochain &U) {
  check_disc(D);
  const DeltaComplex &K = D.complex;
  for (int e = 0; e < K.edge_count(); ++e)
    if (!U.count(e) || U.at(e).is_zero())
      throw Error("FlatnessViolated", "edge " + std::to_string(e + 1) + " has no invertible value");
  for (int f = 0; f < K.face_count(); ++f)
    if (face_product(K, K.faces()[f], U) != Quaternion(1))
      throw Error("FlatnessViolated", "face " + std::to_string(f + 1) + " is not flat");

  BoundaryValue out;
  out.direct = word(K, U, D.boundary);

  DiscState S(D);
  std::vector<int> cyc = D.boundary;
  for (int f : shell(D)) {
    const auto &t = S.tris[f];
    int nb = 0;
    for (int k = 0; k < 3; ++k)
      nb += S.boundary_edge(t[k], t[(k + 1) % 3]);
    if (nb >= 2) {
      // the vertex shared by the two boundary edges leaves the cycle
      for (int k = 0; k < 3; ++k) {
        int v = t[k];
        if (S.boundary_edge(t[(k + 2) % 3], v) && S.boundary_edge(v, t[(k + 1) % 3])) {
          cyc.erase(std::find(cyc.begin(), cyc.end(), v));
          break;
        }
      }
    } else {
      // boundary edge a -> b becomes a -> c -> b
      for (int k = 0; k < 3; ++k) {
        int a = t[k], b = t[(k + 1) % 3], c = t[(k + 2) % 3];
        if (S.boundary_edge(a, b)) {
          auto it = std::find(cyc.begin(), cyc.end(), b);
          cyc.insert(it, c);
          break;
        }
      }
    }
    S.remove(f);
  }
  // rotate so the word starts where the boundary word started, when possible
  auto it = std::find(cyc.begin(), cyc.end(), D.boundary.front());
  if (it != cyc.end())
    std::rotate(cyc.begin(), it, cyc.end());
  out.shelled = word(K, U, cyc);
  return out;
}

Quaternion random_quaternion(std::mt19937_64 &rng, int range) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  for (;;) {
    Quaternion q(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
                 mpq_class(num(rng), den(rng)));
    q.a.canonicalize();
    q.b.canonicalize();
    q.c.canonicalize();
    q.d.canonicalize();
    if (!q.is_zero())
      return q;
  }
}

QuaternionCochain random_flat_cochain(const DeltaComplex &K, std::mt19937_64 &rng) {
  std::vector<Quaternion> g;
  for (int v = 0; v < K.vertex_count(); ++v)
    g.push_back(random_quaternion(rng));
  QuaternionCochain U;
  for (int e = 0; e < K.edge_count(); ++e)
    U[e] = g[K.edges()[e].tail] * g[K.edges()[e].head].inverse();
  return U;
}

bool satisfies(const IncidenceMatrix &M, const SkewConfiguration &C) {
  if (static_cast<int>(C.points.size()) < M.rows() || static_cast<int>(C.lines.size()) < M.cols())
    throw Error("DimensionMismatch", "configuration is smaller than the matrix");
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) {
      Tri v = M.cell(r, c);
      if (v != Tri::Zero && on_line(C.points[r], C.lines[c]) != (v == Tri::PlusOne))
        return false;
    }
  return true;
}

namespace {

// X on the line P_a P_b with [P_a X / P_b X] = u.
SkewPoint ratio_point(const SkewPoint &Pa, const SkewPoint &Pb, const Quaternion &u) {
  Quaternion s = (Quaternion(1) - u).inverse();
  return s * (Pa - u * Pb);
}

// Realizes a labeled complex on given vertex points; every edge value must
// differ from 1.
SkewConfiguration realize_skew(const MarkedComplex &MC, const std::vector<SkewPoint> &verts,
                               const QuaternionCochain &U, int m, int n) {
  const DeltaComplex &K = MC.complex;
  SkewConfiguration C;
  C.points.assign(m, SkewPoint{});
  C.lines.assign(n, SkewLine{});
  for (int v = 0; v < K.vertex_count(); ++v)
    C.points[MC.labels.p_vertex[v] - 1] = verts[v];
  for (int e = 0; e < K.edge_count(); ++e) {
    const Edge &x = K.edges()[e];
    C.points[MC.labels.p_edge[e] - 1] = ratio_point(verts[x.tail], verts[x.head], U.at(e));
    C.lines[MC.labels.l_edge[e] - 1] = skew_join(verts[x.tail], verts[x.head]);
  }
  for (int f = 0; f < K.face_count(); ++f) {
    std::vector<SkewPoint> pts;
    for (const DirEdge &d : K.faces()[f].sides) {
      int lab = MC.labels.p_edge[d.edge];
      if (!(f == MC.marked && lab == 1))
        pts.push_back(C.points[lab - 1]);
    }
    C.lines[MC.labels.l_face[f] - 1] = skew_join(pts[0], pts[1]);
  }
  return C;
}

} // namespace

PappusCounterexample pappus_counterexample(const Quaternion &u, const Quaternion &v) {
  if (u * v == v * u)
    throw Error("Commuting", "u and v commute");
  MarkedComplex MC;
  {
    // Pappus torus with the Case 1 labels: edges 0-2 B->C, 3-5 A->B, 6-8 A->C
    std::vector<Edge> edges{{1, 2}, {1, 2}, {1, 2}, {0, 1}, {0, 1}, {0, 1}, {0, 2}, {0, 2}, {0, 2}};
    auto s = [](int se) { return DirEdge{std::abs(se) - 1, se > 0}; };
    auto face = [&](int a, int b, int c) { return Face{{s(a), s(b), s(c)}}; };
    MC.complex = DeltaComplex(3, edges,
                              {face(-1, -4, 9), face(-2, -5, 7), face(-3, -6, 8), face(3, -9, 5), face(2, -8, 4),
                               face(-1, -6, 7)});
    MC.labels.p_vertex = {10, 11, 12};
    MC.labels.p_edge = {1, 8, 9, 5, 6, 7, 2, 3, 4};
    MC.labels.l_face = {9, 5, 6, 8, 7, 1};
    MC.labels.l_edge = {4, 4, 4, 3, 3, 3, 2, 2, 2};
    MC.marked = 5;
  }
  // Five face relations solved with holonomies u (edge 1) and v (edge 3);
  // the marked face is left with the commutator u^-1 v u v^-1.
  Quaternion one(1);
  std::vector<Quaternion> base{u, one, v, one, u * v.inverse(), v.inverse(), u * v.inverse(), one, u};

  const std::vector<Quaternion> gauges{Quaternion(1), Quaternion(2), Quaternion(1, 1), Quaternion(1, 0, 1),
                                       Quaternion(2, 0, 0, 1), Quaternion(1, 1, 1), Quaternion(3, 0, 1, 1),
                                       Quaternion(1, 2, 0, 1)};
  const std::vector<SkewPoint> verts{{0, 0}, {1, 0}, {0, 1}};
  std::vector<std::vector<int>> pappus_rows{
      {0, 0, 0, 1, 0, 0, 0, 0, 1},    {1, 1, -1, 0, 1, -1, 0, 0, 0}, {0, 1, -1, 0, -1, 1, 1, 0, 0},
      {0, 1, -1, 0, -1, -1, 0, 1, 1}, {0, -1, 1, 0, -1, -1, 1, 0, 1}, {0, -1, 1, 0, 1, -1, 0, 1, 0},
      {1, -1, 1, 0, -1, 1, 0, 0, 0},  {0, 0, 0, 1, 1, 0, 1, 0, 0},   {0, 0, 0, 1, 0, 1, 0, 1, 0},
      {0, 1, 1, 0, 0, 0, 0, 0, 0},    {0, 0, 1, 1, 0, 0, 0, 0, 0},   {0, 1, 0, 1, 0, 0, 0, 0, 0}};
  IncidenceMatrix M = IncidenceMatrix::from_ints(pappus_rows);

  for (const Quaternion &ga : gauges)
    for (const Quaternion &gb : gauges)
      for (const Quaternion &gc : gauges) {
        const Quaternion g[3] = {ga, gb, gc};
        QuaternionCochain U;
        bool ok = true;
        for (int e = 0; e < 9 && ok; ++e) {
          const Edge &x = MC.complex.edges()[e];
          U[e] = g[x.tail] * base[e] * g[x.head].inverse();
          ok = U[e] != one;
        }
        if (!ok)
          continue;
        SkewConfiguration C = realize_skew(MC, verts, U, 12, 9);
        if (!satisfies(M, C) || on_line(C.points[0], C.lines[0]))
          continue;
        PappusCounterexample out;
        out.config = C;
        out.edge_values = U;
        out.defect = face_product(MC.complex, MC.complex.faces()[5], U);
        // marked face walk C -> B -> A -> C: edge points P1, P7, P2
        const SkewPoint &A = C.points[9], &B = C.points[10], &Cc = C.points[11];
        out.conclusion_product = left_bracket(Cc, B, C.points[0]) * left_bracket(B, A, C.points[6]) *
                                 left_bracket(A, Cc, C.points[1]);
        return out;
      }
  throw Error("NoGeneralPosition", "no gauge in the search set gives a configuration in general position");
}

SoundnessReport desargues_soundness_sample(int trials, uint64_t seed) {
  SoundnessReport R;
  if (trials <= 0)
    return R;
  std::mt19937_64 rng(seed);
  MarkedComplex MC = desargues_tetrahedron();
  const DeltaComplex &K = MC.complex;
  while (R.trials < trials) {
    std::vector<SkewPoint> verts;
    for (int v = 0; v < 4; ++v)
      verts.push_back({random_quaternion(rng, 4), random_quaternion(rng, 4)});
    bool degenerate = false;
    for (int a = 0; a < 4 && !degenerate; ++a)
      for (int b = a + 1; b < 4 && !degenerate; ++b)
        for (int c = b + 1; c < 4 && !degenerate; ++c)
          degenerate = verts[a] == verts[b] || skew_collinear(verts[a], verts[b], verts[c]);
    // edges 12, 13, 14, 23, 24, 34; free values on 12, 23, 34 and the
    // three non-marked faces fix the rest
    QuaternionCochain U;
    U[0] = random_quaternion(rng, 4);
    U[3] = random_quaternion(rng, 4);
    U[5] = random_quaternion(rng, 4);
    U[1] = U[0] * U[3];
    U[4] = U[3] * U[5];
    U[2] = U[1] * U[5];
    for (auto &[e, val] : U)
      degenerate = degenerate || val == Quaternion(1);
    if (degenerate) {
      ++R.rejected;
      continue;
    }
    std::vector<SkewPoint> edge_pt(6);
    for (int e = 0; e < 6; ++e)
      edge_pt[e] = ratio_point(verts[K.edges()[e].tail], verts[K.edges()[e].head], U[e]);
    ++R.trials;
    bool hyp = true;
    for (int f = 1; f < 4; ++f) {
      const auto &s = K.faces()[f].sides;
      hyp = hyp && skew_collinear(edge_pt[s[0].edge], edge_pt[s[1].edge], edge_pt[s[2].edge]);
    }
    const auto &s = K.faces()[0].sides; // 1 -> 2 -> 4 -> 1
    bool concl = skew_collinear(edge_pt[s[0].edge], edge_pt[s[1].edge], edge_pt[s[2].edge]);
    MenelausResult mr = menelaus_check(verts[0], verts[1], verts[3], edge_pt[0], edge_pt[4], edge_pt[2]);
    if (hyp && concl && mr.product_is_one && mr.agrees())
      ++R.passed;
  }
  return R;
}

} // namespace tiling
