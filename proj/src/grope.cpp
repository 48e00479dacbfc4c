#include "tiling/grope.hpp"

#include <map>
#include <set>

namespace tiling {

BoundedSurface fan_disc(int sides) {
  if (sides < 3)
    throw Error("BadBoundary", "a polygon needs at least 3 sides");
  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i < sides; ++i)
    tris.push_back({i, (i + 1) % sides, sides});
  BoundedSurface S;
  S.complex = DeltaComplex::from_triangles(sides + 1, tris);
  for (int i = 0; i < sides; ++i)
    S.boundary.push_back(i);
  return S;
}

Grope grope_base(const DeltaComplex &S) {
  if (!is_closed_orientable_surface(S))
    throw Error("NotAClosedOrientableSurface", "the base of a grope must be a closed orientable surface");
  return Grope{S, {}};
}

namespace {

// Boundary edge ids of S in cycle order, checked against the face structure.
std::vector<DirEdge> boundary_walk(const BoundedSurface &S, int k) {
  const DeltaComplex &K = S.complex;
  const auto &E = K.edges();
  const int len = static_cast<int>(S.boundary.size());
  if (len != 3 * k)
    throw Error("BadBoundary", "boundary has " + std::to_string(len) + " vertices, expected " + std::to_string(3 * k));
  std::set<int> distinct(S.boundary.begin(), S.boundary.end());
  if (static_cast<int>(distinct.size()) != len)
    throw Error("BadBoundary", "boundary cycle repeats a vertex");
  for (int v : S.boundary)
    if (v < 0 || v >= K.vertex_count())
      throw Error("BadBoundary", "boundary vertex out of range");

  std::vector<int> deg = K.edge_degrees();
  std::vector<DirEdge> walk;
  std::set<int> used;
  for (int i = 0; i < len; ++i) {
    int a = S.boundary[i], b = S.boundary[(i + 1) % len];
    int found = -1;
    for (int e = 0; e < K.edge_count(); ++e)
      if (deg[e] == 1 && ((E[e].tail == a && E[e].head == b) || (E[e].tail == b && E[e].head == a))) {
        if (found >= 0)
          throw Error("BadBoundary", "two boundary edges join the same vertices");
        found = e;
      }
    if (found < 0)
      throw Error("BadBoundary", "no boundary edge between consecutive boundary vertices");
    walk.push_back(DirEdge{found, E[found].tail == a});
    used.insert(found);
  }
  for (int e = 0; e < K.edge_count(); ++e) {
    if (used.count(e))
      continue;
    if (deg[e] != 2)
      throw Error("BadBoundary", "edge " + std::to_string(e + 1) + " is neither interior nor on the boundary cycle");
  }
  // the face on each boundary edge must run along the cycle
  for (const Face &f : K.faces())
    for (const DirEdge &d : f.sides)
      for (const DirEdge &w : walk)
        if (d.edge == w.edge && d.forward != w.forward)
          throw Error("BadBoundary", "boundary cycle runs against the face orientation");
  // orientable, connected: cap the boundary with a cone and test the surface
  std::vector<Edge> edges = E;
  std::vector<Face> faces = K.faces();
  int apex = K.vertex_count();
  std::vector<int> spoke(len);
  for (int i = 0; i < len; ++i) {
    spoke[i] = static_cast<int>(edges.size());
    edges.push_back({S.boundary[i], apex});
  }
  for (int i = 0; i < len; ++i) {
    DirEdge back{walk[i].edge, !walk[i].forward};
    faces.push_back(Face{{back, DirEdge{spoke[i], true}, DirEdge{spoke[(i + 1) % len], false}}});
  }
  DeltaComplex capped(apex + 1, edges, faces);
  if (!is_closed_orientable_surface(capped))
    throw Error("BadBoundary", "surface is not a compact orientable surface with this boundary");
  return walk;
}

} // namespace

Grope grope_glue(const Grope &Gr, int face, const BoundedSurface &S, int k, const GroupSpec &G, int offset) {
  const DeltaComplex &K = Gr.complex;
  if (face < 0 || face >= K.face_count())
    throw Error("FaceNotFound", "face " + std::to_string(face + 1) + " does not exist");
  if (k < 2 || !torsion_coprime(k, G))
    throw Error("NotTorsionCoprime", std::to_string(k) + " is not torsion-coprime over " + G.describe());
  std::vector<DirEdge> walk = boundary_walk(S, k);

  const auto &target = K.faces()[face].sides;
  auto tv = K.face_vertices(face);
  const int len = 3 * k;
  auto slot = [&](int i) { return ((i + offset) % 3 + 3) % 3; };

  std::map<int, int> vmap; // S vertex -> new vertex
  for (int i = 0; i < len; ++i)
    vmap[S.boundary[i]] = tv[slot(i)];
  int nv = K.vertex_count();
  for (int v = 0; v < S.complex.vertex_count(); ++v)
    if (!vmap.count(v))
      vmap[v] = nv++;

  std::vector<Edge> edges = K.edges();
  std::map<int, DirEdge> boundary_image; // S edge -> image when walked along the cycle
  for (int i = 0; i < len; ++i)
    boundary_image[walk[i].edge] = target[slot(i)];
  std::map<int, int> emap;
  for (int e = 0; e < S.complex.edge_count(); ++e) {
    if (boundary_image.count(e))
      continue;
    const Edge &x = S.complex.edges()[e];
    emap[e] = static_cast<int>(edges.size());
    edges.push_back({vmap[x.tail], vmap[x.head]});
  }
  std::map<int, bool> walk_dir;
  for (const DirEdge &w : walk)
    walk_dir[w.edge] = w.forward;

  std::vector<Face> faces;
  for (int f = 0; f < K.face_count(); ++f)
    if (f != face)
      faces.push_back(K.faces()[f]);
  for (const Face &f : S.complex.faces()) {
    Face g;
    for (int s = 0; s < 3; ++s) {
      const DirEdge &d = f.sides[s];
      auto it = boundary_image.find(d.edge);
      if (it != boundary_image.end())
        g.sides[s] = d.forward == walk_dir[d.edge] ? it->second : DirEdge{it->second.edge, !it->second.forward};
      else
        g.sides[s] = DirEdge{emap[d.edge], d.forward};
    }
    faces.push_back(g);
  }
  Grope out{DeltaComplex(nv, std::move(edges), std::move(faces)), Gr.gluings};
  out.gluings.push_back({face, k, offset});
  return out;
}

} // namespace tiling
