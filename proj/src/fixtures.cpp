#include "tiling/fixtures.hpp"

#include "tiling/json_io.hpp"

#ifndef TILING_FIXTURE_DIR
#define TILING_FIXTURE_DIR "fixtures"
#endif

namespace tiling::fixtures {

std::string path(const std::string &relative) { return std::string(TILING_FIXTURE_DIR) + "/" + relative; }

Labeling canonical_labeling(const DeltaComplex &K, int marked, int zero_edge) {
  Labeling L;
  L.p_edge.assign(K.edge_count(), 0);
  L.l_face.assign(K.face_count(), 0);
  int next = 1;
  L.p_edge.at(zero_edge) = next++;
  for (int e = 0; e < K.edge_count(); ++e)
    if (e != zero_edge)
      L.p_edge[e] = next++;
  for (int v = 0; v < K.vertex_count(); ++v)
    L.p_vertex.push_back(next++);
  next = 1;
  L.l_face.at(marked) = next++;
  for (int f = 0; f < K.face_count(); ++f)
    if (f != marked)
      L.l_face[f] = next++;
  for (int e = 0; e < K.edge_count(); ++e)
    L.l_edge.push_back(next++);
  return L;
}

IncidenceMatrix q_points(int q) {
  if (q < 2)
    throw Error("BadArgument", "q must be at least 2");
  IncidenceMatrix M(q + 1, q + 2, Tri::MinusOne);
  M.set_cell(0, 0, Tri::Zero);
  for (int r = 0; r <= q; ++r)
    M.set_cell(r, 1, Tri::PlusOne);
  for (int r = 1; r <= q; ++r)
    M.set_cell(r, r + 1, Tri::PlusOne);
  return M;
}

IncidenceMatrix warmup() {
  return IncidenceMatrix::from_ints({{0, 1, -1, 0}, {1, 1, 0, -1}, {1, 1, 1, 0}, {0, 1, 1, 1}});
}

// P1 = D, A, B, C, E, F, G = CD x AE; L1 = AC, AB, BC, CD, AE, BF, DE.
IncidenceMatrix fano() {
  enum { D, A, B, C, E, F, G };
  enum { AC, AB, BC, CD, AE, BF, DE };
  IncidenceMatrix M(7, 7);
  auto on = [&](int p, int l) { M.set_cell(p, l, Tri::PlusOne); };
  auto off = [&](int p, int l) { M.set_cell(p, l, Tri::MinusOne); };
  on(A, AC), on(C, AC), on(F, AC);
  on(A, AB), on(B, AB), on(D, AB);
  on(B, BC), on(C, BC), on(E, BC);
  on(C, CD), on(D, CD), on(G, CD);
  on(A, AE), on(E, AE), on(G, AE);
  on(B, BF), on(F, BF), on(G, BF);
  on(D, DE), on(E, DE), on(F, DE);
  off(A, BC), off(B, AC), off(C, AB); // triangle
  off(B, CD);                         // D != B
  off(B, AE), off(C, AE);             // E != B, C
  return M;
}

IncidenceMatrix incidence_axiom() { return IncidenceMatrix::from_ints({{0, 1, 0}, {1, 1, 1}, {1, 1, -1}}); }

namespace {

// Points P1..P6 = 0..5, D = 6, E = 7, C = 8, A = 9, B = 10.
// Lines P2P3, P1P3P5, P2P4P6, P1P2, P3P4, P5P6, P4P5, P6P1, DE.
IncidenceMatrix hexagon(bool aux) {
  IncidenceMatrix M(aux ? 11 : 8, aux ? 9 : 8);
  auto on = [&](int p, int l) { M.set_cell(p - 1, l - 1, Tri::PlusOne); };
  auto off = [&](int p, int l) { M.set_cell(p - 1, l - 1, Tri::MinusOne); };
  const int D = 7, E = 8;
  on(2, 1), on(3, 1), on(E, 1);
  for (int p : {1, 3, 5})
    on(p, 2), off(p, 3);
  for (int p : {2, 4, 6})
    on(p, 3), off(p, 2);
  on(1, 4), on(2, 4), on(D, 4);
  on(3, 5), on(4, 5), on(D, 5);
  on(5, 6), on(6, 6), on(D, 6);
  on(4, 7), on(5, 7), on(E, 7);
  on(6, 8), on(1, 8), on(E, 8);
  // distinctness of P1..P6 beyond the two lines
  off(1, 5), off(2, 5);
  off(1, 6), off(2, 6), off(3, 6), off(4, 6);
  if (aux) {
    const int C = 9, A = 10, B = 11;
    on(C, 2), on(C, 3);
    on(A, 2), on(A, 9);
    on(B, 3), on(B, 9);
    on(D, 9), on(E, 9);
  }
  return M;
}

Configuration with_lines(const GaloisField &F, std::vector<ProjPoint> pts,
                         const std::vector<std::pair<int, int>> &joins) {
  Configuration C;
  C.q = F.order();
  C.points = std::move(pts);
  for (auto [a, b] : joins) {
    auto L = join(F, C.points.at(a), C.points.at(b));
    if (!L)
      throw Error("DegenerateFixture", "fixture line through coincident points");
    C.lines.push_back(*L);
  }
  return C;
}

} // namespace

IncidenceMatrix hexagon6() { return hexagon(false); }
IncidenceMatrix hexagon6_aux() { return hexagon(true); }

IncidenceMatrix pappus9x9() { return matrix_from_json(read_json_file(path("pappus9x9.json"))); }

Configuration fano_plane() {
  GaloisField F(2);
  auto P = [&](Elem x, Elem y, Elem z) { return make_point(F, {x, y, z}); };
  // D, A, B, C, E, F, G
  std::vector<ProjPoint> pts{P(1, 1, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(0, 1, 1), P(1, 0, 1), P(1, 1, 1)};
  return with_lines(F, pts, {{1, 3}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {2, 5}, {0, 4}});
}

Configuration hexagon6_f3() {
  GaloisField F(3);
  auto A = [&](Elem x, Elem y) { return affine_point(F, x, y); };
  std::vector<ProjPoint> pts{A(0, 0), A(1, 0), A(0, 1), A(1, 2), A(0, 2), A(1, 1)};
  // D = P1P2 x P3P4, E = P2P3 x P4P5
  auto line = [&](int a, int b) { return *join(F, pts[a], pts[b]); };
  pts.push_back(*meet(F, line(0, 1), line(2, 3)));
  pts.push_back(*meet(F, line(1, 2), line(3, 4)));
  return with_lines(F, pts, {{1, 2}, {0, 2}, {1, 3}, {0, 1}, {2, 3}, {4, 5}, {3, 4}, {5, 0}});
}

std::vector<AuxKind> pappus_aux_steps() {
  return {PointOnTwoLines{2, 3}, PointOnTwoLines{3, 4}, PointOnTwoLines{4, 2},  PointOnTwoLines{1, 9},
          LineThroughTwoPoints{8, 13}, PointOnTwoLines{6, 10}, PointOnTwoLines{3, 10}, PointOnTwoLines{2, 10}};
}

MarkedComplex one_line_sphere() {
  // vertices P4, P5, P6; edges 45 (P2, L3), 46 (P3, L4), 56 (P1, L5)
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  std::vector<Face> faces{
      Face{{DirEdge{0, true}, DirEdge{2, true}, DirEdge{1, false}}},
      Face{{DirEdge{1, true}, DirEdge{2, false}, DirEdge{0, false}}},
  };
  MarkedComplex MC;
  MC.complex = DeltaComplex(3, edges, faces);
  MC.labels.p_vertex = {4, 5, 6};
  MC.labels.p_edge = {2, 3, 1};
  MC.labels.l_face = {1, 2};
  MC.labels.l_edge = {3, 4, 5};
  MC.marked = 0;
  return MC;
}

namespace {

// Vertices A = P10, B = P11, C = P12. Edges 1-3 run B -> C, 4-6 A -> B,
// 7-9 A -> C.
DeltaComplex pappus_shape() {
  std::vector<Edge> edges{{1, 2}, {1, 2}, {1, 2}, {0, 1}, {0, 1}, {0, 1}, {0, 2}, {0, 2}, {0, 2}};
  auto s = [](int signed_edge) { return DirEdge{std::abs(signed_edge) - 1, signed_edge > 0}; };
  auto face = [&](int a, int b, int c) { return Face{{s(a), s(b), s(c)}}; };
  std::vector<Face> faces{face(-1, -4, 9), face(-2, -5, 7), face(-3, -6, 8),
                          face(3, -9, 5),  face(2, -8, 4),  face(-1, -6, 7)};
  return DeltaComplex(3, edges, faces);
}

} // namespace

MarkedComplex pappus_torus() {
  MarkedComplex MC;
  MC.complex = pappus_shape();
  MC.labels.p_vertex = {10, 11, 12};
  MC.labels.p_edge = {1, 8, 9, 5, 6, 7, 2, 3, 4};
  MC.labels.l_face = {9, 5, 6, 8, 7, 1};
  MC.labels.l_edge = {4, 4, 4, 3, 3, 3, 2, 2, 2};
  MC.marked = 5;
  return MC;
}

MarkedComplex pappus_torus_case2() {
  MarkedComplex MC = pappus_torus();
  auto relabel = [](std::vector<int> &v, int from, int to) {
    for (int &x : v)
      if (x == from)
        x = to;
  };
  relabel(MC.labels.p_edge, 1, 13);
  relabel(MC.labels.p_edge, 9, 14);
  relabel(MC.labels.p_vertex, 11, 15);
  relabel(MC.labels.p_vertex, 12, 16);
  relabel(MC.labels.l_edge, 4, 10);
  MC.marked = 3; // the face on L8 through P14
  return MC;
}

MarkedComplex pappus_torus_bijective() {
  MarkedComplex MC;
  MC.complex = pappus_shape();
  MC.marked = 5;
  MC.labels = canonical_labeling(MC.complex, 5, 0);
  return MC;
}

Grope ninegon_grope_shape() {
  Grope G = grope_base(one_line_sphere().complex);
  return grope_glue(G, 1, fan_disc(9), 3, GroupSpec::reals());
}

MarkedComplex ninegon_grope() {
  MarkedComplex MC;
  MC.complex = ninegon_grope_shape().complex;
  MC.marked = 0;
  MC.labels = canonical_labeling(MC.complex, 0, 2);
  return MC;
}

Grope two_stage_grope_shape() { return grope_glue(ninegon_grope_shape(), 1, fan_disc(9), 3, GroupSpec::reals()); }

MarkedComplex two_stage_grope() {
  MarkedComplex MC;
  MC.complex = two_stage_grope_shape().complex;
  MC.marked = 0;
  MC.labels = canonical_labeling(MC.complex, 0, 2);
  return MC;
}

MarkedComplex non_grope() {
  // vertices A, B, C, O; points D..I = 1..6, A, B, C, O = 7..10, spoke
  // points 11..16.
  enum { A, B, C, O };
  std::vector<Edge> edges{{A, B}, {B, C}, {C, A}, {A, B}, {B, C}, {C, A}}; // D E F G H I
  const int corner[6] = {A, B, C, A, B, C};
  for (int i = 0; i < 6; ++i)
    edges.push_back({corner[i], O}); // spokes 6..11
  auto s = [](int e, bool fwd) { return DirEdge{e, fwd}; };
  std::vector<Face> faces;
  faces.push_back(Face{{s(0, true), s(1, true), s(2, true)}}); // marked: D, E, F
  faces.push_back(Face{{s(0, true), s(4, true), s(5, true)}}); // D, H, I
  faces.push_back(Face{{s(3, true), s(1, true), s(5, true)}}); // G, E, I
  faces.push_back(Face{{s(3, true), s(4, true), s(2, true)}}); // G, H, F
  for (int i = 0; i < 6; ++i) {                                // hexagon around O
    int side = i % 3;                                          // D, E, F, D, E, F
    faces.push_back(Face{{s(side, true), s(6 + (i + 1) % 6, true), s(6 + i, false)}});
  }
  MarkedComplex MC;
  MC.complex = DeltaComplex(4, edges, faces);
  MC.labels.p_edge = {1, 2, 3, 4, 5, 6, 11, 12, 13, 14, 15, 16};
  MC.labels.p_vertex = {7, 8, 9, 10};
  MC.labels.l_face = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  MC.labels.l_edge = {11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22};
  MC.marked = 0;
  return MC;
}

MarkedComplex unreal_hexagon() {
  // vertices A, B, C carry the points 10, 11, 9 of hexagon6_aux()
  enum { A, B, C };
  std::vector<Edge> edges{{A, B}, {A, B}, {B, C}, {B, C}, {B, C}, {C, A}, {C, A}, {C, A}};
  // edge points D, E, P2, P4, P6, P1, P3, P5
  auto face = [](int ab, int bc, int ca) {
    return Face{{DirEdge{ab, true}, DirEdge{bc, true}, DirEdge{ca, true}}};
  };
  std::vector<Face> faces{face(1, 2, 5), face(0, 2, 5), face(0, 3, 6), face(0, 4, 7),
                          face(1, 2, 6), face(1, 3, 7), face(1, 4, 5)};
  MarkedComplex MC;
  MC.complex = DeltaComplex(3, edges, faces);
  MC.labels.p_vertex = {10, 11, 9};
  MC.labels.p_edge = {7, 8, 2, 4, 6, 1, 3, 5};
  MC.labels.l_face = {1, 4, 5, 6, 1, 7, 8};
  MC.labels.l_edge = {9, 9, 3, 3, 3, 2, 2, 2};
  MC.marked = 0;
  return MC;
}

} // namespace tiling::fixtures
