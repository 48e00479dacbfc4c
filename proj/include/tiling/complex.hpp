#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tiling/excise.hpp"
#include "tiling/trimat.hpp"

namespace tiling {

struct Edge {
  int tail, head; // 0-based vertices
};

struct DirEdge {
  int edge;     // 0-based
  bool forward; // traversed tail -> head
  int from(const std::vector<Edge> &E) const { return forward ? E[edge].tail : E[edge].head; }
  int to(const std::vector<Edge> &E) const { return forward ? E[edge].head : E[edge].tail; }
};

struct Face {
  std::array<DirEdge, 3> sides;
};

// Faces are closed walks of three directed edges, so several edges may join
// the same two vertices and an edge may occur twice in one face.
class DeltaComplex {
public:
  DeltaComplex() = default;
  DeltaComplex(int vertices, std::vector<Edge> edges, std::vector<Face> faces, bool simplicial = false);

  // Faces given as vertex triples; edges are created per unordered pair.
  static DeltaComplex from_triangles(int vertices, const std::vector<std::array<int, 3>> &tris);

  int vertex_count() const { return nv_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<Face> &faces() const { return faces_; }
  bool simplicial() const { return simplicial_; }

  std::array<int, 3> face_vertices(int f) const;
  int euler_characteristic() const { return nv_ - edge_count() + face_count(); }
  // Number of face sides that use edge e (with multiplicity).
  std::vector<int> edge_degrees() const;
  // True when endpoints differ, vertex pairs and vertex triples are unique.
  bool is_simplicial() const;

private:
  int nv_ = 0;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  bool simplicial_ = false;
};

// p on vertices and edges (point indices, 1-based); l on faces and edges
// (line indices, 1-based).
struct Labeling {
  std::vector<int> p_vertex, p_edge;
  std::vector<int> l_face, l_edge;
};

struct MarkedComplex {
  DeltaComplex complex;
  Labeling labels;
  int marked = 0; // 0-based face
};

// Genus 0: two triangles glued along their boundary. Genus g >= 1: the
// 4g-gon a1 b1 a1^-1 b1^-1 ... coned from a centre (one corner vertex).
DeltaComplex polygon_surface(int genus);
// polygon_surface(genus) grown by random stellar and edge subdivisions until
// it has at least `faces` faces.
DeltaComplex random_surface(int genus, int faces, std::mt19937_64 &rng);

// +1 / -1 per face; a face with sign -1 is walked backwards.
std::optional<std::vector<int>> is_closed_orientable_surface(const DeltaComplex &K);

struct Violation {
  std::string property; // "0", "+1", "-1", "*", "shape"
  std::string detail;
  int point = 0, line = 0; // 1-based cell, 0 when not applicable
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool excisable = false;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_elementary_proof(const MarkedComplex &MC, const IncidenceMatrix &M, const GroupSpec &G);

// Applies contradiction_form(M, i, j) and swaps the labels 1<->i and 1<->j
// before validating.
ValidationReport validate_with_target(const MarkedComplex &MC, const IncidenceMatrix &M, const GroupSpec &G,
                                      int i, int j);

bool labeling_bijective(const MarkedComplex &MC);
IncidenceMatrix generate_theorem(const MarkedComplex &MC);

MarkedComplex octahedral_subdivide(const MarkedComplex &MC);

// Tetrahedron with the Desargues labeling (marked face = the one whose
// conclusion is P1 in L1).
MarkedComplex desargues_tetrahedron();

} // namespace tiling
