#pragma once

#include <vector>

#include "tiling/complex.hpp"
#include "tiling/excise.hpp"

namespace tiling {

// A compact orientable surface with one boundary cycle. boundary[i] ->
// boundary[i+1] must be traversed in this direction by the unique face on
// that boundary edge.
struct BoundedSurface {
  DeltaComplex complex;
  std::vector<int> boundary;
};

// Fan triangulation of an n-gon: boundary vertices 0..n-1, centre n, faces
// (i, i+1, centre).
BoundedSurface fan_disc(int sides);

struct Gluing {
  int face; // 0-based face of the complex before gluing
  int k;
  int offset;
};

struct Grope {
  DeltaComplex complex;
  std::vector<Gluing> gluings;
  int complexity() const { return static_cast<int>(gluings.size()); }
};

Grope grope_base(const DeltaComplex &S);

// Removes `face` and glues S along the covering boundary[i] -> vertex
// (i + offset) mod 3 of the face walk. The remaining faces keep their order;
// the faces of S are appended in their own order.
Grope grope_glue(const Grope &Gr, int face, const BoundedSurface &S, int k, const GroupSpec &G, int offset = 0);

} // namespace tiling
