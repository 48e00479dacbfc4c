#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tiling/error.hpp"

namespace tiling {

using Elem = uint8_t;

// GF(q) for q in {2,3,4,5,7,8,9}. Element k of GF(p^e) is the polynomial
// whose base-p digits of k are the coefficients (lowest degree first), reduced
// modulo x^2+x+1 (q=4), x^3+x+1 (q=8) or x^2+1 (q=9).
class GaloisField {
public:
  explicit GaloisField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }

  Elem add(Elem a, Elem b) const { return add_[a][b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a][b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[a][neg_[b]]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned e) const;

  static bool supported(int q);

private:
  void check_axioms() const;

  int q_, p_;
  std::array<std::array<Elem, 9>, 9> add_{}, mul_{};
  std::array<Elem, 9> neg_{}, inv_{};
};

using Coords = std::array<Elem, 3>;

// Homogeneous triples normalized so the first nonzero coordinate is 1.
struct ProjPoint {
  Coords c;
  auto operator<=>(const ProjPoint &) const = default;
};
struct ProjLine {
  Coords c;
  auto operator<=>(const ProjLine &) const = default;
};

Coords normalize(const GaloisField &F, Coords v);
Coords cross(const GaloisField &F, const Coords &a, const Coords &b);
Elem dot(const GaloisField &F, const Coords &a, const Coords &b);

ProjPoint make_point(const GaloisField &F, Coords v);
ProjLine make_line(const GaloisField &F, Coords v);
ProjPoint affine_point(const GaloisField &F, Elem x, Elem y);

bool incident(const GaloisField &F, const ProjPoint &P, const ProjLine &L);
std::optional<ProjLine> join(const GaloisField &F, const ProjPoint &a, const ProjPoint &b);
std::optional<ProjPoint> meet(const GaloisField &F, const ProjLine &a, const ProjLine &b);
bool collinear(const GaloisField &F, const ProjPoint &a, const ProjPoint &b, const ProjPoint &c);

// All normalized triples in lexicographic order; points and lines share it.
std::vector<Coords> projective_triples(const GaloisField &F);

// nullopt stands for the point at infinity of the ratio.
using Ratio = std::optional<Elem>;

// k with A - X = k (B - X) in the affine chart whose line at infinity is
// `chart`.
Ratio menelaus_ratio(const GaloisField &F, const ProjPoint &A, const ProjPoint &B, const ProjPoint &X,
                     const ProjLine &chart);

inline ProjLine default_chart() { return ProjLine{{0, 0, 1}}; }

struct Configuration {
  int q;
  std::vector<ProjPoint> points;
  std::vector<ProjLine> lines;
};

} // namespace tiling
