#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tiling/complex.hpp"
#include "tiling/error.hpp"
#include "tiling/trimat.hpp"

namespace tiling {

// a + b i + c j + d k with exact rational coefficients.
struct Quaternion {
  mpq_class a, b, c, d;

  Quaternion() : a(0), b(0), c(0), d(0) {}
  Quaternion(mpq_class a_, mpq_class b_ = 0, mpq_class c_ = 0, mpq_class d_ = 0)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  Quaternion(long x) : Quaternion(mpq_class(x)) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  Quaternion conj() const { return {a, -b, -c, -d}; }
  mpq_class norm() const { return a * a + b * b + c * c + d * d; }
  Quaternion inverse() const; // DivisionByZero

  bool operator==(const Quaternion &o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Quaternion &o) const { return !(*this == o); }
};

Quaternion operator+(const Quaternion &x, const Quaternion &y);
Quaternion operator-(const Quaternion &x, const Quaternion &y);
Quaternion operator-(const Quaternion &x);
Quaternion operator*(const Quaternion &x, const Quaternion &y);

std::string to_string(const Quaternion &q);
// "1+i", "-1/2j", "3-2k", or four comma-separated rationals "a,b,c,d".
Quaternion parse_quaternion(const std::string &text);
// Four strings "p/q".
std::vector<std::string> quaternion_parts(const Quaternion &q);

// Affine chart of the left plane; scalars act on the left.
struct SkewPoint {
  Quaternion x, y;
  bool operator==(const SkewPoint &o) const { return x == o.x && y == o.y; }
};
SkewPoint operator-(const SkewPoint &p, const SkewPoint &q);
SkewPoint operator+(const SkewPoint &p, const SkewPoint &q);
SkewPoint operator*(const Quaternion &k, const SkewPoint &p);

// Points (x, y) with x a + y b + c = 0.
struct SkewLine {
  Quaternion a, b, c;
};

bool on_line(const SkewPoint &P, const SkewLine &L);
SkewLine skew_join(const SkewPoint &P, const SkewPoint &Q); // CoincidentPoints
bool skew_collinear(const SkewPoint &A, const SkewPoint &B, const SkewPoint &C);

// k with Y - X = k (Z - X).
Quaternion left_bracket(const SkewPoint &Y, const SkewPoint &Z, const SkewPoint &X);

struct MenelausResult {
  Quaternion product; // [AD/BD] [BE/CE] [CF/AF]
  bool product_is_one;
  bool collinear; // D, E, F checked directly
  bool agrees() const { return product_is_one == collinear; }
};
MenelausResult menelaus_check(const SkewPoint &A, const SkewPoint &B, const SkewPoint &C, const SkewPoint &D,
                              const SkewPoint &E, const SkewPoint &F);

// Simplicial disc; boundary lists the boundary vertices in the direction in
// which the faces traverse the boundary edges.
struct TriangulatedDisc {
  DeltaComplex complex;
  std::vector<int> boundary;
};

void check_disc(const TriangulatedDisc &D); // NotADisc
std::vector<int> free_faces(const TriangulatedDisc &D);
std::vector<int> shell(const TriangulatedDisc &D);
TriangulatedDisc disc_from_triangles(int vertices, const std::vector<std::array<int, 3>> &tris);
// Grows a disc by boundary cones and stellar subdivisions.
TriangulatedDisc random_disc(int faces, std::mt19937_64 &rng);

// Values on edges traversed tail -> head; the reverse direction is the inverse.
using QuaternionCochain = std::map<int, Quaternion>;

struct BoundaryValue {
  Quaternion shelled; // via the shelling recursion
  Quaternion direct;  // product along the boundary cycle
};
BoundaryValue evaluate_boundary(const TriangulatedDisc &D, const QuaternionCochain &U); // FlatnessViolated

// U(ab) = g(a) g(b)^-1 for random nonzero g.
QuaternionCochain random_flat_cochain(const DeltaComplex &K, std::mt19937_64 &rng);
Quaternion random_quaternion(std::mt19937_64 &rng, int range = 5);

struct SkewConfiguration {
  std::vector<SkewPoint> points;
  std::vector<SkewLine> lines;
};

struct PappusCounterexample {
  SkewConfiguration config;     // 12 points (P10, P11, P12 are the triangle), 9 lines
  QuaternionCochain edge_values; // on the Pappus torus tiling
  Quaternion defect;             // face product on the marked face
  Quaternion conclusion_product; // Menelaus product on the marked face
};

// Checks +1 cells as incidences and -1 cells as non-incidences.
bool satisfies(const IncidenceMatrix &M, const SkewConfiguration &C);

PappusCounterexample pappus_counterexample(const Quaternion &u, const Quaternion &v); // Commuting

struct SoundnessReport {
  int trials = 0;
  int passed = 0;
  int rejected = 0; // degenerate samples drawn again
  bool ok() const { return passed == trials; }
};
SoundnessReport desargues_soundness_sample(int trials, uint64_t seed);

} // namespace tiling
