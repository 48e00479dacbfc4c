#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiling/error.hpp"

namespace tiling {

class DeltaComplex;

// Abelian model of a multiplicative group: whether it has elements of
// infinite order, and its torsion as a product of cyclic groups or "all
// roots of unity".
struct GroupSpec {
  bool infinite = false;
  bool full_torsion = false;
  std::vector<long> torsion; // cyclic orders, ignored when full_torsion

  static GroupSpec reals() { return {true, false, {2}}; }
  static GroupSpec complexes() { return {true, true, {}}; }
  static GroupSpec finite_field(int q) { return {false, false, {static_cast<long>(q) - 1}}; }
  static GroupSpec rational_functions(int q) { return {true, false, {static_cast<long>(q) - 1}}; }
  static GroupSpec cyclic(long n) { return {false, false, {n}}; }

  // Accepts "R*", "C*", "F5*", "F5(X)*", "Z/6" or a raw JSON spec.
  static GroupSpec parse(const std::string &text);
  std::string describe() const;
  bool operator==(const GroupSpec &) const = default;
};

using BigMatrix = std::vector<std::vector<mpz_class>>;

struct SmithForm {
  BigMatrix U, D, V; // U * A * V = D
  std::vector<mpz_class> divisors() const; // nonzero diagonal entries
  int rank() const;
};

SmithForm smith_normal_form(const BigMatrix &A);
BigMatrix multiply(const BigMatrix &A, const BigMatrix &B);
mpz_class determinant(BigMatrix A);

// Row f = signed multiplicity of each edge in the boundary walk of face f.
BigMatrix boundary_matrix(const DeltaComplex &K);

bool can_excise(const DeltaComplex &K, int face, const GroupSpec &G);

// Additive Z/n values per edge (0-based edge id -> residue), meaning U(e) for
// the edge traversed tail -> head.
using Cochain = std::map<int, long>;

bool oracle_can_excise(const DeltaComplex &K, int face, long n);
std::optional<Cochain> failing_cochain(const DeltaComplex &K, int face, long n);

// Sum over the face walk of the signed cochain values, mod n.
long face_defect(const DeltaComplex &K, int face, const Cochain &U, long n);

bool torsion_coprime(long k, const GroupSpec &G);

} // namespace tiling
