#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tiling/error.hpp"

namespace tiling {

// Ordered MinusOne < Zero < PlusOne; the underlying value is the JSON literal.
enum class Tri : int8_t { MinusOne = -1, Zero = 0, PlusOne = 1 };

Tri tri_from_int(int v);
inline int to_int(Tri t) { return static_cast<int>(t); }
inline Tri negate(Tri t) { return static_cast<Tri>(-static_cast<int>(t)); }

// Rows are points, columns are lines. at() is 1-based to match the usual
// P1..Pm / L1..Ln naming; cell() is 0-based for inner loops.
class IncidenceMatrix {
public:
  IncidenceMatrix(int rows, int cols, Tri fill = Tri::Zero);
  static IncidenceMatrix from_ints(const std::vector<std::vector<int>> &rows);

  int rows() const { return m_; }
  int cols() const { return n_; }

  Tri cell(int r, int c) const { return data_[static_cast<size_t>(r) * n_ + c]; }
  Tri at(int i, int j) const;
  IncidenceMatrix with(int i, int j, Tri v) const;

  std::vector<std::vector<int>> to_ints() const;
  int count(Tri v) const;
  IncidenceMatrix transposed() const;

  bool operator==(const IncidenceMatrix &o) const = default;

  // Mutable access for builders inside the library.
  void set_cell(int r, int c, Tri v) { data_[static_cast<size_t>(r) * n_ + c] = v; }

private:
  int m_, n_;
  std::vector<Tri> data_;
};

std::string to_string(const IncidenceMatrix &M);

// 1-based; rows = (r1, r2, r3) and cols = (c1, c2, c3) in the order of the
// forbidden pattern
//   [-1  1  *]
//   [ 1  1  1]
//   [ 1  1 -1]
struct PatternWitness {
  int rows[3];
  int cols[3];
  bool operator==(const PatternWitness &) const = default;
};

std::optional<PatternWitness> contradicts_incidence_axiom(const IncidenceMatrix &M);

// Only patterns that use the cell (i, j) (1-based).
std::optional<PatternWitness> pattern_through(const IncidenceMatrix &M, int i, int j);

bool is_tautology(const IncidenceMatrix &M);

struct Seed {
  int row, col; // 1-based
  Tri value;
};

// nullopt = sweep until nothing changes.
IncidenceMatrix propagate(const IncidenceMatrix &M, const std::vector<Seed> &seeds,
                          std::optional<int> max_sweeps = std::nullopt);

struct PointOnTwoLines { int c1, c2; };
struct LineThroughTwoPoints { int r1, r2; };
struct GenericPoint {};
struct GenericLine {};
using AuxKind = std::variant<PointOnTwoLines, LineThroughTwoPoints, GenericPoint, GenericLine>;

IncidenceMatrix aux_join(const IncidenceMatrix &M, const AuxKind &kind);

IncidenceMatrix contradiction_form(const IncidenceMatrix &M, int i, int j);

// Lazily enumerates all +-1 completions of the zero cells; the first zero in
// row-major order is the most significant position and -1 precedes +1.
class CaseSplit {
public:
  static constexpr int kDefaultCap = 20;
  explicit CaseSplit(IncidenceMatrix M, int cap = kDefaultCap);

  std::optional<IncidenceMatrix> next();
  uint64_t total() const { return uint64_t{1} << zeros_.size(); }
  const std::vector<std::pair<int, int>> &zero_cells() const { return zeros_; }

private:
  IncidenceMatrix base_;
  std::vector<std::pair<int, int>> zeros_; // 0-based
  uint64_t counter_ = 0;
};

} // namespace tiling
