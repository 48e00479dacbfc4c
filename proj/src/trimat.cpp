#include "tiling/trimat.hpp"

#include <sstream>

namespace tiling {

Tri tri_from_int(int v) {
  if (v < -1 || v > 1)
    throw Error("BadEntry", "matrix entry " + std::to_string(v) + " is not -1, 0 or 1");
  return static_cast<Tri>(v);
}

IncidenceMatrix::IncidenceMatrix(int rows, int cols, Tri fill) : m_(rows), n_(cols) {
  if (rows < 1 || cols < 1)
    throw Error("BadShape", "matrix needs at least one row and one column");
  data_.assign(static_cast<size_t>(rows) * cols, fill);
}

IncidenceMatrix IncidenceMatrix::from_ints(const std::vector<std::vector<int>> &rows) {
  if (rows.empty() || rows[0].empty())
    throw Error("BadShape", "empty matrix");
  IncidenceMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < M.m_; ++r) {
    if (static_cast<int>(rows[r].size()) != M.n_)
      throw Error("BadShape", "ragged row " + std::to_string(r + 1));
    for (int c = 0; c < M.n_; ++c)
      M.set_cell(r, c, tri_from_int(rows[r][c]));
  }
  return M;
}

Tri IncidenceMatrix::at(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_)
    throw Error("IndexOutOfRange", "cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return cell(i - 1, j - 1);
}

IncidenceMatrix IncidenceMatrix::with(int i, int j, Tri v) const {
  at(i, j);
  IncidenceMatrix out = *this;
  out.set_cell(i - 1, j - 1, v);
  return out;
}

std::vector<std::vector<int>> IncidenceMatrix::to_ints() const {
  std::vector<std::vector<int>> out(m_, std::vector<int>(n_));
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c < n_; ++c)
      out[r][c] = to_int(cell(r, c));
  return out;
}

int IncidenceMatrix::count(Tri v) const {
  int k = 0;
  for (Tri t : data_)
    k += (t == v);
  return k;
}

IncidenceMatrix IncidenceMatrix::transposed() const {
  IncidenceMatrix T(n_, m_);
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c < n_; ++c)
      T.set_cell(c, r, cell(r, c));
  return T;
}

std::string to_string(const IncidenceMatrix &M) {
  std::ostringstream os;
  for (int r = 0; r < M.rows(); ++r) {
    for (int c = 0; c < M.cols(); ++c)
      os << (c ? " " : "") << (M.cell(r, c) == Tri::MinusOne ? "-1" : M.cell(r, c) == Tri::Zero ? " 0" : " 1");
    os << '\n';
  }
  return os.str();
}

namespace {

// Columns a, b are the two lines through the distinct points r2, r3 (told
// apart by column c); r1 lies on b but not on a, so a != b can't both hold.
template <class Accept>
std::optional<PatternWitness> find_pattern(const IncidenceMatrix &M, Accept accept) {
  const int m = M.rows(), n = M.cols();
  std::vector<int> on_both, split;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b)
        continue;
      on_both.clear();
      split.clear();
      for (int r = 0; r < m; ++r) {
        Tri ta = M.cell(r, a), tb = M.cell(r, b);
        if (tb != Tri::PlusOne)
          continue;
        if (ta == Tri::PlusOne)
          on_both.push_back(r);
        else if (ta == Tri::MinusOne)
          split.push_back(r);
      }
      if (split.empty() || on_both.size() < 2)
        continue;
      for (int r1 : split)
        for (int r2 : on_both)
          for (int r3 : on_both) {
            if (r2 == r3)
              continue;
            for (int c = 0; c < n; ++c) {
              if (c == a || c == b || M.cell(r2, c) != Tri::PlusOne || M.cell(r3, c) != Tri::MinusOne)
                continue;
              PatternWitness w{{r1 + 1, r2 + 1, r3 + 1}, {a + 1, b + 1, c + 1}};
              if (accept(w))
                return w;
            }
          }
    }
  }
  return std::nullopt;
}

bool uses_cell(const PatternWitness &w, int i, int j) {
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 2)
        continue; // the free slot
      if (w.rows[x] == i && w.cols[y] == j)
        return true;
    }
  return false;
}

} // namespace

std::optional<PatternWitness> contradicts_incidence_axiom(const IncidenceMatrix &M) {
  return find_pattern(M, [](const PatternWitness &) { return true; });
}

std::optional<PatternWitness> pattern_through(const IncidenceMatrix &M, int i, int j) {
  return find_pattern(M, [&](const PatternWitness &w) { return uses_cell(w, i, j); });
}

bool is_tautology(const IncidenceMatrix &M) { return M.cell(0, 0) == Tri::PlusOne; }

IncidenceMatrix propagate(const IncidenceMatrix &M, const std::vector<Seed> &seeds,
                          std::optional<int> max_sweeps) {
  IncidenceMatrix X = M;
  for (const Seed &s : seeds) {
    if (s.value == Tri::Zero)
      throw Error("BadSeed", "a seed must be -1 or +1");
    Tri cur = X.at(s.row, s.col);
    if (cur == negate(s.value))
      throw Error("SeedConflict", "cell (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                                      ") already holds the opposite sign");
    X.set_cell(s.row - 1, s.col - 1, s.value);
  }
  if (max_sweeps && *max_sweeps < 0)
    throw Error("BadSweeps", "sweep count must be nonnegative");

  // A new pattern must use the changed cell in a non-free slot, so after the
  // initial full check only the touched cell needs to be inspected.
  bool contradictory = contradicts_incidence_axiom(X).has_value();
  for (int sweep = 0; !max_sweeps || sweep < *max_sweeps; ++sweep) {
    bool changed = false;
    for (int r = 0; r < X.rows(); ++r)
      for (int c = 0; c < X.cols(); ++c) {
        if (X.cell(r, c) != Tri::Zero)
          continue;
        X.set_cell(r, c, Tri::PlusOne);
        bool fires = contradictory || pattern_through(X, r + 1, c + 1).has_value();
        if (fires) {
          X.set_cell(r, c, Tri::MinusOne);
          changed = true;
          if (!contradictory && pattern_through(X, r + 1, c + 1))
            contradictory = true;
        } else {
          X.set_cell(r, c, Tri::Zero);
        }
      }
    if (!changed)
      break;
  }
  return X;
}

IncidenceMatrix aux_join(const IncidenceMatrix &M, const AuxKind &kind) {
  const int m = M.rows(), n = M.cols();
  auto check = [](int v, int hi, const char *what) {
    if (v < 1 || v > hi)
      throw Error("IndexOutOfRange", std::string(what) + " " + std::to_string(v) + " out of 1.." +
                                         std::to_string(hi));
  };
  bool add_row = std::holds_alternative<PointOnTwoLines>(kind) || std::holds_alternative<GenericPoint>(kind);
  IncidenceMatrix out(m + (add_row ? 1 : 0), n + (add_row ? 0 : 1));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      out.set_cell(r, c, M.cell(r, c));

  if (auto *k = std::get_if<PointOnTwoLines>(&kind)) {
    check(k->c1, n, "line");
    check(k->c2, n, "line");
    out.set_cell(m, k->c1 - 1, Tri::PlusOne);
    out.set_cell(m, k->c2 - 1, Tri::PlusOne);
  } else if (auto *k = std::get_if<LineThroughTwoPoints>(&kind)) {
    check(k->r1, m, "point");
    check(k->r2, m, "point");
    out.set_cell(k->r1 - 1, n, Tri::PlusOne);
    out.set_cell(k->r2 - 1, n, Tri::PlusOne);
  } else if (std::holds_alternative<GenericPoint>(kind)) {
    for (int c = 0; c < n; ++c)
      out.set_cell(m, c, Tri::MinusOne);
  } else {
    for (int r = 0; r < m; ++r)
      out.set_cell(r, n, Tri::MinusOne);
  }
  return out;
}

IncidenceMatrix contradiction_form(const IncidenceMatrix &M, int i, int j) {
  if (M.at(i, j) != Tri::MinusOne)
    throw Error("NotNegative", "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not -1");
  IncidenceMatrix X = M.with(1, 1, Tri::MinusOne);
  IncidenceMatrix out = X;
  for (int c = 0; c < X.cols(); ++c) {
    out.set_cell(0, c, X.cell(i - 1, c));
    out.set_cell(i - 1, c, X.cell(0, c));
  }
  X = out;
  for (int r = 0; r < X.rows(); ++r) {
    out.set_cell(r, 0, X.cell(r, j - 1));
    out.set_cell(r, j - 1, X.cell(r, 0));
  }
  return out;
}

CaseSplit::CaseSplit(IncidenceMatrix M, int cap) : base_(std::move(M)) {
  for (int r = 0; r < base_.rows(); ++r)
    for (int c = 0; c < base_.cols(); ++c)
      if (base_.cell(r, c) == Tri::Zero)
        zeros_.emplace_back(r, c);
  if (static_cast<int>(zeros_.size()) > cap)
    throw Error("TooManyZeros", std::to_string(zeros_.size()) + " zero entries exceed the cap of " +
                                    std::to_string(cap));
}

std::optional<IncidenceMatrix> CaseSplit::next() {
  if (counter_ >= total())
    return std::nullopt;
  IncidenceMatrix out = base_;
  const size_t k = zeros_.size();
  for (size_t z = 0; z < k; ++z) {
    bool plus = (counter_ >> (k - 1 - z)) & 1;
    out.set_cell(zeros_[z].first, zeros_[z].second, plus ? Tri::PlusOne : Tri::MinusOne);
  }
  ++counter_;
  return out;
}

} // namespace tiling
