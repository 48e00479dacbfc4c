#include "tiling/excise.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "tiling/complex.hpp"

namespace tiling {

GroupSpec GroupSpec::parse(const std::string &raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s += ch;
  if (s == "R*" || s == "R")
    return reals();
  if (s == "C*" || s == "C")
    return complexes();
  if (s.rfind("Z/", 0) == 0)
    return cyclic(std::stol(s.substr(2)));
  if (!s.empty() && s[0] == 'F' && s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1]))) {
    size_t pos = 1;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    int q = std::stoi(s.substr(1, pos - 1));
    std::string rest = s.substr(pos);
    if (q < 2)
      throw Error("BadGroup", "field order must be at least 2");
    if (rest == "*" || rest.empty())
      return finite_field(q);
    if (rest == "(X)*" || rest == "(X)")
      return rational_functions(q);
  }
  if (!s.empty() && s[0] == '{') {
    auto j = nlohmann::json::parse(s);
    GroupSpec g;
    g.infinite = j.at("infinite").get<bool>();
    const auto &t = j.at("torsion");
    if (t.is_string()) {
      if (t.get<std::string>() != "full")
        throw Error("BadGroup", "torsion must be a list or \"full\"");
      g.full_torsion = true;
    } else {
      g.torsion = t.get<std::vector<long>>();
      for (long m : g.torsion)
        if (m < 1)
          throw Error("BadGroup", "cyclic orders must be positive");
    }
    return g;
  }
  throw Error("BadGroup", "unrecognized group '" + raw + "'");
}

std::string GroupSpec::describe() const {
  std::ostringstream os;
  os << "{\"infinite\": " << (infinite ? "true" : "false") << ", \"torsion\": ";
  if (full_torsion) {
    os << "\"full\"";
  } else {
    os << "[";
    for (size_t i = 0; i < torsion.size(); ++i)
      os << (i ? ", " : "") << torsion[i];
    os << "]";
  }
  os << "}";
  return os.str();
}

namespace {

BigMatrix identity(size_t n) {
  BigMatrix I(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i)
    I[i][i] = 1;
  return I;
}

void swap_rows(BigMatrix &A, size_t a, size_t b) { std::swap(A[a], A[b]); }
void swap_cols(BigMatrix &A, size_t a, size_t b) {
  for (auto &row : A)
    std::swap(row[a], row[b]);
}
// row a += k * row b
void add_row(BigMatrix &A, size_t a, size_t b, const mpz_class &k) {
  auto &dst = A[a];
  const auto &src = A[b];
  for (size_t c = 0; c < dst.size(); ++c)
    if (src[c] != 0)
      mpz_addmul(dst[c].get_mpz_t(), src[c].get_mpz_t(), k.get_mpz_t());
}
void add_col(BigMatrix &A, size_t a, size_t b, const mpz_class &k) {
  for (auto &row : A)
    if (row[b] != 0)
      mpz_addmul(row[a].get_mpz_t(), row[b].get_mpz_t(), k.get_mpz_t());
}

bool is_unit(const mpz_class &x) { return mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0; }

// U is only maintained when track_u is set; can_excise needs D and V.
SmithForm smith_impl(const BigMatrix &A, bool track_u) {
  const size_t r = A.size(), c = r ? A[0].size() : 0;
  SmithForm S{track_u ? identity(r) : BigMatrix{}, A, identity(c)};
  BigMatrix &D = S.D;
  for (size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // pivot of least absolute value in the trailing block; a unit ends the scan
      size_t pi = r, pj = c;
      for (size_t i = t; i < r && !(pi < r && is_unit(D[pi][pj])); ++i)
        for (size_t j = t; j < c; ++j)
          if (D[i][j] != 0 && (pi == r || mpz_cmpabs(D[i][j].get_mpz_t(), D[pi][pj].get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
            if (is_unit(D[i][j]))
              break;
          }
      if (pi == r)
        return S;
      if (pi != t) {
        swap_rows(D, t, pi);
        if (track_u)
          swap_rows(S.U, t, pi);
      }
      if (pj != t) {
        swap_cols(D, t, pj);
        swap_cols(S.V, t, pj);
      }
      bool dirty = false;
      mpz_class q;
      for (size_t i = t + 1; i < r; ++i) {
        if (D[i][t] == 0)
          continue;
        mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
        q = -q;
        add_row(D, i, t, q);
        if (track_u)
          add_row(S.U, i, t, q);
        dirty |= D[i][t] != 0;
      }
      for (size_t j = t + 1; j < c; ++j) {
        if (D[t][j] == 0)
          continue;
        mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
        q = -q;
        add_col(D, j, t, q);
        add_col(S.V, j, t, q);
        dirty |= D[t][j] != 0;
      }
      if (dirty)
        continue;
      if (is_unit(D[t][t]))
        break;
      // enforce d_t | every later entry
      size_t bad_row = r;
      for (size_t i = t + 1; i < r && bad_row == r; ++i)
        for (size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == r)
        break;
      add_row(D, t, bad_row, 1);
      if (track_u)
        add_row(S.U, t, bad_row, 1);
    }
    if (D[t][t] < 0) {
      for (auto &x : D[t])
        x = -x;
      if (track_u)
        for (auto &x : S.U[t])
          x = -x;
    }
  }
  return S;
}

} // namespace

SmithForm smith_normal_form(const BigMatrix &A) { return smith_impl(A, true); }

std::vector<mpz_class> SmithForm::divisors() const {
  std::vector<mpz_class> out;
  for (size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i)
    if (D[i][i] != 0)
      out.push_back(D[i][i]);
  return out;
}

int SmithForm::rank() const { return static_cast<int>(divisors().size()); }

BigMatrix multiply(const BigMatrix &A, const BigMatrix &B) {
  const size_t n = A.size(), k = B.size(), m = k ? B[0].size() : 0;
  BigMatrix C(n, std::vector<mpz_class>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (A[i][l] == 0)
        continue;
      for (size_t j = 0; j < m; ++j)
        C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

// Bareiss fraction-free elimination.
mpz_class determinant(BigMatrix A) {
  const size_t n = A.size();
  if (n == 0)
    return 1;
  mpz_class sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && A[s][k] == 0)
        ++s;
      if (s == n)
        return 0;
      std::swap(A[k], A[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        A[i][j] = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

BigMatrix boundary_matrix(const DeltaComplex &K) {
  BigMatrix B(K.face_count(), std::vector<mpz_class>(K.edge_count(), 0));
  for (int f = 0; f < K.face_count(); ++f)
    for (const DirEdge &s : K.faces()[f].sides)
      B[f][s.edge] += s.forward ? 1 : -1;
  return B;
}

namespace {

void check_face(const DeltaComplex &K, int face) {
  if (face < 0 || face >= K.face_count())
    throw Error("FaceNotFound", "face " + std::to_string(face + 1) + " does not exist");
}

mpz_class gcd_mpz(const mpz_class &a, const mpz_class &b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool divides(const mpz_class &d, const mpz_class &x) { return x % d == 0; }

} // namespace

namespace {

struct Overflow {};

// dst += k * src
void add_mul(long &dst, long src, long k) {
  long p;
  if (__builtin_mul_overflow(src, k, &p) || __builtin_add_overflow(dst, p, &dst))
    throw Overflow{};
}
void add_mul(mpz_class &dst, const mpz_class &src, const mpz_class &k) {
  mpz_addmul(dst.get_mpz_t(), src.get_mpz_t(), k.get_mpz_t());
}
long floor_div(long a, long b) {
  if (a == LONG_MIN)
    throw Overflow{};
  long q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
mpz_class floor_div(const mpz_class &a, const mpz_class &b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
bool less_abs(long a, long b) { return (a < 0 ? -a : a) < (b < 0 ? -b : b); }
bool less_abs(const mpz_class &a, const mpz_class &b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
bool unit(long a) { return a == 1 || a == -1; }
bool unit(const mpz_class &a) { return is_unit(a); }

// Reduces D to a diagonal by unimodular row and column operations, applying
// the column operations to `tracked` as well. No divisibility chain: the
// excision test reads each diagonal entry on its own.
template <class T> void diagonalize(std::vector<std::vector<T>> &D, std::vector<T> &tracked) {
  const size_t r = D.size(), c = r ? D[0].size() : 0;
  for (size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      size_t pi = r, pj = c;
      for (size_t i = t; i < r && !(pi < r && unit(D[pi][pj])); ++i)
        for (size_t j = t; j < c; ++j)
          if (D[i][j] != 0 && (pi == r || less_abs(D[i][j], D[pi][pj]))) {
            pi = i;
            pj = j;
            if (unit(D[i][j]))
              break;
          }
      if (pi == r)
        return;
      std::swap(D[t], D[pi]);
      if (pj != t) {
        for (auto &row : D)
          std::swap(row[t], row[pj]);
        std::swap(tracked[t], tracked[pj]);
      }
      bool dirty = false;
      for (size_t i = t + 1; i < r; ++i) {
        if (D[i][t] == 0)
          continue;
        T q = -floor_div(D[i][t], D[t][t]);
        for (size_t j = t; j < c; ++j)
          if (D[t][j] != 0)
            add_mul(D[i][j], D[t][j], q);
        dirty |= D[i][t] != 0;
      }
      for (size_t j = t + 1; j < c; ++j) {
        if (D[t][j] == 0)
          continue;
        T q = -floor_div(D[t][j], D[t][t]);
        for (size_t i = t; i < r; ++i)
          if (D[i][t] != 0)
            add_mul(D[i][j], D[i][t], q);
        if (tracked[t] != 0)
          add_mul(tracked[j], tracked[t], q);
        dirty |= D[t][j] != 0;
      }
      if (!dirty)
        break;
    }
  }
}

// Every cochain with zero defect off the face has zero defect on it iff
// each coordinate x of the face row, against diagonal entry d, kills the
// d-torsion of G (all of G when d = 0).
template <class T> bool excisable_from_diagonal(const std::vector<std::vector<T>> &D, const std::vector<T> &coord,
                                                const GroupSpec &G) {
  mpz_class exponent = 1;
  for (long m : G.torsion)
    mpz_lcm(exponent.get_mpz_t(), exponent.get_mpz_t(), mpz_class(m).get_mpz_t());
  const size_t E = coord.size(), diag = std::min(D.size(), E);
  for (size_t j = 0; j < E; ++j) {
    mpz_class x(coord[j]);
    mpz_class d = j < diag ? mpz_class(D[j][j]) : mpz_class(0);
    if (d == 0) {
      if (G.infinite || G.full_torsion) {
        if (x != 0)
          return false;
      } else if (!divides(exponent, x)) {
        return false;
      }
    } else if (!is_unit(d)) {
      if (G.full_torsion) {
        if (!divides(abs(d), x))
          return false;
      } else {
        for (long m : G.torsion)
          if (!divides(gcd_mpz(d, m), x))
            return false;
      }
    }
  }
  return true;
}

template <class T> bool can_excise_with(const DeltaComplex &K, int face, const GroupSpec &G) {
  const size_t E = static_cast<size_t>(K.edge_count());
  std::vector<std::vector<T>> D;
  std::vector<T> b0(E, T(0));
  for (int f = 0; f < K.face_count(); ++f) {
    std::vector<T> row(E, T(0));
    for (const DirEdge &s : K.faces()[f].sides)
      row[s.edge] += s.forward ? 1 : -1;
    if (f == face)
      b0 = std::move(row);
    else
      D.push_back(std::move(row));
  }
  diagonalize(D, b0);
  return excisable_from_diagonal(D, b0, G);
}

} // namespace

bool can_excise(const DeltaComplex &K, int face, const GroupSpec &G) {
  check_face(K, face);
  if (K.edge_count() == 0)
    return true;
  try {
    return can_excise_with<long>(K, face, G);
  } catch (const Overflow &) {
    return can_excise_with<mpz_class>(K, face, G);
  }
}

long face_defect(const DeltaComplex &K, int face, const Cochain &U, long n) {
  long s = 0;
  for (const DirEdge &d : K.faces()[face].sides) {
    auto it = U.find(d.edge);
    long v = it == U.end() ? 0 : it->second;
    s += d.forward ? v : -v;
  }
  return ((s % n) + n) % n;
}

namespace {

// Depth-first search over Z/n values of the edges outside a spanning forest
// (those are gauge-fixed to 0), rejecting a branch as soon as a completed
// non-target face is not flat.
class CochainSearch {
public:
  CochainSearch(const DeltaComplex &K, int face, long n) : K_(K), face_(face), n_(n) {
    if (n < 1 || n > 12)
      throw Error("TooLarge", "modulus must lie in 1..12");
    if (K.edge_count() > 30)
      throw Error("TooLarge", "more than 30 edges");
    const int E = K.edge_count(), V = K.vertex_count();
    std::vector<int> comp(V);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[x] != x)
        x = comp[x] = comp[comp[x]];
      return x;
    };
    std::vector<bool> tree(E, false);
    for (int e = 0; e < E; ++e) {
      int a = find(K.edges()[e].tail), b = find(K.edges()[e].head);
      if (a != b) {
        comp[a] = b;
        tree[e] = true;
      }
    }
    std::vector<bool> placed(E, false);
    for (int e = 0; e < E; ++e)
      placed[e] = tree[e];
    auto face_done = [&](int f, int extra) {
      for (const DirEdge &d : K.faces()[f].sides)
        if (!placed[d.edge] && d.edge != extra)
          return false;
      return true;
    };
    // greedy: prefer the edge that completes the most faces
    for (;;) {
      int best = -1, best_score = -1;
      for (int e = 0; e < E; ++e) {
        if (placed[e])
          continue;
        int score = 0;
        for (int f = 0; f < K.face_count(); ++f) {
          bool uses = false;
          for (const DirEdge &d : K.faces()[f].sides)
            uses |= d.edge == e;
          if (uses && face_done(f, e))
            score += 1000;
          else if (uses)
            score += 1;
        }
        if (score > best_score) {
          best = e;
          best_score = score;
        }
      }
      if (best < 0)
        break;
      order_.push_back(best);
      placed[best] = true;
    }
    completes_.assign(order_.size() + 1, {});
    std::vector<int> pos(E, -1);
    for (size_t t = 0; t < order_.size(); ++t)
      pos[order_[t]] = static_cast<int>(t);
    for (int f = 0; f < K.face_count(); ++f) {
      if (f == face_)
        continue;
      int last = -1;
      for (const DirEdge &d : K.faces()[f].sides)
        last = std::max(last, pos[d.edge]);
      completes_[last + 1].push_back(f); // slot 0 = faces made only of tree edges
    }
  }

  std::optional<Cochain> find_failing() {
    for (int f : completes_[0])
      if (face_defect(K_, f, U_, n_) != 0)
        return std::nullopt;
    if (dfs(0))
      return U_;
    return std::nullopt;
  }

private:
  bool dfs(size_t t) {
    if (++nodes_ > 50'000'000)
      throw Error("TooLarge", "cochain enumeration exceeded its node budget");
    if (t == order_.size())
      return face_defect(K_, face_, U_, n_) != 0;
    int e = order_[t];
    for (long v = 0; v < n_; ++v) {
      U_[e] = v;
      bool ok = true;
      for (int f : completes_[t + 1])
        if (face_defect(K_, f, U_, n_) != 0) {
          ok = false;
          break;
        }
      if (ok && dfs(t + 1))
        return true;
    }
    U_.erase(e);
    return false;
  }

  const DeltaComplex &K_;
  int face_;
  long n_;
  std::vector<int> order_;
  std::vector<std::vector<int>> completes_;
  Cochain U_;
  uint64_t nodes_ = 0;
};

} // namespace

std::optional<Cochain> failing_cochain(const DeltaComplex &K, int face, long n) {
  check_face(K, face);
  CochainSearch search(K, face, n);
  auto U = search.find_failing();
  if (U)
    for (int e = 0; e < K.edge_count(); ++e)
      U->emplace(e, 0);
  return U;
}

bool oracle_can_excise(const DeltaComplex &K, int face, long n) { return !failing_cochain(K, face, n).has_value(); }

bool torsion_coprime(long k, const GroupSpec &G) {
  if (k < 2)
    throw Error("BadDegree", "k must be at least 2");
  if (G.full_torsion)
    return false;
  for (long m : G.torsion)
    if (std::gcd(k, m) != 1)
      return false;
  return true;
}

} // namespace tiling
