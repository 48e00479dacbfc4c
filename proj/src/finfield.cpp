#include "tiling/finfield.hpp"

#include <string>

namespace tiling {

namespace {

struct FieldShape {
  int p, e;
  std::vector<int> modulus; // monic, lowest degree first; empty for prime q
};

FieldShape shape_of(int q) {
  switch (q) {
  case 2: return {2, 1, {}};
  case 3: return {3, 1, {}};
  case 5: return {5, 1, {}};
  case 7: return {7, 1, {}};
  case 4: return {2, 2, {1, 1, 1}};
  case 8: return {2, 3, {1, 1, 0, 1}};
  case 9: return {3, 2, {1, 0, 1}};
  default: throw Error("UnsupportedField", "q = " + std::to_string(q) + " is not one of 2,3,4,5,7,8,9");
  }
}

std::vector<int> digits(int k, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i, k /= p)
    d[i] = k % p;
  return d;
}

int undigits(const std::vector<int> &d, int p) {
  int k = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
    k = k * p + d[i];
  return k;
}

} // namespace

bool GaloisField::supported(int q) { return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9; }

GaloisField::GaloisField(int q) : q_(q) {
  FieldShape s = shape_of(q);
  p_ = s.p;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      auto da = digits(a, s.p, s.e), db = digits(b, s.p, s.e);
      std::vector<int> sum(s.e);
      for (int i = 0; i < s.e; ++i)
        sum[i] = (da[i] + db[i]) % s.p;
      add_[a][b] = static_cast<Elem>(undigits(sum, s.p));

      std::vector<int> prod(2 * s.e, 0);
      for (int i = 0; i < s.e; ++i)
        for (int j = 0; j < s.e; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % s.p;
      for (int deg = 2 * s.e - 1; deg >= s.e; --deg) {
        int c = prod[deg];
        if (!c)
          continue;
        for (int i = 0; i <= s.e; ++i)
          prod[deg - s.e + i] = ((prod[deg - s.e + i] - c * s.modulus.at(i)) % s.p + s.p) % s.p;
      }
      prod.resize(s.e);
      mul_[a][b] = static_cast<Elem>(undigits(prod, s.p));
    }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add_[a][b] == 0)
        neg_[a] = static_cast<Elem>(b);
      if (mul_[a][b] == 1)
        inv_[a] = static_cast<Elem>(b);
    }
  check_axioms();
}

void GaloisField::check_axioms() const {
  auto fail = [&](const char *what) {
    throw Error("FieldAxiom", std::string(what) + " fails for q = " + std::to_string(q_));
  };
  for (int a = 0; a < q_; ++a) {
    if (add_[a][0] != a || mul_[a][1] != a)
      fail("identity");
    if (add_[a][neg_[a]] != 0)
      fail("additive inverse");
    if (a != 0 && mul_[a][inv_[a]] != 1)
      fail("multiplicative inverse");
    for (int b = 0; b < q_; ++b) {
      if (add_[a][b] != add_[b][a] || mul_[a][b] != mul_[b][a])
        fail("commutativity");
      for (int c = 0; c < q_; ++c) {
        if (add_[add_[a][b]][c] != add_[a][add_[b][c]])
          fail("additive associativity");
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          fail("multiplicative associativity");
        if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]])
          fail("distributivity");
      }
    }
  }
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0 || a >= q_)
    throw Error("DivisionByZero", "inverse of zero");
  return inv_[a];
}

Elem GaloisField::pow(Elem a, unsigned e) const {
  Elem r = 1;
  for (unsigned i = 0; i < e; ++i)
    r = mul(r, a);
  return r;
}

Coords normalize(const GaloisField &F, Coords v) {
  for (int i = 0; i < 3; ++i)
    if (v[i] != 0) {
      Elem s = F.inv(v[i]);
      for (auto &x : v)
        x = F.mul(x, s);
      return v;
    }
  throw Error("ZeroVector", "homogeneous coordinates are all zero");
}

Coords cross(const GaloisField &F, const Coords &a, const Coords &b) {
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])), F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

Elem dot(const GaloisField &F, const Coords &a, const Coords &b) {
  return F.add(F.add(F.mul(a[0], b[0]), F.mul(a[1], b[1])), F.mul(a[2], b[2]));
}

ProjPoint make_point(const GaloisField &F, Coords v) { return ProjPoint{normalize(F, v)}; }
ProjLine make_line(const GaloisField &F, Coords v) { return ProjLine{normalize(F, v)}; }
ProjPoint affine_point(const GaloisField &F, Elem x, Elem y) { return make_point(F, {x, y, 1}); }

bool incident(const GaloisField &F, const ProjPoint &P, const ProjLine &L) { return dot(F, P.c, L.c) == 0; }

std::optional<ProjLine> join(const GaloisField &F, const ProjPoint &a, const ProjPoint &b) {
  if (a == b)
    return std::nullopt;
  return ProjLine{normalize(F, cross(F, a.c, b.c))};
}

std::optional<ProjPoint> meet(const GaloisField &F, const ProjLine &a, const ProjLine &b) {
  if (a == b)
    return std::nullopt;
  return ProjPoint{normalize(F, cross(F, a.c, b.c))};
}

bool collinear(const GaloisField &F, const ProjPoint &a, const ProjPoint &b, const ProjPoint &c) {
  return dot(F, cross(F, a.c, b.c), c.c) == 0;
}

std::vector<Coords> projective_triples(const GaloisField &F) {
  std::vector<Coords> out;
  const int q = F.order();
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        Coords v{static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)};
        if ((x | y | z) == 0)
          continue;
        if (normalize(F, v) == v)
          out.push_back(v);
      }
  return out;
}

Ratio menelaus_ratio(const GaloisField &F, const ProjPoint &A, const ProjPoint &B, const ProjPoint &X,
                     const ProjLine &chart) {
  if (!collinear(F, A, B, X))
    throw Error("NotCollinear", "A, B, X are not collinear");
  Elem la = dot(F, A.c, chart.c), lb = dot(F, B.c, chart.c), lx = dot(F, X.c, chart.c);
  if (la == 0 || lb == 0)
    throw Error("DegenerateChart", "A or B lies on the chart line");
  if (lx == 0)
    return std::nullopt;
  Coords a, b;
  for (int i = 0; i < 3; ++i) {
    Elem x = F.div(X.c[i], lx);
    a[i] = F.sub(F.div(A.c[i], la), x);
    b[i] = F.sub(F.div(B.c[i], lb), x);
  }
  int t = -1;
  for (int i = 0; i < 3; ++i)
    if (b[i] != 0) {
      t = i;
      break;
    }
  if (t < 0)
    throw Error("DegenerateRatio", "X coincides with B");
  Elem k = F.div(a[t], b[t]);
  for (int i = 0; i < 3; ++i)
    if (a[i] != F.mul(k, b[i]))
      throw Error("NotCollinear", "A - X is not a multiple of B - X");
  return k;
}

} // namespace tiling
