#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "tiling/finfield.hpp"
#include "tiling/json_io.hpp"

using namespace tiling;

namespace {

// Polynomial arithmetic over GF(p) written out digit by digit.
struct PolyField {
  int p, e;
  std::vector<int> modulus; // monic, lowest degree first, length e+1

  explicit PolyField(int q) {
    if (q == 4)
      p = 2, e = 2, modulus = {1, 1, 1};
    else if (q == 8)
      p = 2, e = 3, modulus = {1, 1, 0, 1};
    else if (q == 9)
      p = 3, e = 2, modulus = {1, 0, 1};
    else
      p = q, e = 1, modulus = {0, 1};
  }
  std::vector<int> digits(int k) const {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i, k /= p)
      d[i] = k % p;
    return d;
  }
  int value(const std::vector<int> &d) const {
    int k = 0;
    for (int i = e - 1; i >= 0; --i)
      k = k * p + ((d[i] % p) + p) % p;
    return k;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < e; ++i)
      x[i] += y[i];
    return value(x);
  }
  int mul(int a, int b) const {
    auto x = digits(a), y = digits(b);
    std::vector<int> prod(2 * e, 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j)
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (int deg = 2 * e - 1; deg >= e; --deg) {
      int c = prod[deg] % p;
      if (!c)
        continue;
      for (int i = 0; i <= e; ++i)
        prod[deg - e + i] = ((prod[deg - e + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(e);
    return value(prod);
  }
};

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9};

} // namespace

TEST_CASE("field tables match polynomial arithmetic") {
  for (int q : kOrders) {
    GaloisField F(q);
    PolyField P(q);
    CHECK(F.order() == q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == P.add(a, b));
        CHECK(F.mul(a, b) == P.mul(a, b));
      }
    for (int a = 1; a < q; ++a)
      CHECK(F.mul(a, F.inv(a)) == 1);
    for (int a = 0; a < q; ++a)
      CHECK(F.add(a, F.neg(a)) == 0);
  }
}

TEST_CASE("field examples") {
  GaloisField F5(5), F4(4), F8(8);
  CHECK(F5.inv(2) == 3);
  CHECK_THROWS_WITH_AS(F5.inv(0), doctest::Contains("DivisionByZero"), Error);
  for (int x = 1; x < 4; ++x)
    CHECK(F4.pow(x, 3) == 1);
  int cube_roots = 0;
  for (int x = 1; x < 8; ++x) {
    CHECK(F8.pow(x, 7) == 1);
    cube_roots += F8.pow(x, 3) == 1;
  }
  CHECK(cube_roots == 1);
  CHECK_THROWS_AS(GaloisField(6), Error);
  CHECK_THROWS_AS(GaloisField(11), Error);
  CHECK(GaloisField::supported(9));
  CHECK_FALSE(GaloisField::supported(10));
  CHECK(GaloisField(9).characteristic() == 3);
}

TEST_CASE("projective plane counts and duality") {
  for (int q : kOrders) {
    GaloisField F(q);
    auto T = projective_triples(F);
    CHECK(T.size() == size_t(q * q + q + 1));
    CHECK(std::is_sorted(T.begin(), T.end()));
    for (const Coords &L : T) {
      int on = 0;
      for (const Coords &P : T)
        on += incident(F, ProjPoint{P}, ProjLine{L});
      CHECK(on == q + 1);
    }
    for (const Coords &a : T)
      for (const Coords &b : T)
        CHECK(incident(F, ProjPoint{a}, ProjLine{b}) == incident(F, ProjPoint{b}, ProjLine{a}));
  }
}

TEST_CASE("normalization is canonical") {
  GaloisField F(5);
  CHECK(make_point(F, {0, 2, 4}).c == Coords{0, 1, 2});
  CHECK(make_point(F, {3, 1, 0}) == make_point(F, {1, 2, 0}));
  CHECK_THROWS_AS(make_point(F, {0, 0, 0}), Error);
  CHECK(affine_point(F, 3, 4) == make_point(F, {3, 4, 1}));
  CHECK(affine_point(F, 3, 4).c == Coords{1, 3, 2});
}

TEST_CASE("incidence, join and meet") {
  GaloisField F2(2), F3(3);
  CHECK(incident(F2, ProjPoint{{1, 0, 0}}, ProjLine{{0, 0, 1}}));
  auto L = join(F3, ProjPoint{{1, 0, 0}}, ProjPoint{{0, 1, 0}});
  REQUIRE(L);
  CHECK(L->c == Coords{0, 0, 1});
  CHECK_FALSE(join(F3, ProjPoint{{1, 2, 0}}, ProjPoint{{1, 2, 0}}));
  CHECK_FALSE(meet(F3, ProjLine{{0, 1, 1}}, ProjLine{{0, 1, 1}}));
  for (int q : {2, 3}) {
    GaloisField F(q);
    auto T = projective_triples(F);
    for (const Coords &a : T)
      for (const Coords &b : T) {
        if (a == b)
          continue;
        auto P = meet(F, ProjLine{a}, ProjLine{b});
        REQUIRE(P);
        int common = 0;
        for (const Coords &x : T)
          common += incident(F, ProjPoint{x}, ProjLine{a}) && incident(F, ProjPoint{x}, ProjLine{b});
        CHECK(common == 1);
        CHECK(incident(F, *P, ProjLine{a}));
        CHECK(incident(F, *P, ProjLine{b}));
        auto J = join(F, ProjPoint{a}, ProjPoint{b});
        REQUIRE(J);
        CHECK(incident(F, ProjPoint{a}, *J));
        CHECK(incident(F, ProjPoint{b}, *J));
      }
  }
}

TEST_CASE("Fano plane") {
  GaloisField F(2);
  auto T = projective_triples(F);
  CHECK(T.size() == 7);
  for (const Coords &P : T) {
    int lines = 0;
    for (const Coords &L : T)
      lines += incident(F, ProjPoint{P}, ProjLine{L});
    CHECK(lines == 3);
  }
}

TEST_CASE("menelaus ratio examples") {
  GaloisField F(5);
  ProjLine chart = default_chart();
  ProjPoint A = affine_point(F, 1, 0), B = affine_point(F, 0, 1), X = affine_point(F, 3, 3);
  auto k = menelaus_ratio(F, A, B, X, chart);
  REQUIRE(k);
  CHECK(*k == 4);
  // substitution: A - X = k (B - X) coordinatewise
  CHECK(F.sub(1, 3) == F.mul(4, F.sub(0, 3)));
  CHECK(F.sub(0, 3) == F.mul(4, F.sub(1, 3)));
  CHECK(menelaus_ratio(F, A, B, A, chart) == Ratio{0});
  // X on the chart line is the improper point
  CHECK_FALSE(menelaus_ratio(F, A, B, ProjPoint{{1, 4, 0}}, chart).has_value());
  CHECK_THROWS_WITH_AS(menelaus_ratio(F, A, B, affine_point(F, 2, 2), chart), doctest::Contains("NotCollinear"),
                       Error);
  CHECK_THROWS_WITH_AS(menelaus_ratio(F, ProjPoint{{1, 4, 0}}, B, X, chart), doctest::Contains("DegenerateChart"),
                       Error);
}

TEST_CASE("commutative Menelaus over GF(5)") {
  GaloisField F(5);
  ProjLine chart = default_chart();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 4);
  auto rand_affine = [&] { return affine_point(F, d(rng), d(rng)); };
  auto dehomog = [&](const ProjPoint &P) {
    Elem z = F.inv(P.c[2]);
    return Coords{F.mul(P.c[0], z), F.mul(P.c[1], z), 1};
  };
  // a point on line PQ other than P and Q, in affine coordinates
  auto on_side = [&](const ProjPoint &P, const ProjPoint &Q) {
    Coords p = dehomog(P), q = dehomog(Q);
    for (;;) {
      Elem t = static_cast<Elem>(d(rng));
      if (t == 0 || t == 1)
        continue;
      Coords c;
      for (int i = 0; i < 3; ++i)
        c[i] = F.add(p[i], F.mul(t, F.sub(q[i], p[i])));
      return make_point(F, c);
    }
  };
  int samples = 0, collinear_count = 0;
  while (samples < 500) {
    ProjPoint A = rand_affine(), B = rand_affine(), C = rand_affine();
    if (A == B || B == C || A == C || collinear(F, A, B, C))
      continue;
    ProjPoint D = on_side(A, B), E = on_side(B, C), Fp = on_side(C, A);
    if (samples % 2) {
      // transversal: F from the line DE
      auto L = join(F, D, E);
      auto CA = join(F, C, A);
      if (!L || !CA)
        continue;
      auto X = meet(F, *L, *CA);
      if (!X || *X == C || *X == A || X->c[2] == 0)
        continue;
      Fp = *X;
    }
    auto r1 = menelaus_ratio(F, A, B, D, chart), r2 = menelaus_ratio(F, B, C, E, chart),
         r3 = menelaus_ratio(F, C, A, Fp, chart);
    REQUIRE(r1);
    REQUIRE(r2);
    REQUIRE(r3);
    bool product_one = F.mul(F.mul(*r1, *r2), *r3) == 1;
    bool col = collinear(F, D, E, Fp);
    CHECK(product_one == col);
    collinear_count += col;
    ++samples;
  }
  CHECK(collinear_count >= 250);
}

TEST_CASE("configuration JSON") {
  GaloisField F(4);
  Configuration C{4, {affine_point(F, 2, 3)}, {*join(F, affine_point(F, 0, 0), affine_point(F, 1, 3))}};
  Configuration D = config_from_json(config_to_json(C));
  CHECK(D.q == 4);
  CHECK(D.points == C.points);
  CHECK(D.lines == C.lines);
  CHECK_THROWS_WITH_AS(config_from_json(json::parse(R"({"q":4,"points":[[0,5,1]],"lines":[]})")),
                       doctest::Contains("ParseError"), Error);
}
