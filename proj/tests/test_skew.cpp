#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tiling/skew.hpp"

using namespace tiling;

namespace {

SkewPoint random_point(std::mt19937_64 &rng) { return {random_quaternion(rng), random_quaternion(rng)}; }

Quaternion nonzero_quaternion(std::mt19937_64 &rng) {
  for (;;) {
    Quaternion q = random_quaternion(rng);
    if (!q.is_zero() && q != Quaternion(1))
      return q;
  }
}

// F on CA with F on the line DE, or nullopt when DE is parallel to CA.
std::optional<SkewPoint> meet_side(const SkewPoint &C, const SkewPoint &A, const SkewPoint &D, const SkewPoint &E) {
  SkewLine L = skew_join(D, E);
  SkewPoint w = A - C;
  Quaternion den = w.x * L.a + w.y * L.b;
  if (den.is_zero())
    return std::nullopt;
  Quaternion s = -(C.x * L.a + C.y * L.b + L.c) * den.inverse();
  return C + s * w;
}

} // namespace

TEST_CASE("quaternion algebra") {
  auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == Quaternion(-1));
  CHECK(i * j * k == Quaternion(-1));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    auto x = random_quaternion(rng), y = random_quaternion(rng), z = random_quaternion(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK((x * y).conj() == y.conj() * x.conj());
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Quaternion(1));
      CHECK(x.inverse() * x == Quaternion(1));
    }
    CHECK(parse_quaternion(to_string(x)) == x);
  }
  CHECK_THROWS_WITH_AS(Quaternion().inverse(), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("quaternion parsing") {
  CHECK(parse_quaternion("1/2-3/4i+j-k") == Quaternion(mpq_class(1, 2), mpq_class(-3, 4), 1, -1));
  CHECK(parse_quaternion("0,1,0,0") == Quaternion::i());
  CHECK(parse_quaternion("-k") == -Quaternion::k());
  CHECK(parse_quaternion("3") == Quaternion(3));
  for (const char *bad : {"", "1+x", "1/0", "1,2,3"})
    CHECK_THROWS_WITH_AS(parse_quaternion(bad), doctest::Contains("ParseError"), Error);
}

TEST_CASE("joins and left brackets") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    SkewPoint P = random_point(rng), Q = random_point(rng);
    if (P == Q)
      continue;
    SkewLine L = skew_join(P, Q);
    CHECK(on_line(P, L));
    CHECK(on_line(Q, L));
    Quaternion s = random_quaternion(rng);
    SkewPoint R = P + s * (Q - P);
    CHECK(on_line(R, L));
    CHECK(skew_collinear(P, Q, R));
    // R - P = s (Q - P)
    CHECK(left_bracket(R, Q, P) == s);
  }
  SkewPoint O{0, 0};
  CHECK_THROWS_WITH_AS(skew_join(O, O), doctest::Contains("CoincidentPoints"), Error);
  CHECK_THROWS_WITH_AS(left_bracket(O, O, O), doctest::Contains("DegenerateDenominator"), Error);
  CHECK_THROWS_WITH_AS(left_bracket(SkewPoint{1, 1}, SkewPoint{1, 0}, O), doctest::Contains("NotCollinear"), Error);
}

TEST_CASE("Menelaus over the quaternions on random triangles") {
  std::mt19937_64 rng(1000);
  int collinear_cases = 0, generic_cases = 0;
  while (collinear_cases < 1000) {
    SkewPoint A = random_point(rng), B = random_point(rng), C = random_point(rng);
    if (A == B || B == C || A == C || skew_collinear(A, B, C))
      continue;
    SkewPoint D = A + nonzero_quaternion(rng) * (B - A);
    SkewPoint E = B + nonzero_quaternion(rng) * (C - B);
    auto F = meet_side(C, A, D, E);
    if (!F || *F == C || *F == A)
      continue;
    auto r = menelaus_check(A, B, C, D, E, *F);
    CHECK(r.collinear);
    CHECK(r.product_is_one);
    ++collinear_cases;

    SkewPoint G = C + nonzero_quaternion(rng) * (A - C);
    if (G == *F)
      continue;
    auto r2 = menelaus_check(A, B, C, D, E, G);
    CHECK(r2.agrees());
    CHECK_FALSE(r2.collinear);
    ++generic_cases;
  }
  CHECK(generic_cases > 900);
}

TEST_CASE("Menelaus input errors") {
  SkewPoint A{0, 0}, B{1, 0}, C{0, 1};
  SkewPoint D{mpq_class(1, 2), 0}, E{mpq_class(1, 2), mpq_class(1, 2)}, F{0, mpq_class(1, 2)};
  CHECK_NOTHROW(menelaus_check(A, B, C, D, E, F));
  CHECK_THROWS_WITH_AS(menelaus_check(A, B, SkewPoint{2, 0}, D, E, F), doctest::Contains("DegenerateTriangle"),
                       Error);
  CHECK_THROWS_WITH_AS(menelaus_check(A, B, C, A, E, F), doctest::Contains("DegeneratePoint"), Error);
  CHECK_THROWS_WITH_AS(menelaus_check(A, B, C, SkewPoint{5, 5}, E, F), doctest::Contains("NotCollinear"), Error);
}

TEST_CASE("random discs are discs and shell completely") {
  std::mt19937_64 rng(200);
  for (int t = 0; t < 200; ++t) {
    auto D = random_disc(1 + t % 50, rng);
    INFO("disc " << t);
    CHECK_NOTHROW(check_disc(D));
    auto free = free_faces(D);
    CHECK(free.size() >= (D.complex.face_count() > 1 ? 2u : 1u));
    // removal order down to a single face, each face at most once
    auto order = shell(D);
    std::set<int> seen(order.begin(), order.end());
    CHECK(static_cast<int>(order.size()) == D.complex.face_count() - 1);
    CHECK(seen.size() == order.size());
  }
}

TEST_CASE("free faces of a fan and non-discs") {
  // fan of 4 triangles around vertex 4
  auto D = disc_from_triangles(5, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}});
  CHECK(D.boundary.size() == 4);
  // each fan triangle has one boundary edge and an interior opposite vertex
  CHECK(free_faces(D).size() == 4);
  auto annulus = [] {
    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < 3; ++i) {
      int a = i, b = (i + 1) % 3, a2 = 3 + i, b2 = 3 + (i + 1) % 3;
      tris.push_back({a, b, b2});
      tris.push_back({a, b2, a2});
    }
    return tris;
  }();
  CHECK_THROWS_WITH_AS(check_disc(disc_from_triangles(6, annulus)), doctest::Contains("NotADisc"), Error);
  auto one = disc_from_triangles(3, {{0, 1, 2}});
  CHECK(free_faces(one) == std::vector<int>{0});
  CHECK(shell(one).empty());
}

TEST_CASE("boundary value of a flat cochain") {
  std::mt19937_64 rng(300);
  for (int t = 0; t < 60; ++t) {
    auto D = random_disc(2 + t % 15, rng);
    auto U = random_flat_cochain(D.complex, rng);
    auto v = evaluate_boundary(D, U);
    CHECK(v.shelled == v.direct);
    CHECK(v.direct == Quaternion(1));
  }
  auto D = random_disc(6, rng);
  auto U = random_flat_cochain(D.complex, rng);
  U[0] = U[0] * Quaternion(2);
  CHECK_THROWS_WITH_AS(evaluate_boundary(D, U), doctest::Contains("FlatnessViolated"), Error);
}

TEST_CASE("Pappus fails over the quaternions") {
  auto P = pappus_counterexample(Quaternion::i(), Quaternion::j());
  CHECK(P.defect == Quaternion(-1));
  CHECK(P.conclusion_product == Quaternion(-1));
  CHECK(P.config.points.size() == 12);
  CHECK(P.config.lines.size() == 9);
  CHECK(satisfies(testing_util::fixture_matrix("pappus12x9"), P.config));
  // the conclusion P1 on L1 fails
  CHECK_FALSE(on_line(P.config.points[0], P.config.lines[0]));
  CHECK_THROWS_WITH_AS(pappus_counterexample(Quaternion::i(), Quaternion::i() * Quaternion(2)),
                       doctest::Contains("Commuting"), Error);
}

TEST_CASE("Desargues holds on random quaternion instances") {
  auto R = desargues_soundness_sample(100, 42);
  CHECK(R.trials == 100);
  CHECK(R.ok());
  auto R2 = desargues_soundness_sample(100, 42);
  CHECK(R2.rejected == R.rejected);
}
