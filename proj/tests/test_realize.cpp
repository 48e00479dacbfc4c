#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "tiling/excise.hpp"
#include "tiling/realize.hpp"

using namespace tiling;
using testing_util::random_matrix;

namespace {

// Enumerates every point tuple; given the points, each line is chosen
// independently, so existence factorizes per line.
Outcome naive_outcome(const IncidenceMatrix &M, int q) {
  GaloisField F(q);
  auto T = projective_triples(F);
  const int m = M.rows(), n = M.cols(), N = static_cast<int>(T.size());
  std::vector<int> idx(m, 0);
  bool any = false;
  for (;;) {
    bool ok = true, counter = true;
    for (int c = 0; c < n && ok; ++c) {
      bool some = false, some_off = false;
      for (int l = 0; l < N; ++l) {
        bool fits = true;
        for (int r = 0; r < m && fits; ++r) {
          Tri v = M.cell(r, c);
          if (v != Tri::Zero)
            fits = incident(F, ProjPoint{T[idx[r]]}, ProjLine{T[l]}) == (v == Tri::PlusOne);
        }
        if (fits) {
          some = true;
          if (c == 0 && !incident(F, ProjPoint{T[idx[0]]}, ProjLine{T[l]}))
            some_off = true;
        }
      }
      ok = some;
      if (c == 0)
        counter = some_off;
    }
    if (ok) {
      any = true;
      if (counter)
        return Outcome::Counterexample;
    }
    int r = 0;
    while (r < m && ++idx[r] == N)
      idx[r++] = 0;
    if (r == m)
      break;
  }
  return any ? Outcome::True : Outcome::Vacuous;
}

} // namespace

TEST_CASE("verify_configuration") {
  Configuration hex = fixtures::hexagon6_f3();
  CHECK(verify_configuration(fixtures::hexagon6(), hex));
  CHECK_FALSE(conclusion_holds(hex));
  CHECK(verify_configuration(IncidenceMatrix(8, 8), hex));
  Configuration fano = fixtures::fano_plane();
  CHECK(verify_configuration(fixtures::fano(), fano));
  CHECK_FALSE(conclusion_holds(fano));
  CHECK_THROWS_WITH_AS(verify_configuration(IncidenceMatrix(7, 8), fano), doctest::Contains("DimensionMismatch"),
                       Error);
  // flip one +1 cell
  CHECK_FALSE(verify_configuration(fixtures::hexagon6().with(1, 1, Tri::PlusOne).with(2, 1, Tri::MinusOne), hex));
}

TEST_CASE("theorem verdicts over small fields") {
  auto outcome = [](const IncidenceMatrix &M, int q) { return check_theorem(M, q).outcome; };
  IncidenceMatrix qp2 = fixtures::q_points(2);
  CHECK(outcome(qp2, 2) == Outcome::True);
  CHECK(outcome(qp2, 3) == Outcome::Counterexample);
  CHECK(outcome(qp2, 4) == Outcome::Counterexample);
  CHECK(outcome(fixtures::q_points(3), 3) == Outcome::True);
  CHECK(outcome(fixtures::q_points(3), 4) == Outcome::Counterexample);
  for (int q : {2, 3, 5})
    CHECK(outcome(fixtures::warmup(), q) == Outcome::True);
  CHECK(outcome(fixtures::fano(), 2) == Outcome::Counterexample);
  CHECK(outcome(fixtures::fano(), 3) == Outcome::True);
  CHECK(outcome(fixtures::fano(), 5) == Outcome::True);
  CHECK(outcome(fixtures::hexagon6(), 3) == Outcome::Counterexample);
  // M' with (1,1) = -1 contradicts the incidence axiom: nothing realizes it
  CHECK(outcome(fixtures::incidence_axiom().with(1, 1, Tri::MinusOne), 2) == Outcome::Vacuous);
  CHECK(outcome(fixtures::incidence_axiom(), 3) == Outcome::True);
}

TEST_CASE("counterexamples are sound and deterministic across job counts") {
  for (auto [M, q] : std::vector<std::pair<IncidenceMatrix, int>>{
           {fixtures::fano(), 2}, {fixtures::q_points(2), 4}, {fixtures::hexagon6(), 3}, {fixtures::q_points(3), 5}}) {
    Verdict a = check_theorem(M, q);
    REQUIRE(a.outcome == Outcome::Counterexample);
    REQUIRE(a.counterexample);
    CHECK(verify_configuration(M, *a.counterexample));
    CHECK_FALSE(conclusion_holds(*a.counterexample));
    SearchOptions o;
    o.jobs = 3;
    Verdict b = check_theorem(M, q, o);
    REQUIRE(b.counterexample);
    CHECK(b.counterexample->points == a.counterexample->points);
    CHECK(b.counterexample->lines == a.counterexample->lines);
    CHECK(b.outcome == a.outcome);
  }
}

TEST_CASE("search agrees with naive enumeration over GF(2)") {
  std::mt19937_64 rng(21);
  int counts[4] = {0, 0, 0, 0};
  for (int t = 0; t < 50; ++t) {
    int m = 3 + t % 4, n = 3 + (t / 2) % 6;
    IncidenceMatrix M = random_matrix(rng, m, n, 2, 3, 2);
    Outcome expect = naive_outcome(M, 2);
    Verdict v = check_theorem(M, 2);
    CHECK(v.outcome == expect);
    SearchOptions o;
    o.fix_first = true;
    CHECK(check_theorem(M, 2, o).outcome == expect);
    if (v.counterexample) {
      CHECK(verify_configuration(M, *v.counterexample));
      CHECK_FALSE(conclusion_holds(*v.counterexample));
    }
    ++counts[static_cast<int>(expect)];
  }
  // the sample exercises more than one outcome
  CHECK(counts[0] + counts[1] + counts[2] == 50);
  CHECK(counts[1] > 0);
  CHECK(counts[0] + counts[2] > 0);
}

TEST_CASE("search agrees with naive enumeration over GF(3)") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 15; ++t) {
    IncidenceMatrix M = random_matrix(rng, 3 + t % 2, 4, 1, 2, 2);
    CHECK(check_theorem(M, 3).outcome == naive_outcome(M, 3));
  }
}

TEST_CASE("truth passes to subfields") {
  std::mt19937_64 rng(23);
  for (auto [small, big] : std::vector<std::pair<int, int>>{{2, 4}, {2, 8}, {3, 9}}) {
    int checked = 0;
    for (int t = 0; t < 30; ++t) {
      IncidenceMatrix M = random_matrix(rng, 4, 5, 1, 2, 2);
      Outcome o = check_theorem(M, big).outcome;
      if (o == Outcome::True) {
        ++checked;
        Outcome s = check_theorem(M, small).outcome;
        CHECK((s == Outcome::True || s == Outcome::Vacuous));
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("search statistics and budget") {
  Verdict v = check_theorem(fixtures::fano(), 3);
  CHECK(v.stats.nodes_expanded > 0);
  CHECK(v.stats.elapsed_ms >= 0);
  SearchOptions tiny;
  tiny.node_budget = 10;
  Verdict r = check_theorem(fixtures::fano(), 5, tiny);
  CHECK(r.outcome == Outcome::ResourceExceeded);
  CHECK(r.stats.nodes_expanded >= 10);
  CHECK_FALSE(r.counterexample);
  CHECK_THROWS_WITH_AS(check_theorem(fixtures::fano(), 6), doctest::Contains("UnsupportedField"), Error);
  CHECK(to_string(Outcome::Vacuous) == "Vacuous");
}

TEST_CASE("find_configuration") {
  auto r = find_configuration(fixtures::fano(), 2);
  CHECK(r.exhausted);
  REQUIRE(r.found);
  CHECK(verify_configuration(fixtures::fano(), *r.found));
  CHECK_FALSE(find_configuration(fixtures::incidence_axiom().with(1, 1, Tri::MinusOne), 3).found);
}

TEST_CASE("exponentiated cochains") {
  GaloisField F(4);
  Elem g = primitive_element(F);
  CHECK(F.pow(g, 1) != 1);
  CHECK(F.pow(g, 3) == 1);
  FieldCochain U = exponentiate_cochain({{0, 0}, {1, 1}, {2, 2}}, 3, F);
  CHECK(U.at(0) == 1);
  CHECK(U.at(1) == g);
  CHECK(U.at(2) == F.mul(g, g));
  CHECK_THROWS_WITH_AS(exponentiate_cochain({{0, 1}}, 4, F), doctest::Contains("BadModulus"), Error);
  GaloisField F7(7);
  Elem g7 = primitive_element(F7);
  int order = 1;
  while (F7.pow(g7, order) != 1)
    ++order;
  CHECK(order == 6);
}

TEST_CASE("realize_from_cochain") {
  SUBCASE("trivial cochain on the tetrahedron") {
    MarkedComplex T = desargues_tetrahedron();
    FieldCochain U;
    for (int e = 0; e < 6; ++e)
      U[e] = 1;
    auto C = realize_from_cochain(T, U, 3);
    REQUIRE(C);
    CHECK(verify_configuration(generate_theorem(T), *C));
    CHECK(conclusion_holds(*C));
    GaloisField F(3);
    for (int e = 0; e < 6; ++e)
      CHECK(C->points[T.labels.p_edge[e] - 1].c[2] == 0); // improper
  }
  SUBCASE("9-gon grope over GF(4)") {
    MarkedComplex N = fixtures::ninegon_grope();
    auto Z = failing_cochain(N.complex, N.marked, 3);
    REQUIRE(Z);
    CHECK(face_defect(N.complex, N.marked, *Z, 3) != 0);
    GaloisField F(4);
    auto C = realize_from_cochain(N, exponentiate_cochain(*Z, 3, F), 4);
    REQUIRE(C);
    CHECK(verify_configuration(generate_theorem(N), *C));
    CHECK_FALSE(conclusion_holds(*C));
  }
  SUBCASE("non-grope over GF(5)") {
    MarkedComplex G = fixtures::non_grope();
    auto Z = failing_cochain(G.complex, G.marked, 4);
    REQUIRE(Z);
    GaloisField F(5);
    auto C = realize_from_cochain(G, exponentiate_cochain(*Z, 4, F), 5);
    REQUIRE(C);
    CHECK(verify_configuration(generate_theorem(G), *C));
    CHECK_FALSE(conclusion_holds(*C));
  }
  SUBCASE("failing cochains on larger complexes and fields") {
    struct Case {
      MarkedComplex mc;
      int q;
    };
    for (auto &c : {Case{fixtures::two_stage_grope(), 4}, Case{fixtures::ninegon_grope(), 7},
                    Case{fixtures::two_stage_grope(), 7}, Case{fixtures::non_grope(), 9}}) {
      INFO("q=" << c.q);
      auto Z = failing_cochain(c.mc.complex, c.mc.marked, c.q - 1);
      REQUIRE(Z);
      GaloisField F(c.q);
      auto C = realize_from_cochain(c.mc, exponentiate_cochain(*Z, c.q - 1, F), c.q);
      REQUIRE(C);
      CHECK(verify_configuration(generate_theorem(c.mc), *C));
      CHECK_FALSE(conclusion_holds(*C));
    }
  }
  SUBCASE("a non-marked face that is not flat") {
    MarkedComplex T = desargues_tetrahedron();
    GaloisField F(5);
    FieldCochain U;
    for (int e = 0; e < 6; ++e)
      U[e] = 1;
    U[3] = 2; // edge 23 sits in faces 123 and 234
    CHECK_THROWS_WITH_AS(realize_from_cochain(T, U, 5), doctest::Contains("CochainViolatesF"), Error);
  }
  SUBCASE("random flat cochains realize configurations where the conclusion holds") {
    MarkedComplex T = desargues_tetrahedron();
    GaloisField F(7);
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<int> d(1, 6);
    for (int t = 0; t < 20; ++t) {
      Elem g[4];
      for (Elem &x : g)
        x = static_cast<Elem>(d(rng));
      FieldCochain U;
      for (int e = 0; e < 6; ++e) {
        const Edge &x = T.complex.edges()[e];
        U[e] = F.div(g[x.tail], g[x.head]);
      }
      auto C = realize_from_cochain(T, U, 7);
      REQUIRE(C);
      CHECK(verify_configuration(generate_theorem(T), *C));
      CHECK(conclusion_holds(*C));
    }
  }
}
