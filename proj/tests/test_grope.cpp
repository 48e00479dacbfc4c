#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tiling/excise.hpp"
#include "tiling/grope.hpp"

using namespace tiling;
using testing_util::fixture_complex;

TEST_CASE("fan discs and bounded surfaces") {
  auto D = fan_disc(9);
  CHECK(D.complex.face_count() == 9);
  CHECK(D.complex.euler_characteristic() == 1);
  CHECK(D.boundary.size() == 9);
  CHECK_THROWS_WITH_AS(fan_disc(2), doctest::Contains("BadBoundary"), Error);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    int k = 2 + t % 4;
    bool handle = t % 2 == 1;
    auto S = testing_util::random_bounded_surface(k, handle, rng);
    // one boundary component: chi = 2 - 2g - 1
    int chi = S.complex.euler_characteristic();
    CHECK((chi == 1 || chi == -1));
    // gluing into a sphere face must accept it
    auto G = grope_base(polygon_surface(0));
    CHECK_NOTHROW(grope_glue(G, 0, S, k, GroupSpec{true, false, {}}));
  }
}

TEST_CASE("grope_base and grope_glue errors") {
  auto grope = fixture_complex("ninegon-grope");
  CHECK_THROWS_WITH_AS(grope_base(grope.complex), doctest::Contains("NotAClosedOrientableSurface"), Error);

  auto base = grope_base(polygon_surface(0));
  CHECK(base.complexity() == 0);
  CHECK_THROWS_WITH_AS(grope_glue(base, 5, fan_disc(9), 3, GroupSpec::reals()), doctest::Contains("FaceNotFound"),
                       Error);
  CHECK_THROWS_WITH_AS(grope_glue(base, 0, fan_disc(9), 3, GroupSpec::finite_field(4)),
                       doctest::Contains("NotTorsionCoprime"), Error);
  CHECK_THROWS_WITH_AS(grope_glue(base, 0, fan_disc(9), 2, GroupSpec::reals()),
                       doctest::Contains("NotTorsionCoprime"), Error);
  CHECK_THROWS_WITH_AS(grope_glue(base, 0, fan_disc(8), 3, GroupSpec::reals()), doctest::Contains("BadBoundary"),
                       Error);

  auto reversed = fan_disc(9);
  std::reverse(reversed.boundary.begin(), reversed.boundary.end());
  CHECK_THROWS_WITH_AS(grope_glue(base, 0, reversed, 3, GroupSpec::reals()), doctest::Contains("BadBoundary"),
                       Error);
  // a closed surface has no boundary to glue along
  BoundedSurface closed{polygon_surface(0), {0, 1, 2, 0, 1, 2}};
  CHECK_THROWS_AS(grope_glue(base, 0, closed, 2, GroupSpec::finite_field(2)), Error);
}

TEST_CASE("the 9-gon grope from its construction") {
  auto shape = fixtures::ninegon_grope_shape();
  CHECK(shape.complexity() == 1);
  CHECK(shape.gluings[0].k == 3);
  auto MC = fixture_complex("ninegon-grope");
  CHECK(complex_to_json(MC.complex) == complex_to_json(shape.complex));
  CHECK(MC.complex.face_count() == 1 + 9);
  auto two = fixtures::two_stage_grope_shape();
  CHECK(two.complexity() == 2);
}

TEST_CASE("torsion-coprime gropes excise every face") {
  std::mt19937_64 rng(101);
  const std::vector<GroupSpec> specs{GroupSpec::reals(), GroupSpec::finite_field(2), GroupSpec::finite_field(8),
                                     GroupSpec::rational_functions(3), GroupSpec::finite_field(5)};
  for (const auto &G : specs) {
    for (int t = 0; t < 12; ++t) {
      auto Gr = testing_util::random_grope(G, 3, rng);
      INFO(G.describe() << " trial " << t << " complexity " << Gr.complexity());
      for (int f = 0; f < Gr.complex.face_count(); ++f)
        CHECK(can_excise(Gr.complex, f, G));
    }
  }
}

TEST_CASE("dropping torsion-coprimality breaks excision") {
  const GroupSpec free_group{true, false, {}};
  struct Case {
    GroupSpec G;
    int k;
  };
  for (const auto &c : {Case{GroupSpec::finite_field(4), 3}, Case{GroupSpec::finite_field(8), 7},
                        Case{GroupSpec::reals(), 2}, Case{GroupSpec::finite_field(5), 2},
                        Case{GroupSpec::complexes(), 5}}) {
    INFO(c.G.describe() << " k=" << c.k);
    REQUIRE_FALSE(torsion_coprime(c.k, c.G));
    auto Gr = grope_glue(grope_base(polygon_surface(0)), 1, fan_disc(3 * c.k), c.k, free_group);
    CHECK(can_excise(Gr.complex, 0, free_group));
    CHECK_FALSE(can_excise(Gr.complex, 0, c.G));
  }
}
