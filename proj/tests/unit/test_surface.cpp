#include <doctest.h>

#include "atlas/cosets.hpp"
#include "atlas/rotation.hpp"
#include "atlas/surface.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace atlas;

TEST_SUITE("surface") {
  TEST_CASE("small surfaces") {
    const Field f3 = Field::build(3);
    const auto torus = surface_report(f3, Permutation::monomial(f3, 3), Convention::Inverse);
    CHECK(torus.vertices == 7);
    CHECK(torus.edges == 21);
    CHECK(torus.faces == 14);
    CHECK(torus.chi == 0);
    CHECK(torus.orientable);
    CHECK(torus.genus_or_crosscaps == 1);

    const Field f5 = Field::build(5);
    const auto s = surface_report(f5, Permutation::monomial(f5, 5), Convention::Inverse);
    CHECK(s.chi == -124);
    CHECK(s.chi == s.chi_formula);
    CHECK_FALSE(s.orientable);
    CHECK(s.genus_or_crosscaps == 126);

    const Field f7 = Field::build(7);
    CHECK_FALSE(orientable(f7, Permutation::monomial(f7, 9), Convention::Inverse));
  }

  TEST_CASE("agrees with explicit triangle gluing") {
    for (unsigned m : {3u, 5u, 7u}) {
      const Field f = Field::build(m);
      for (const auto& c : class_reps(f.order()).classes) {
        const auto p = Permutation::monomial(f, c.rep);
        for (Convention conv : {Convention::Direct, Convention::Inverse}) {
          if (!is_closed_surface(f, p, conv)) continue;
          const auto tab = oracle::power_table(c.rep, m, f.poly());
          const auto want = oracle::surface(conv == Convention::Direct ? tab : oracle::invert(tab));
          const auto got = surface_report(f, p, conv);
          REQUIRE(got.chi == want.chi);
          REQUIRE(got.chi == got.chi_formula);
          REQUIRE(got.orientable == want.orientable);
        }
      }
    }
  }

  TEST_CASE("preconditions") {
    const Field f5 = Field::build(5);
    CHECK_ERRC(surface_report(f5, Permutation::monomial(f5, 3), Convention::Inverse),
               Errc::NotClosedSurface);
    const Field f4 = Field::build(4);
    CHECK_ERRC(orientable(f4, Permutation::monomial(f4, 7), Convention::Inverse),
               Errc::NotClosedSurface);
    const Field f15 = Field::build(15);
    CHECK_ERRC(surface_report(f15, Permutation::monomial(f15, 3), Convention::Inverse),
               Errc::TooLarge);
  }
}
