#include <doctest.h>

#include <set>

#include "atlas/cosets.hpp"
#include "atlas/notation.hpp"
#include "atlas/rotation.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace atlas;

namespace {

std::multiset<std::uint64_t> sizes_of(const Spectrum& s) {
  const auto full = s.full();
  return {full.begin(), full.end()};
}

std::multiset<std::uint64_t> oracle_sizes(const Field& f, std::uint64_t t, Convention c,
                                          Elem a) {
  const auto tab = oracle::power_table(t, f.m(), f.poly());
  const auto g = c == Convention::Direct ? tab : oracle::invert(tab);
  return oracle::rotation_sizes(oracle::image_system(g), f.size(), a);
}

}  // namespace

TEST_SUITE("rotation") {
  TEST_CASE("successor steps on the degree-five reference line") {
    const Field f = Field::build(5);
    const auto p = Permutation::monomial(f, 5);
    CHECK(successor(f, p, Label{1}, Label{2}, Convention::Inverse).index == 31);
    CHECK(successor(f, p, Label{1}, Label{31}, Convention::Inverse).index == 22);
    CHECK_ERRC(successor(f, p, Label{1}, Label{1}, Convention::Inverse), Errc::SamePoint);
    const auto id = Permutation::identity(f);
    for (std::uint32_t x = 2; x <= 31; ++x) {
      CHECK(successor(f, id, Label{1}, Label{x}, Convention::Inverse).index == x);
    }
  }

  TEST_CASE("rotation lines match the reference listings") {
    const Field f = Field::build(5);
    const auto l5 = rotation_lines(f, Permutation::monomial(f, 5), Label{1}, Convention::Inverse);
    REQUIRE(l5.size() == 1);
    CHECK(l5[0].entries.size() == 15);
    CHECK(format_line(l5[0]) ==
          "[2,19;31,18;22,26;17,10;16,25;27,29;9,21;24,13;14,15;5,11;28,7;23,8;3,6;30,4;12,20]");
    const auto l3 = rotation_lines(f, Permutation::monomial(f, 3), Label{1}, Convention::Inverse);
    REQUIRE(l3.size() == 2);
    const auto five = std::find_if(l3.begin(), l3.end(), [](auto& l) { return l.entries.size() == 5; });
    REQUIRE(five != l3.end());
    CHECK(format_line(*five) == "[2,19;5,11;17,10;3,6;9,21]");
    const Field f7 = Field::build(7);
    const auto l7 = rotation_lines(f7, Permutation::monomial(f7, 7), Label{1}, Convention::Inverse);
    REQUIRE(l7.size() == 1);
    CHECK(format_line(l7[0]).rfind("[2,8;91,10;74,79;", 0) == 0);
    CHECK(format_line(l7[0]).find(";36,110]") != std::string::npos);
  }

  TEST_CASE("line structure invariants") {
    const Field f = Field::build(7);
    for (std::uint64_t t : {3u, 5u, 11u, 19u, 63u}) {
      const auto p = Permutation::monomial(f, t);
      for (std::uint32_t a : {1u, 2u, 77u}) {
        const auto lines = rotation_lines(f, p, Label{a}, Convention::Inverse);
        std::set<std::uint32_t> seen;
        for (const auto& line : lines) {
          for (std::size_t i = 0; i < line.entries.size(); ++i) {
            const auto& [x, y] = line.entries[i];
            CHECK(third_point(f, Label{a}, x) == y);
            CHECK(seen.insert(x.index).second);
            CHECK(seen.insert(y.index).second);
            const auto& next = line.entries[(i + 1) % line.entries.size()].first;
            CHECK(successor(f, p, Label{a}, x, Convention::Inverse) == next);
          }
        }
        CHECK(seen.size() == f.order() - 1);
        CHECK_FALSE(seen.count(a));
      }
    }
  }

  TEST_CASE("identity has one pair per line") {
    const Field f = Field::build(4);
    const auto id = Permutation::identity(f);
    for (std::uint32_t a = 1; a <= 15; ++a) {
      const auto lines = rotation_lines(f, id, Label{a}, Convention::Inverse);
      CHECK(lines.size() == 7);
      for (const auto& l : lines) CHECK(l.entries.size() == 1);
    }
  }

  TEST_CASE("spectra") {
    const Field f5 = Field::build(5);
    CHECK(format_spectrum(spectrum(f5, Permutation::monomial(f5, 5), Label{1}, Convention::Inverse)) == "(1; 30)");
    CHECK(format_spectrum(spectrum(f5, Permutation::monomial(f5, 3), Label{1}, Convention::Inverse)) == "(2; 10, 20)");
    const Field f7 = Field::build(7);
    const auto s11 = spectrum(f7, Permutation::monomial(f7, 11), Label{1}, Convention::Inverse);
    CHECK(s11.lines == 15);
    CHECK(s11.reduced() == std::vector<std::uint64_t>{6, 10, 14});
    CHECK(s11.total() == 126);
    const Field f13 = Field::build(13);
    const auto s65 = spectrum(f13, Permutation::monomial(f13, 65), Label{1}, Convention::Inverse);
    CHECK(s65.lines == 13);
    CHECK(s65.sizes == std::map<std::uint64_t, std::uint64_t>{{630, 13}});
  }

  TEST_CASE("spectra agree with the explicit cycle oracle") {
    for (unsigned m : {3u, 4u, 5u, 6u, 7u}) {
      const Field f = Field::build(m);
      for (std::uint64_t t = 1; t < f.order(); ++t) {
        if (oracle::gcd(t, f.order()) != 1) continue;
        const auto p = Permutation::monomial(f, t);
        for (Convention c : {Convention::Direct, Convention::Inverse}) {
          for (std::uint32_t a : {1u, 2u, f.order()}) {
            const auto s = spectrum(f, p, Label{a}, c);
            REQUIRE(sizes_of(s) == oracle_sizes(f, t, c, label_to_elem(f, Label{a})));
          }
        }
      }
    }
  }

  TEST_CASE("spectrum at a point is the same for every point of a monomial map") {
    const Field f = Field::build(7);
    std::uniform_int_distribution<std::uint32_t> pick(1, f.order());
    for (std::uint64_t t : {3u, 5u, 7u, 11u, 23u}) {
      const auto p = Permutation::monomial(f, t);
      const auto ref = spectrum(f, p, Label{1}, Convention::Inverse);
      for (int i = 0; i < 10; ++i) {
        CHECK(spectrum(f, p, Label{pick(rng())}, Convention::Inverse) == ref);
      }
    }
  }

  TEST_CASE("closed surfaces and pinch points") {
    const Field f3 = Field::build(3);
    CHECK(is_closed_surface(f3, Permutation::monomial(f3, 3), Convention::Inverse));
    CHECK(pinch_count(f3, Permutation::monomial(f3, 3), Convention::Inverse) == 0);
    const Field f5 = Field::build(5);
    CHECK(is_closed_surface(f5, Permutation::monomial(f5, 5), Convention::Inverse));
    CHECK_FALSE(is_closed_surface(f5, Permutation::monomial(f5, 3), Convention::Inverse));
    CHECK(pinch_count(f5, Permutation::monomial(f5, 5), Convention::Inverse) == 0);
    CHECK(pinch_count(f5, Permutation::monomial(f5, 3), Convention::Inverse) == 31);
    const Field f9 = Field::build(9);
    for (const auto& c : class_reps(f9.order()).classes) {
      CHECK_FALSE(is_closed_surface(f9, Permutation::monomial(f9, c.rep), Convention::Inverse));
    }
  }

  TEST_CASE("general permutations are checked at every point") {
    // x^5 composed with a transposition of two points is no longer
    // monomial; the closed-surface test must agree with the oracle.
    const Field f = Field::build(5);
    auto tab = oracle::power_table(5, 5, f.poly());
    std::swap(tab[3], tab[7]);
    const auto p = Permutation::from_table(f, tab);
    const auto white = oracle::image_system(oracle::invert(tab));
    std::uint64_t pinched = 0;
    for (Elem a = 1; a < 32; ++a) pinched += oracle::rotation_sizes(white, 32, a).size() > 1;
    CHECK(pinch_count(f, p, Convention::Inverse) == pinched);
    CHECK(is_closed_surface(f, p, Convention::Inverse) == (pinched == 0));
  }
}
