#include <doctest.h>

#include "atlas/codes.hpp"
#include "atlas/cosets.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace atlas;

namespace {

std::vector<std::uint64_t> to_u64(const WeightDistribution& w) {
  std::vector<std::uint64_t> out;
  for (const auto& c : w.counts) out.push_back(c.get_ui());
  return out;
}

}  // namespace

TEST_SUITE("codes") {
  TEST_CASE("parity-check rank") {
    const Field f = Field::build(5);
    CHECK(rank(build_parity(f, Permutation::monomial(f, 5))) == 10);
    CHECK(rank(build_parity(f, Permutation::identity(f))) == 5);
    CHECK(rank(build_parity(f, Permutation::monomial(f, 4))) == 5);
    CHECK_ERRC(weight_distribution(f, Permutation::identity(f)), Errc::RankDeficient);
    CHECK_ERRC(min_distance_upto5(f, Permutation::monomial(f, 2)), Errc::RankDeficient);
    const auto pc = build_parity(f, Permutation::monomial(f, 3));
    CHECK(pc.rows.size() == 10);
    // Column j holds alpha^(j-1) over x^3 of it.
    const Elem x = f.alpha_pow(6);
    const Elem y = f.pow(x, 3);
    for (unsigned r = 0; r < 5; ++r) {
      CHECK(pc.bit(r, 6) == static_cast<bool>(x >> r & 1));
      CHECK(pc.bit(5 + r, 6) == static_cast<bool>(y >> r & 1));
    }
  }

  TEST_CASE("minimum distance against brute force") {
    for (unsigned m : {3u, 4u, 5u, 6u, 7u}) {
      const Field f = Field::build(m);
      for (const auto& c : class_reps(f.order()).classes) {
        const auto p = Permutation::monomial(f, c.rep);
        if (rank(build_parity(f, p)) < 2 * m) continue;
        const auto tab = oracle::power_table(c.rep, m, f.poly());
        REQUIRE(static_cast<int>(min_distance_upto5(f, p)) == oracle::min_distance(tab));
        REQUIRE((min_distance_upto5(f, p) == DistanceClass::AtLeastFive) == oracle::is_apn(tab));
      }
    }
  }

  TEST_CASE("MacWilliams on the Hamming code") {
    const std::vector<mpz_class> hamming{1, 0, 0, 7, 7, 0, 0, 1};
    const auto simplex = macwilliams(hamming, 7, 4);
    CHECK(simplex == std::vector<mpz_class>{1, 0, 0, 0, 7, 0, 0, 0});
    const auto back = macwilliams(simplex, 7, 3);
    CHECK(back == hamming);
    const std::vector<mpz_class> bad{1, 1, 1, 0, 0, 0, 0, 0};
    CHECK_ERRC(macwilliams(bad, 7, 1), Errc::ConsistencyError);
  }

  TEST_CASE("dual weights agree across three routes") {
    for (unsigned m : {3u, 4u, 5u, 6u}) {
      const Field f = Field::build(m);
      for (std::uint64_t t = 1; t < f.order(); ++t) {
        if (oracle::gcd(t, f.order()) != 1) continue;
        const auto p = Permutation::monomial(f, t);
        const auto tab = oracle::power_table(t, m, f.poly());
        for (bool ext : {false, true}) {
          const auto want = oracle::dual_weights(tab, ext);
          REQUIRE(dual_weights(f, p, ext) == want);
          REQUIRE(dual_weights_enumerated(f, p, ext) == want);
        }
      }
    }
    const Field f9 = Field::build(9);
    const auto p = Permutation::monomial(f9, 13);
    CHECK(dual_weights(f9, p, false, 2) == dual_weights_enumerated(f9, p, false));
    CHECK(dual_weights(f9, p, true, 3) == dual_weights_enumerated(f9, p, true));
  }

  TEST_CASE("weight distributions") {
    const Field f = Field::build(7);
    for (std::uint64_t t : {3u, 7u, 19u}) {
      const auto p = Permutation::monomial(f, t);
      for (bool ext : {false, true}) {
        const auto w = weight_distribution(f, p, ext);
        CHECK(w.length == (ext ? 128u : 127u));
        CHECK(w.counts.size() == w.length + 1);
        mpz_class expect = 1;
        expect <<= w.length - (ext ? 15 : 14);
        CHECK(w.total() == expect);
        CHECK(w.counts[0] == 1);
        CHECK(w.counts[1] == 0);
        CHECK(w.counts[2] == 0);
      }
      CHECK(weight_distribution(f, p, true).counts[4].get_ui() == extended_weight4_count(f, p));
    }
    const Field f5 = Field::build(5);
    const auto a = weight_distribution(f5, Permutation::monomial(f5, 5));
    const auto b = weight_distribution(f5, Permutation::monomial(f5, 25));
    CHECK(a == b);
    CHECK(to_u64(a)[3] == 0);
    CHECK(to_u64(a)[4] == 0);
    CHECK_ERRC(weight_distribution(Field::build(14), Permutation::monomial(Field::build(14), 1)),
               Errc::TooLarge);
  }

  TEST_CASE("weights separate the degree-eleven pair sharing V*") {
    const Field f = Field::build(11);
    const auto a = weight_distribution(f, Permutation::monomial(f, 21));
    const auto b = weight_distribution(f, Permutation::monomial(f, 687));
    CHECK_FALSE(a == b);
    CHECK(a.total() == b.total());
  }

  TEST_CASE("quadruple identity") {
    for (unsigned m : {5u, 7u}) {
      const Field f = Field::build(m);
      for (const auto& c : class_reps(f.order()).classes) {
        const auto p = Permutation::monomial(f, c.rep);
        const auto q = quadruple_check(f, p);
        REQUIRE(q.agrees());
        REQUIRE(q.lhs == oracle::extended_weight4(oracle::power_table(c.rep, m, f.poly())));
      }
    }
    const Field f7 = Field::build(7);
    const auto q = quadruple_check(f7, Permutation::monomial(f7, 7));
    CHECK(q.lhs == 889);
    CHECK(q.solution_sum == 21);
  }
}
