#include <doctest.h>

#include <set>

#include "atlas/iso.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace atlas;

namespace {

// Independent check of a witness: phi must carry black triples to black
// triples and white triples of the first system onto the second (or onto
// the black ones when colours swap).
bool oracle_witness(const Field& f, std::uint64_t t1, std::uint64_t t2, const std::vector<Elem>& phi,
                    bool reversing) {
  const std::size_t size = f.size();
  const auto w1 = oracle::image_system(oracle::invert(oracle::power_table(t1, f.m(), f.poly())));
  const auto w2 = oracle::image_system(oracle::invert(oracle::power_table(t2, f.m(), f.poly())));
  if (std::set<Elem>(phi.begin(), phi.end()).size() != size || phi[0] != 0) return false;
  for (Elem p = 1; p < size; ++p) {
    for (Elem q = p + 1; q < size; ++q) {
      const Elem a = phi[p], b = phi[q];
      const Elem black_img = phi[p ^ q];
      const Elem white_img = phi[w1[p * size + q]];
      const Elem black_want = reversing ? w2[a * size + b] : (a ^ b);
      const Elem white_want = reversing ? (a ^ b) : w2[a * size + b];
      if (black_img != black_want || white_img != white_want) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("iso") {
  TEST_CASE("degree-seven decisions") {
    const Field f = Field::build(7);
    const auto a = iso_search(f, Permutation::monomial(f, 7), Permutation::monomial(f, 21),
                              Convention::Inverse);
    CHECK(a.verdict == IsoVerdict::NotIsomorphic);
    CHECK(a.witness.empty());
    const auto b = iso_search(f, Permutation::monomial(f, 9), Permutation::monomial(f, 18),
                              Convention::Inverse);
    REQUIRE(b.verdict == IsoVerdict::Isomorphic);
    CHECK(is_isomorphism(f, Permutation::monomial(f, 9), Permutation::monomial(f, 18),
                         Convention::Inverse, b.witness, b.colour_reversing));
    CHECK(oracle_witness(f, 9, 18, b.witness, b.colour_reversing));
  }

  TEST_CASE("colour-reversing match at degree five") {
    const Field f = Field::build(5);
    const auto r = iso_search(f, Permutation::monomial(f, 5), Permutation::monomial(f, 25),
                              Convention::Inverse);
    REQUIRE(r.verdict == IsoVerdict::Isomorphic);
    CHECK(r.colour_reversing);
    CHECK(oracle_witness(f, 5, 25, r.witness, true));
    CHECK_FALSE(oracle_witness(f, 5, 25, r.witness, false));
  }

  TEST_CASE("every system matches itself and the relation is symmetric") {
    const Field f = Field::build(7);
    const std::vector<std::uint64_t> reps{7, 9, 19, 21, 29};
    for (auto t : reps) {
      const auto p = Permutation::monomial(f, t);
      const auto r = iso_search(f, p, p, Convention::Inverse);
      REQUIRE(r.verdict == IsoVerdict::Isomorphic);
      CHECK(oracle_witness(f, t, t, r.witness, r.colour_reversing));
    }
    for (auto s : reps) {
      for (auto t : reps) {
        if (s >= t) continue;
        const auto ps = Permutation::monomial(f, s), pt = Permutation::monomial(f, t);
        const auto st = iso_search(f, ps, pt, Convention::Inverse);
        const auto ts = iso_search(f, pt, ps, Convention::Inverse);
        CHECK(st.verdict == ts.verdict);
        if (st.verdict == IsoVerdict::Isomorphic) {
          CHECK(oracle_witness(f, s, t, st.witness, st.colour_reversing));
          CHECK(oracle_witness(f, t, s, ts.witness, ts.colour_reversing));
        }
      }
    }
  }

  TEST_CASE("a wrong map is rejected") {
    const Field f = Field::build(7);
    std::vector<Elem> id(f.size());
    for (Elem x = 0; x < f.size(); ++x) id[x] = x;
    const auto p7 = Permutation::monomial(f, 7), p21 = Permutation::monomial(f, 21);
    CHECK(is_isomorphism(f, p7, p7, Convention::Inverse, id, false));
    CHECK_FALSE(is_isomorphism(f, p7, p21, Convention::Inverse, id, false));
    CHECK_FALSE(is_isomorphism(f, p7, p21, Convention::Inverse, id, true));
  }

  TEST_CASE("node budget") {
    const Field f = Field::build(7);
    CHECK_ERRC(iso_search(f, Permutation::monomial(f, 7), Permutation::monomial(f, 21),
                          Convention::Inverse, 1),
               Errc::Timeout);
  }
}
