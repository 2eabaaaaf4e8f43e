#include <doctest.h>

#include "atlas/gf2m.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace atlas;

TEST_SUITE("gf2m") {
  TEST_CASE("default polynomials are primitive for every supported degree") {
    for (unsigned m = kMinDegree; m <= kMaxDegree; ++m) {
      CHECK(poly_order(m, default_poly(m)) == (std::uint64_t{1} << m) - 1);
    }
  }

  TEST_CASE("tables are mutually inverse bijections") {
    for (unsigned m = 2; m <= 16; ++m) {
      const Field f = Field::build(m);
      const auto exp = f.exp_table();
      const auto log = f.log_table();
      CHECK(exp[0] == 1);
      std::vector<bool> seen(f.size(), false);
      for (std::uint32_t e = 0; e < f.order(); ++e) {
        REQUIRE(exp[e] != 0);
        REQUIRE_FALSE(seen[exp[e]]);
        seen[exp[e]] = true;
        REQUIRE(log[exp[e]] == e);
      }
    }
  }

  TEST_CASE("multiplication matches carry-less reduction") {
    for (unsigned m = 2; m <= 8; ++m) {
      const Field f = Field::build(m);
      for (Elem x = 0; x < f.size(); ++x) {
        for (Elem y = 0; y < f.size(); ++y) {
          REQUIRE(f.mul(x, y) == oracle::gf_mul(x, y, m, f.poly()));
        }
      }
    }
    // A larger field, sampled.
    const Field f = Field::build(17);
    std::uniform_int_distribution<Elem> d(0, f.order());
    for (int i = 0; i < 20000; ++i) {
      const Elem x = d(rng()), y = d(rng());
      REQUIRE(f.mul(x, y) == oracle::gf_mul(x, y, 17, f.poly()));
    }
  }

  TEST_CASE("degree five reference values") {
    const Field f = Field::build(5, 0x25);
    CHECK(f.alpha_pow(5) == 5);
    CHECK(f.alpha_pow(18) == 3);
    CHECK(f.mul(2, 13) == 26);
    CHECK(f.alpha_pow(9) == 26);
    CHECK(f.pow(f.alpha_pow(9), 5) == f.alpha_pow(14));
    CHECK(f.inv_exponent(5) == 25);
    CHECK(Field::build(7).inv_exponent(7) == 109);
  }

  TEST_CASE("identities") {
    const Field f = Field::build(9);
    for (Elem x = 0; x < f.size(); ++x) {
      CHECK(f.mul(x, 1) == x);
      CHECK(f.mul(0, x) == 0);
      CHECK(f.pow(x, 1) == x);
      if (x) CHECK(f.pow(x, f.order()) == 1);
    }
    CHECK(f.pow(0, 0) == 0);
    CHECK(f.pow(0, 7) == 0);
    for (std::uint32_t e = 0; e < f.order(); e += 37) CHECK(f.dlog(f.alpha_pow(e)) == e);
    CHECK_ERRC(f.dlog(0), Errc::OutOfRange);
  }

  TEST_CASE("pow agrees with repeated multiplication") {
    const Field f = Field::build(6);
    for (Elem x = 0; x < f.size(); ++x) {
      for (std::uint64_t t : {0u, 1u, 2u, 5u, 13u, 62u, 63u, 64u, 200u}) {
        if (x == 0) {
          CHECK(f.pow(x, t) == 0);
        } else {
          CHECK(f.pow(x, t) == oracle::gf_pow(x, t, 6, f.poly()));
        }
      }
    }
  }

  TEST_CASE("polynomial validation") {
    CHECK_NOTHROW(Field::build(5, 0x3D));  // x^5+x^4+x^3+x^2+1 is primitive
    CHECK(Field::build(5, 0x3D).poly() == 0x3D);
    CHECK_ERRC(Field::build(5, 0x23), Errc::NonPrimitivePoly);   // (x^2+x+1)(x^3+x^2+1)
    CHECK_ERRC(Field::build(6, 0x49), Errc::NonPrimitivePoly);   // irreducible, order 9
    CHECK_ERRC(Field::build(5, 0x13), Errc::DegreeMismatch);
    CHECK_ERRC(Field::build(5, 0x24), Errc::NonPrimitivePoly);   // divisible by x
    CHECK_ERRC(Field::build(1), Errc::OutOfRange);
    CHECK_ERRC(Field::build(23), Errc::OutOfRange);
    CHECK(poly_order(5, 0x23) == 21);
    CHECK(poly_order(6, 0x49) == 9);
    CHECK(poly_order(5, 0x25) == 31);
  }

  TEST_CASE("exponent inverses") {
    CHECK(inverse_mod(3, 7) == 5);
    CHECK(inverse_mod(15, 31) == 29);
    CHECK_ERRC(inverse_mod(3, 63), Errc::NotCoprime);
    CHECK_ERRC(inverse_mod(0, 31), Errc::NotCoprime);
    for (std::uint64_t t = 1; t < 127; ++t) CHECK(t * inverse_mod(t, 127) % 127 == 1);
  }

  TEST_CASE("fields with different polynomials are distinguishable") {
    const Field a = Field::build(5, 0x25), b = Field::build(5, 0x3D);
    CHECK_FALSE(a == b);
    CHECK(a.checksum() != b.checksum());
    CHECK(a == Field::build(5));
    CHECK(a.checksum() == Field::build(5).checksum());
  }
}
