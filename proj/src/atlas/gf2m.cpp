#include "atlas/gf2m.hpp"

#include <array>
#include <bit>
#include <string>

#include "atlas/error.hpp"

namespace atlas {
namespace {

// Smallest primitive polynomial of each degree (m = 5 and m = 7 are also
// the polynomials the golden tables were computed with).
constexpr std::array<std::uint32_t, kMaxDegree + 1> kDefaultPolys = {
    0,        0,        0x7,      0xb,      0x13,     0x25,
    0x43,     0x83,     0x11d,    0x211,    0x409,    0x805,
    0x1053,   0x201b,   0x402b,   0x8003,   0x1002d,  0x20009,
    0x40027,  0x80027,  0x100009, 0x200005, 0x400003,
};

void check_degree(unsigned m) {
  if (m < kMinDegree || m > kMaxDegree) {
    throw Error(Errc::OutOfRange, "degree m=" + std::to_string(m) +
                                      " outside [2, 22]");
  }
}

}  // namespace

std::uint32_t default_poly(unsigned m) {
  check_degree(m);
  return kDefaultPolys[m];
}

std::uint64_t poly_order(unsigned m, std::uint32_t poly) {
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  std::uint64_t b = 1;
  for (std::uint64_t e = 1; e <= n; ++e) {
    b <<= 1;
    if (b >> m & 1) b ^= poly;
    if (b == 1) return e;
    if (b == 0) return 0;
  }
  return 0;
}

std::uint64_t inverse_mod(std::uint64_t t, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  if (n == 1) return 0;
  std::int64_t r0 = static_cast<std::int64_t>(n);
  std::int64_t r1 = static_cast<std::int64_t>(t % n);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) {
    throw Error(Errc::NotCoprime, "exponent " + std::to_string(t) +
                                      " is not coprime to " + std::to_string(n));
  }
  if (s0 < 0) s0 += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(s0);
}

Field Field::build(unsigned m, std::optional<std::uint32_t> poly) {
  check_degree(m);
  const std::uint32_t p = poly.value_or(kDefaultPolys[m]);
  if (std::bit_width(p) != m + 1) {
    throw Error(Errc::DegreeMismatch, "polynomial degree " +
                                          std::to_string(std::bit_width(p) - 1) +
                                          " does not match m=" + std::to_string(m));
  }

  auto d = std::make_shared<Data>();
  d->m = m;
  d->poly = p;
  d->n = (std::uint32_t{1} << m) - 1;
  d->exp.assign(d->n, 0);
  d->log.assign(std::size_t{d->n} + 1, 0);

  std::uint32_t b = 1;
  for (std::uint32_t e = 0; e < d->n; ++e) {
    if (e > 0 && b == 1) {
      throw Error(Errc::NonPrimitivePoly,
                  "x has order " + std::to_string(e) + " < " + std::to_string(d->n));
    }
    d->exp[e] = b;
    d->log[b] = e;
    b <<= 1;
    if (b >> m & 1) b ^= p;
    if (b == 0) throw Error(Errc::NonPrimitivePoly, "polynomial is divisible by x");
  }
  if (b != 1) throw Error(Errc::NonPrimitivePoly, "powers of x do not cycle");
  // A repeat before n steps that avoids 1 means a reducible polynomial.
  for (std::uint32_t e = 0; e < d->n; ++e) {
    if (d->log[d->exp[e]] != e) {
      throw Error(Errc::NonPrimitivePoly, "antilog table has repeats");
    }
  }
  return Field(std::move(d));
}

Elem Field::pow(Elem x, std::uint64_t t) const noexcept {
  if (x == 0) return 0;
  const std::uint64_t e = (static_cast<std::uint64_t>(data_->log[x]) * (t % data_->n)) % data_->n;
  return data_->exp[e];
}

std::uint32_t Field::dlog(Elem x) const {
  if (x == 0 || x > data_->n) {
    throw Error(Errc::OutOfRange, "dlog of " + std::to_string(x) + " is undefined");
  }
  return data_->log[x];
}

std::uint64_t Field::checksum() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Elem e : data_->exp) {
    for (int k = 0; k < 4; ++k) {
      h ^= (e >> (8 * k)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

}  // namespace atlas
