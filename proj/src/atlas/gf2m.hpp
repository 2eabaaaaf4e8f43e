#pragma once

// Arithmetic in GF(2^m) over a primitive polynomial, backed by discrete
// log / antilog tables.  Elements are "vector integers": bit j is the
// coefficient of alpha^j, so addition is XOR.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace atlas {

using Elem = std::uint32_t;

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 22;

/// Pinned default primitive polynomial for degree m (bitmask, x^m bit set).
std::uint32_t default_poly(unsigned m);

/// Order of x modulo poly, i.e. the cycle length of repeated multiplication
/// by x starting from 1; 0 if the cycle does not return to 1 within 2^m - 1
/// steps.
std::uint64_t poly_order(unsigned m, std::uint32_t poly);

/// u with t*u == 1 (mod n).  Throws NotCoprime when gcd(t, n) > 1.
std::uint64_t inverse_mod(std::uint64_t t, std::uint64_t n);

class Field {
 public:
  /// Builds the tables; throws OutOfRange, DegreeMismatch or NonPrimitivePoly.
  static Field build(unsigned m, std::optional<std::uint32_t> poly = std::nullopt);

  unsigned m() const noexcept { return data_->m; }
  std::uint32_t poly() const noexcept { return data_->poly; }
  /// Order of the multiplicative group, 2^m - 1.
  std::uint32_t order() const noexcept { return data_->n; }
  /// Number of field elements, 2^m.
  std::uint32_t size() const noexcept { return data_->n + 1; }

  static Elem add(Elem x, Elem y) noexcept { return x ^ y; }

  Elem mul(Elem x, Elem y) const noexcept {
    if (x == 0 || y == 0) return 0;
    std::uint32_t e = data_->log[x] + data_->log[y];
    if (e >= data_->n) e -= data_->n;
    return data_->exp[e];
  }

  /// x^t with 0^t = 0 for every t (including t = 0).
  Elem pow(Elem x, std::uint64_t t) const noexcept;

  /// Discrete log of a nonzero element; throws OutOfRange for 0.
  std::uint32_t dlog(Elem x) const;

  Elem alpha_pow(std::uint64_t e) const noexcept { return data_->exp[e % data_->n]; }

  /// t^{-1} mod (2^m - 1); throws NotCoprime.
  std::uint64_t inv_exponent(std::uint64_t t) const { return inverse_mod(t, data_->n); }

  std::span<const Elem> exp_table() const noexcept { return data_->exp; }
  std::span<const std::uint32_t> log_table() const noexcept { return data_->log; }

  /// FNV-1a over the antilog table; identifies the concrete field.
  std::uint64_t checksum() const noexcept;

  bool operator==(const Field& other) const noexcept {
    return m() == other.m() && poly() == other.poly();
  }

 private:
  struct Data {
    unsigned m = 0;
    std::uint32_t poly = 0;
    std::uint32_t n = 0;
    std::vector<Elem> exp;           // e in [0, n) -> alpha^e
    std::vector<std::uint32_t> log;  // x in [1, 2^m) -> e; log[0] unused
  };

  explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

}  // namespace atlas
