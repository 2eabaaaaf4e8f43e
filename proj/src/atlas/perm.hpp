#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "atlas/gf2m.hpp"

namespace atlas {

/// Which map generates the second (white) triple system.
///   Direct:  white triples are F(S), third point F(F^{-1}(a) + F^{-1}(b)).
///   Inverse: white triples are F^{-1}(S), third point F^{-1}(F(a) + F(b)).
/// Inverse(F) is Direct(F^{-1}) exactly; Inverse is the default because it
/// reproduces the golden rotation-line listings verbatim.
enum class Convention { Direct, Inverse };

/// A bijection of GF(2^m) fixing 0, stored as forward and inverse tables.
/// Monomial maps x -> x^t additionally remember t.  Copies share the tables.
class Permutation {
 public:
  /// x -> x^t; throws NotCoprime if gcd(t, 2^m - 1) > 1.
  static Permutation monomial(const Field& field, std::uint64_t t);
  /// Arbitrary bijection given as a table of size 2^m with table[0] == 0.
  static Permutation from_table(const Field& field, std::vector<Elem> table);
  static Permutation identity(const Field& field) { return monomial(field, 1); }

  Elem operator()(Elem x) const noexcept { return (*fwd_)[x]; }
  Elem inv(Elem x) const noexcept { return (*inv_)[x]; }

  Permutation inverse() const;
  /// The map whose image of S is the white system under `c`.
  Permutation oriented(Convention c) const { return c == Convention::Direct ? *this : inverse(); }

  unsigned m() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(fwd_->size()); }
  bool is_monomial() const noexcept { return exponent_.has_value(); }
  std::optional<std::uint64_t> exponent() const noexcept { return exponent_; }

  std::span<const Elem> forward_table() const noexcept { return *fwd_; }
  std::span<const Elem> inverse_table() const noexcept { return *inv_; }

 private:
  Permutation(unsigned m, std::shared_ptr<const std::vector<Elem>> fwd,
              std::shared_ptr<const std::vector<Elem>> inv,
              std::optional<std::uint64_t> exponent)
      : m_(m), fwd_(std::move(fwd)), inv_(std::move(inv)), exponent_(exponent) {}

  unsigned m_;
  std::shared_ptr<const std::vector<Elem>> fwd_;
  std::shared_ptr<const std::vector<Elem>> inv_;
  std::optional<std::uint64_t> exponent_;
};

/// Raw table view for hot loops: third point of the white triple through
/// a and b is g[ginv[a] ^ ginv[b]].
struct WhiteMap {
  const Elem* g;
  const Elem* ginv;

  explicit WhiteMap(const Permutation& effective)
      : g(effective.forward_table().data()), ginv(effective.inverse_table().data()) {}

  Elem third(Elem a, Elem b) const noexcept { return g[ginv[a] ^ ginv[b]]; }
};

}  // namespace atlas
