#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "atlas/labels.hpp"
#include "atlas/rotation.hpp"

namespace atlas {

/// Multiplicity histogram of the third points z_i: multiplicity -> number of
/// distinct points with that multiplicity (the "x^s" notation).
struct VStar {
  std::map<std::uint64_t, std::uint64_t> histogram;

  /// Sum of multiplicity * count; always 2^(m-1) - 1.
  std::uint64_t mass() const;
  std::uint64_t distinct() const;

  bool operator==(const VStar&) const = default;
  auto operator<=>(const VStar& o) const { return histogram <=> o.histogram; }
};

/// Third points z_i of the white triples through each black pair
/// (a_i, a + a_i) at a, listed in rotation-line order.
std::vector<Label> v_tilde(const Field& field, const Permutation& f, Label a,
                           Convention convention);

VStar v_star(const Field& field, const Permutation& f, Label a, Convention convention);

/// 1 + |distinct z_i|.  Throws DegenerateEmbedding when some z_i == a
/// (a black triple repeats as a white one).
std::uint64_t v_value(const Field& field, const Permutation& f, Label a, Convention convention);

/// |{x + F^{-1}(a + F(x)) : x in GF(2^m)}| evaluated literally.
std::uint64_t v_direct(const Field& field, const Permutation& f, Label a);

/// APN test through v: v_direct(a) == 2^(m-1) at every point (point 1 for
/// monomial maps).
bool apn_by_v(const Field& field, const Permutation& f);

/// Differential count: F(x) + F(x + b) = c has at most two solutions for all
/// b != 0 and all c.
bool apn_oracle(const Field& field, const Permutation& f);

struct InvariantRecord {
  unsigned m = 0;
  std::optional<std::uint64_t> t;
  std::uint64_t v = 0;
  VStar vstar;
  bool apn = false;
  bool closed_surface = false;
  bool degenerate = false;
  Spectrum spectrum;
};

/// Invariants at point 1.  v is computed both through the z_i and by direct
/// evaluation of the effective white map; a mismatch throws ConsistencyError.
InvariantRecord invariants_at_one(const Field& field, const Permutation& f,
                                  Convention convention);

}  // namespace atlas
