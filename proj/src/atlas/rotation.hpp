#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "atlas/labels.hpp"

namespace atlas {

/// One cycle of alternating black/white triples around `base`.  Entry i is
/// (a_i, b_i) with {base, a_i, b_i} black and a_{i+1} = successor(a_i).
struct RotationLine {
  Label base;
  std::vector<LabelPair> entries;

  /// Number of points on the line (two per entry).
  std::uint64_t size() const noexcept { return 2 * entries.size(); }
};

/// Rotation-line spectrum at a point: line count and the multiset of line
/// sizes (in points), kept as size -> multiplicity.
struct Spectrum {
  std::uint64_t lines = 0;
  std::map<std::uint64_t, std::uint64_t> sizes;

  std::vector<std::uint64_t> reduced() const;
  /// Sizes ascending, with repetition.
  std::vector<std::uint64_t> full() const;
  std::uint64_t total() const;

  bool operator==(const Spectrum&) const = default;
};

Label successor(const Field& field, const Permutation& f, Label a, Label x,
                Convention convention);

/// Lines at `a`; each new line starts at the smallest uncovered label and
/// follows successor order.
std::vector<RotationLine> rotation_lines(const Field& field, const Permutation& f, Label a,
                                         Convention convention);

Spectrum spectrum(const Field& field, const Permutation& f, Label a, Convention convention);

/// True iff every point has a single rotation line.  Monomial maps are
/// checked at point 1 only, since all points carry the same spectrum.
bool is_closed_surface(const Field& field, const Permutation& f, Convention convention);

/// Number of points with more than one rotation line.
std::uint64_t pinch_count(const Field& field, const Permutation& f, Convention convention);

}  // namespace atlas
