#pragma once

#include <cstdint>

#include "atlas/perm.hpp"

namespace atlas {

struct SurfaceReport {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t faces = 0;
  std::int64_t chi = 0;           // V - E + F from the traversal counts
  std::int64_t chi_formula = 0;   // n - n(n-1)/6
  bool orientable = false;
  std::uint64_t genus_or_crosscaps = 0;  // g if orientable, else crosscap number
};

inline constexpr unsigned kSurfaceMaxDegree = 14;

/// Traverses the face-2-coloured triangulation S (black) + white system,
/// orienting triangles across shared edges.  Throws NotClosedSurface for
/// pseudosurfaces and TooLarge above m = 14.
SurfaceReport surface_report(const Field& field, const Permutation& f, Convention convention);

bool orientable(const Field& field, const Permutation& f, Convention convention);

}  // namespace atlas
