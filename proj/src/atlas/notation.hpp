#pragma once

// Text forms used in tables and CLI output:
//   spectrum  "(2; 10, 20)"        compact "(2;10,20)"
//   V*        "{1^42, 3^7}"
//   line      "[2,19;31,18;...]"
//   coset     "C*_21"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/invariants.hpp"
#include "atlas/rotation.hpp"

namespace atlas {

std::string format_spectrum(const Spectrum& s, bool compact = false);
std::string format_vstar(const VStar& v);
std::string format_line(const RotationLine& line);
std::string format_coset(std::uint64_t t);

/// Reduced spectrum: line count and the distinct sizes.  Throws ParseError.
struct ReducedSpectrum {
  std::uint64_t lines = 0;
  std::vector<std::uint64_t> sizes;
  bool operator==(const ReducedSpectrum&) const = default;
};
ReducedSpectrum reduce(const Spectrum& s);
ReducedSpectrum parse_spectrum(std::string_view text);
VStar parse_vstar(std::string_view text);
std::uint64_t parse_coset(std::string_view text);

}  // namespace atlas
