#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "atlas/perm.hpp"

namespace atlas {

enum class IsoVerdict { Isomorphic, NotIsomorphic, Timeout };

const char* iso_verdict_name(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::NotIsomorphic;
  bool colour_reversing = false;
  std::vector<Elem> witness;  // element map phi with phi(0) = 0
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultIsoNodes = 2'000'000;

/// Searches for a point bijection mapping the pair (S, G1(S)) onto
/// (S, G2(S)) either colour-preserving or colour-reversing.  Throws
/// Timeout when the node budget runs out before a verdict.
IsoResult iso_search(const Field& field, const Permutation& f1, const Permutation& f2,
                     Convention convention, std::uint64_t node_budget = kDefaultIsoNodes);

/// Checks a witness directly against both triple systems.
bool is_isomorphism(const Field& field, const Permutation& f1, const Permutation& f2,
                    Convention convention, std::span<const Elem> phi, bool colour_reversing);

}  // namespace atlas
