#pragma once

#include <cstdint>
#include <vector>

namespace atlas {

/// Binary cyclotomic coset of i modulo n: {i, 2i, 4i, ...}, sorted.
std::vector<std::uint64_t> coset(std::uint64_t n, std::uint64_t i);

/// C*_t = C_t united with the coset of t^{-1} mod n.
struct CosetClass {
  std::uint64_t rep = 0;                // smallest member
  std::vector<std::uint64_t> members;   // sorted
  bool selfpaired = false;              // C_t already contains t^{-1}
};

/// Throws NotCoprime when gcd(t, n) > 1.
CosetClass coset_star(std::uint64_t n, std::uint64_t t);

struct ClassSet {
  CosetClass linear;                 // C*_1: identity and Frobenius powers
  std::vector<CosetClass> classes;   // remaining coprime exponents, by rep
};

/// Partition of the exponents coprime to n = 2^m - 1 into C* classes.
ClassSet class_reps(std::uint64_t n);

}  // namespace atlas
