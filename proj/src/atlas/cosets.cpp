#include "atlas/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "atlas/error.hpp"
#include "atlas/gf2m.hpp"

namespace atlas {

std::vector<std::uint64_t> coset(std::uint64_t n, std::uint64_t i) {
  if (n < 2 || i < 1 || i >= n) {
    throw Error(Errc::OutOfRange, "coset index " + std::to_string(i) + " outside [1, n-1]");
  }
  std::vector<std::uint64_t> out;
  std::uint64_t x = i;
  do {
    out.push_back(x);
    x = (2 * x) % n;
  } while (x != i);
  std::sort(out.begin(), out.end());
  return out;
}

CosetClass coset_star(std::uint64_t n, std::uint64_t t) {
  if (n < 2 || t < 1 || t >= n) {
    throw Error(Errc::OutOfRange, "exponent " + std::to_string(t) + " outside [1, n-1]");
  }
  const std::uint64_t tinv = inverse_mod(t, n);
  CosetClass c;
  c.members = coset(n, t);
  c.selfpaired = std::binary_search(c.members.begin(), c.members.end(), tinv);
  if (!c.selfpaired) {
    const auto other = coset(n, tinv);
    c.members.insert(c.members.end(), other.begin(), other.end());
    std::sort(c.members.begin(), c.members.end());
  }
  c.rep = c.members.front();
  return c;
}

ClassSet class_reps(std::uint64_t n) {
  if (n < 3) throw Error(Errc::OutOfRange, "n must be 2^m - 1 with m >= 2");
  ClassSet out;
  out.linear = coset_star(n, 1);
  std::vector<bool> seen(n, false);
  for (std::uint64_t t : out.linear.members) seen[t] = true;
  for (std::uint64_t t = 2; t < n; ++t) {
    if (seen[t] || std::gcd(t, n) != 1) continue;
    CosetClass c = coset_star(n, t);
    for (std::uint64_t u : c.members) seen[u] = true;
    out.classes.push_back(std::move(c));
  }
  return out;
}

}  // namespace atlas
