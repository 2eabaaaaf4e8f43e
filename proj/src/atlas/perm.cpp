#include "atlas/perm.hpp"

#include <string>

#include "atlas/error.hpp"

namespace atlas {

Permutation Permutation::monomial(const Field& field, std::uint64_t t) {
  const std::uint64_t n = field.order();
  inverse_mod(t, n);  // validates coprimality
  auto fwd = std::make_shared<std::vector<Elem>>(field.size(), 0);
  auto inv = std::make_shared<std::vector<Elem>>(field.size(), 0);
  const auto exp = field.exp_table();
  const std::uint64_t tr = t % n;
  // alpha^e -> alpha^(e t); walk e and e*t mod n together.
  std::uint64_t et = 0;
  for (std::uint32_t e = 0; e < n; ++e) {
    const Elem x = exp[e];
    const Elem y = exp[et];
    (*fwd)[x] = y;
    (*inv)[y] = x;
    et += tr;
    if (et >= n) et -= n;
  }
  return Permutation(field.m(), std::move(fwd), std::move(inv), t);
}

Permutation Permutation::from_table(const Field& field, std::vector<Elem> table) {
  if (table.size() != field.size()) {
    throw Error(Errc::InvalidPermutation,
                "table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(field.size()));
  }
  if (table[0] != 0) throw Error(Errc::InvalidPermutation, "F(0) must be 0");
  auto inv = std::make_shared<std::vector<Elem>>(table.size(), 0);
  std::vector<bool> seen(table.size(), false);
  for (std::size_t x = 0; x < table.size(); ++x) {
    const Elem y = table[x];
    if (y >= table.size() || seen[y]) {
      throw Error(Errc::InvalidPermutation, "table is not a bijection");
    }
    seen[y] = true;
    (*inv)[y] = static_cast<Elem>(x);
  }
  auto fwd = std::make_shared<const std::vector<Elem>>(std::move(table));
  return Permutation(field.m(), std::move(fwd), std::move(inv), std::nullopt);
}

Permutation Permutation::inverse() const {
  std::optional<std::uint64_t> e;
  if (exponent_) {
    const std::uint64_t n = (std::uint64_t{1} << m_) - 1;
    e = inverse_mod(*exponent_, n);
  }
  return Permutation(m_, inv_, fwd_, e);
}

}  // namespace atlas
