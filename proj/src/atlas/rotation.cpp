#include "atlas/rotation.hpp"

#include "atlas/error.hpp"

namespace atlas {
namespace {

// Walks the line through `start` at base a (elements), marking covered
// elements; returns the entry count.
std::uint64_t walk(const WhiteMap& white, Elem a, Elem start, std::vector<bool>& covered) {
  std::uint64_t len = 0;
  Elem x = start;
  do {
    covered[x] = true;
    covered[a ^ x] = true;
    ++len;
    x = white.third(a, a ^ x);
  } while (x != start);
  return len;
}

// Length of the line at a through start, aborting after `cap` entries.
std::uint64_t walk_length(const WhiteMap& white, Elem a, Elem start, std::uint64_t cap) {
  std::uint64_t len = 0;
  Elem x = start;
  do {
    ++len;
    if (len > cap) return len;
    x = white.third(a, a ^ x);
  } while (x != start);
  return len;
}

}  // namespace

std::vector<std::uint64_t> Spectrum::reduced() const {
  std::vector<std::uint64_t> out;
  for (const auto& [size, count] : sizes) out.push_back(size);
  return out;
}

std::vector<std::uint64_t> Spectrum::full() const {
  std::vector<std::uint64_t> out;
  for (const auto& [size, count] : sizes) out.insert(out.end(), count, size);
  return out;
}

std::uint64_t Spectrum::total() const {
  std::uint64_t t = 0;
  for (const auto& [size, count] : sizes) t += size * count;
  return t;
}

Label successor(const Field& field, const Permutation& f, Label a, Label x,
                Convention convention) {
  if (a == x) throw Error(Errc::SamePoint, "successor needs x != a");
  const Elem ea = label_to_elem(field, a);
  const Elem ex = label_to_elem(field, x);
  const Permutation g = f.oriented(convention);
  return elem_to_label(field, WhiteMap(g).third(ea, ea ^ ex));
}

std::vector<RotationLine> rotation_lines(const Field& field, const Permutation& f, Label a,
                                         Convention convention) {
  const Elem ea = label_to_elem(field, a);
  const Permutation g = f.oriented(convention);
  const WhiteMap white(g);
  const auto exp = field.exp_table();

  std::vector<bool> covered(field.size(), false);
  covered[0] = covered[ea] = true;
  std::vector<RotationLine> out;
  for (std::uint32_t s = 1; s <= field.order(); ++s) {
    const Elem start = exp[s - 1];
    if (covered[start]) continue;
    RotationLine line{a, {}};
    Elem x = start;
    do {
      covered[x] = covered[ea ^ x] = true;
      line.entries.emplace_back(Label{field.log_table()[x] + 1},
                                Label{field.log_table()[ea ^ x] + 1});
      x = white.third(ea, ea ^ x);
    } while (x != start);
    out.push_back(std::move(line));
  }
  return out;
}

Spectrum spectrum(const Field& field, const Permutation& f, Label a, Convention convention) {
  const Elem ea = label_to_elem(field, a);
  const Permutation g = f.oriented(convention);
  const WhiteMap white(g);
  const auto exp = field.exp_table();

  std::vector<bool> covered(field.size(), false);
  covered[0] = covered[ea] = true;
  Spectrum sp;
  for (std::uint32_t s = 1; s <= field.order(); ++s) {
    const Elem start = exp[s - 1];
    if (covered[start]) continue;
    ++sp.lines;
    ++sp.sizes[2 * walk(white, ea, start, covered)];
  }
  return sp;
}

bool is_closed_surface(const Field& field, const Permutation& f, Convention convention) {
  const Permutation g = f.oriented(convention);
  const WhiteMap white(g);
  const std::uint64_t pairs = field.order() / 2;
  const std::uint32_t last = f.is_monomial() ? 1 : field.order();
  for (std::uint32_t p = 1; p <= last; ++p) {
    const Elem a = field.exp_table()[p - 1];
    const Elem start = a == 1 ? 2 : 1;
    if (walk_length(white, a, start, pairs) != pairs) return false;
  }
  return true;
}

std::uint64_t pinch_count(const Field& field, const Permutation& f, Convention convention) {
  if (f.is_monomial()) {
    return spectrum(field, f, Label{1}, convention).lines > 1 ? field.order() : 0;
  }
  std::uint64_t count = 0;
  for (std::uint32_t p = 1; p <= field.order(); ++p) {
    if (spectrum(field, f, Label{p}, convention).lines > 1) ++count;
  }
  return count;
}

}  // namespace atlas
