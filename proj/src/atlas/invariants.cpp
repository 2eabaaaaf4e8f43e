#include "atlas/invariants.hpp"

#include <algorithm>
#include <string>

#include "atlas/error.hpp"

namespace atlas {
namespace {

struct ThirdPointCounts {
  std::vector<std::uint32_t> mult;  // indexed by element
  bool degenerate = false;
};

ThirdPointCounts count_third_points(const Field& field, const Permutation& f, Elem a,
                                    Convention convention) {
  const Permutation g = f.oriented(convention);
  const WhiteMap white(g);
  ThirdPointCounts c;
  c.mult.assign(field.size(), 0);
  for (Elem q = 1; q <= field.order(); ++q) {
    const Elem r = a ^ q;
    if (q == a || q > r) continue;
    const Elem z = white.third(q, r);
    if (z == a) c.degenerate = true;
    ++c.mult[z];
  }
  return c;
}

VStar histogram_of(const std::vector<std::uint32_t>& mult) {
  VStar vs;
  for (std::uint32_t k : mult) {
    if (k != 0) ++vs.histogram[k];
  }
  return vs;
}

}  // namespace

std::uint64_t VStar::mass() const {
  std::uint64_t s = 0;
  for (const auto& [mult, count] : histogram) s += mult * count;
  return s;
}

std::uint64_t VStar::distinct() const {
  std::uint64_t s = 0;
  for (const auto& [mult, count] : histogram) s += count;
  return s;
}

std::vector<Label> v_tilde(const Field& field, const Permutation& f, Label a,
                           Convention convention) {
  const Permutation g = f.oriented(convention);
  const WhiteMap white(g);
  std::vector<Label> out;
  out.reserve(field.order() / 2);
  for (const RotationLine& line : rotation_lines(field, f, a, convention)) {
    for (const auto& [p, q] : line.entries) {
      const Elem z = white.third(label_to_elem(field, p), label_to_elem(field, q));
      out.push_back(elem_to_label(field, z));
    }
  }
  return out;
}

VStar v_star(const Field& field, const Permutation& f, Label a, Convention convention) {
  return histogram_of(count_third_points(field, f, label_to_elem(field, a), convention).mult);
}

std::uint64_t v_value(const Field& field, const Permutation& f, Label a, Convention convention) {
  const auto c = count_third_points(field, f, label_to_elem(field, a), convention);
  if (c.degenerate) {
    throw Error(Errc::DegenerateEmbedding,
                "a white triple through point " + std::to_string(a.index) +
                    " repeats a black triple; use v_direct");
  }
  std::uint64_t distinct = 0;
  for (std::uint32_t k : c.mult) distinct += k != 0;
  return 1 + distinct;
}

std::uint64_t v_direct(const Field& field, const Permutation& f, Label a) {
  const Elem ea = label_to_elem(field, a);
  std::vector<bool> seen(field.size(), false);
  std::uint64_t count = 0;
  for (Elem x = 0; x < field.size(); ++x) {
    const Elem y = x ^ f.inv(ea ^ f(x));
    if (!seen[y]) {
      seen[y] = true;
      ++count;
    }
  }
  return count;
}

bool apn_by_v(const Field& field, const Permutation& f) {
  const std::uint64_t target = std::uint64_t{field.size()} / 2;
  const std::uint32_t last = f.is_monomial() ? 1 : field.order();
  for (std::uint32_t p = 1; p <= last; ++p) {
    if (v_direct(field, f, Label{p}) != target) return false;
  }
  return true;
}

bool apn_oracle(const Field& field, const Permutation& f) {
  std::vector<std::uint32_t> count(field.size());
  for (Elem b = 1; b < field.size(); ++b) {
    std::fill(count.begin(), count.end(), 0);
    for (Elem x = 0; x < field.size(); ++x) {
      if (++count[f(x) ^ f(x ^ b)] > 2) return false;
    }
  }
  return true;
}

InvariantRecord invariants_at_one(const Field& field, const Permutation& f,
                                  Convention convention) {
  InvariantRecord rec;
  rec.m = field.m();
  rec.t = f.exponent();
  const auto c = count_third_points(field, f, 1, convention);
  rec.vstar = histogram_of(c.mult);
  rec.degenerate = c.degenerate;

  const std::uint64_t direct = v_direct(field, f.oriented(convention), Label{1});
  if (!c.degenerate) {
    const std::uint64_t via_third = 1 + rec.vstar.distinct();
    if (via_third != direct) {
      throw Error(Errc::ConsistencyError,
                  "v mismatch at point 1: third points " + std::to_string(via_third) + " vs direct " +
                      std::to_string(direct));
    }
  }
  rec.v = direct;
  rec.apn = f.is_monomial() ? direct == field.size() / 2 : apn_by_v(field, f);
  rec.spectrum = spectrum(field, f, Label{1}, convention);
  rec.closed_surface = rec.spectrum.lines == 1 &&
                       (f.is_monomial() || is_closed_surface(field, f, convention));
  return rec;
}

}  // namespace atlas
