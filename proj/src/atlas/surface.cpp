#include "atlas/surface.hpp"

#include <string>
#include <vector>

#include "atlas/error.hpp"
#include "atlas/rotation.hpp"

namespace atlas {
namespace {

class Bits {
 public:
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
  bool get(std::size_t i) const { return w_[i / 64] >> (i % 64) & 1; }
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }

 private:
  std::vector<std::uint64_t> w_;
};

struct Oriented {
  Elem u, v, w;  // traversal u -> v -> w -> u
};

// Key of the sorted triangle and whether (u, v, w) is the cyclic order of
// the sorted vertices.
std::pair<std::size_t, bool> canonical(const Oriented& t, unsigned m) {
  Elem p = t.u, q = t.v, r = t.w;
  if (p > q) std::swap(p, q);
  if (q > r) std::swap(q, r);
  if (p > q) std::swap(p, q);
  bool even;
  if (t.u == p) even = t.v == q;
  else if (t.v == p) even = t.w == q;
  else even = t.u == q;
  return {(std::size_t{p} << m) | q, even};
}

std::uint64_t pack(unsigned colour, const Oriented& t, unsigned m) {
  return (std::uint64_t{colour} << 63) | (std::uint64_t{t.u} << (2 * m)) |
         (std::uint64_t{t.v} << m) | t.w;
}

}  // namespace

SurfaceReport surface_report(const Field& field, const Permutation& f, Convention convention) {
  const unsigned m = field.m();
  if (m > kSurfaceMaxDegree) {
    throw Error(Errc::TooLarge, "orientability traversal supports m <= 14");
  }
  if (!is_closed_surface(field, f, convention)) {
    throw Error(Errc::NotClosedSurface, "self-embedding has pinch points");
  }
  const Permutation g = f.oriented(convention);
  const WhiteMap white(g);
  const std::size_t slots = std::size_t{1} << (2 * m);
  const Elem mask = (Elem{1} << m) - 1;

  Bits visited[2] = {Bits(slots), Bits(slots)};
  Bits even_bit[2] = {Bits(slots), Bits(slots)};
  Bits vertex_seen(field.size());
  std::uint64_t faces[2] = {0, 0};
  std::uint64_t vertices = 0;
  bool consistent = true;

  std::vector<std::uint64_t> stack;
  auto visit = [&](unsigned colour, const Oriented& t) {
    const auto [key, even] = canonical(t, m);
    if (visited[colour].get(key)) {
      if (even_bit[colour].get(key) != even) consistent = false;
      return;
    }
    visited[colour].set(key);
    if (even) even_bit[colour].set(key);
    ++faces[colour];
    stack.push_back(pack(colour, t, m));
  };

  visit(0, Oriented{1, 2, 3});
  while (!stack.empty()) {
    const std::uint64_t e = stack.back();
    stack.pop_back();
    const unsigned colour = static_cast<unsigned>(e >> 63);
    const Oriented t{static_cast<Elem>(e >> (2 * m)) & mask, static_cast<Elem>(e >> m) & mask,
                     static_cast<Elem>(e) & mask};
    for (Elem x : {t.u, t.v, t.w}) {
      if (!vertex_seen.get(x)) {
        vertex_seen.set(x);
        ++vertices;
      }
    }
    // Across each directed edge a -> b the neighbour (other colour) runs b -> a.
    const Elem ring[3][2] = {{t.u, t.v}, {t.v, t.w}, {t.w, t.u}};
    for (const auto& edge : ring) {
      const Elem a = edge[0], b = edge[1];
      const Elem c = colour == 0 ? white.third(a, b) : (a ^ b);
      visit(1 - colour, Oriented{b, a, c});
    }
  }

  const std::int64_t n = field.order();
  SurfaceReport rep;
  rep.vertices = vertices;
  rep.faces = faces[0] + faces[1];
  rep.edges = 3 * faces[0];  // every edge lies on exactly one black triangle
  rep.chi = static_cast<std::int64_t>(rep.vertices) - static_cast<std::int64_t>(rep.edges) +
            static_cast<std::int64_t>(rep.faces);
  rep.chi_formula = 2 - (n - 4) * (n - 3) / 6;
  if (faces[0] != faces[1] || 2 * rep.edges != 3 * rep.faces ||
      rep.edges != static_cast<std::uint64_t>(n * (n - 1) / 2) || rep.chi != rep.chi_formula) {
    throw Error(Errc::ConsistencyError,
                "triangulation counts disagree: chi " + std::to_string(rep.chi) + " vs " +
                    std::to_string(rep.chi_formula));
  }
  rep.orientable = consistent;
  rep.genus_or_crosscaps = static_cast<std::uint64_t>(consistent ? (2 - rep.chi) / 2 : 2 - rep.chi);
  return rep;
}

bool orientable(const Field& field, const Permutation& f, Convention convention) {
  return surface_report(field, f, convention).orientable;
}

}  // namespace atlas
