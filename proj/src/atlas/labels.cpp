#include "atlas/labels.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "atlas/error.hpp"

namespace atlas {
namespace {

void check_label(const Field& field, Label i) {
  if (i.index < 1 || i.index > field.order()) {
    throw Error(Errc::OutOfRange, "point label " + std::to_string(i.index) +
                                      " outside [1, " + std::to_string(field.order()) + "]");
  }
}

void check_pair(const Field& field, Label p, Label q) {
  check_label(field, p);
  check_label(field, q);
  if (p == q) throw Error(Errc::SamePoint, "points must differ");
}

}  // namespace

Elem label_to_elem(const Field& field, Label i) {
  check_label(field, i);
  return field.exp_table()[i.index - 1];
}

Label elem_to_label(const Field& field, Elem x) {
  if (x == 0 || x > field.order()) {
    throw Error(Errc::OutOfRange, "element " + std::to_string(x) + " is not a point");
  }
  return Label{field.log_table()[x] + 1};
}

Label third_point(const Field& field, Label p, Label q) {
  check_pair(field, p, q);
  return elem_to_label(field, label_to_elem(field, p) ^ label_to_elem(field, q));
}

Label image_third(const Field& field, const Permutation& f, Label p, Label q,
                  Convention convention) {
  check_pair(field, p, q);
  const Permutation g = f.oriented(convention);
  const WhiteMap white(g);
  return elem_to_label(field, white.third(label_to_elem(field, p), label_to_elem(field, q)));
}

Triple make_triple(Label a, Label b, Label c) {
  std::array<Label, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return Triple{v[0], v[1], v[2]};
}

std::vector<LabelPair> triples_at(const Field& field, Label p) {
  const Elem a = label_to_elem(field, p);
  std::vector<LabelPair> out;
  out.reserve(field.order() / 2);
  for (std::uint32_t qi = 1; qi <= field.order(); ++qi) {
    if (qi == p.index) continue;
    const Label q{qi};
    const Label r = elem_to_label(field, a ^ label_to_elem(field, q));
    if (q < r) out.emplace_back(q, r);
  }
  return out;
}

void for_each_triple(const Field& field, const std::function<void(const Triple&)>& visit) {
  const std::uint32_t n = field.order();
  for (std::uint32_t pi = 1; pi <= n; ++pi) {
    const Elem a = field.exp_table()[pi - 1];
    for (std::uint32_t qi = pi + 1; qi <= n; ++qi) {
      const Elem b = field.exp_table()[qi - 1];
      const std::uint32_t ri = field.log_table()[a ^ b] + 1;
      if (ri > qi) visit(Triple{Label{pi}, Label{qi}, Label{ri}});
    }
  }
}

std::vector<Triple> all_triples(const Field& field) {
  std::vector<Triple> out;
  const std::uint64_t n = field.order();
  out.reserve(n * (n - 1) / 6);
  for_each_triple(field, [&](const Triple& t) { out.push_back(t); });
  return out;
}

std::vector<Triple> image_triples(const Field& field, const Permutation& f,
                                  Convention convention) {
  const Permutation g = f.oriented(convention);
  std::vector<Triple> out;
  for_each_triple(field, [&](const Triple& t) {
    const Label a = elem_to_label(field, g(label_to_elem(field, t.p)));
    const Label b = elem_to_label(field, g(label_to_elem(field, t.q)));
    const Label c = elem_to_label(field, g(label_to_elem(field, t.r)));
    out.push_back(make_triple(a, b, c));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace atlas
