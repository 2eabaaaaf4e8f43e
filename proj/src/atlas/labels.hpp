#pragma once

// Points of the cyclic Hamming STS: label i in [1, n] is the field element
// alpha^(i-1).  Triples {a, b, a+b} are produced on demand from the field.

#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "atlas/gf2m.hpp"
#include "atlas/perm.hpp"

namespace atlas {

struct Label {
  std::uint32_t index = 0;

  auto operator<=>(const Label&) const = default;
};

struct Triple {
  Label p, q, r;  // sorted ascending

  auto operator<=>(const Triple&) const = default;
};

using LabelPair = std::pair<Label, Label>;

Elem label_to_elem(const Field& field, Label i);
Label elem_to_label(const Field& field, Elem x);

/// Third point of the black triple through p and q.
Label third_point(const Field& field, Label p, Label q);

/// Third point of the white triple through p and q under `convention`.
Label image_third(const Field& field, const Permutation& f, Label p, Label q,
                  Convention convention);

/// The 2^(m-1) - 1 pairs {q, r} completing a triple with p, each with q < r,
/// ordered by q.
std::vector<LabelPair> triples_at(const Field& field, Label p);

/// Visits all n(n-1)/6 triples in lexicographic order.
void for_each_triple(const Field& field, const std::function<void(const Triple&)>& visit);
std::vector<Triple> all_triples(const Field& field);

/// All white triples (the image system) in lexicographic order.
std::vector<Triple> image_triples(const Field& field, const Permutation& f,
                                  Convention convention);

Triple make_triple(Label a, Label b, Label c);

}  // namespace atlas
