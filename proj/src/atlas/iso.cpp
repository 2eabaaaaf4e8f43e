#include "atlas/iso.hpp"

#include <algorithm>
#include <string>

#include "atlas/error.hpp"

namespace atlas {

const char* iso_verdict_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "isomorphic";
    case IsoVerdict::NotIsomorphic: return "not_isomorphic";
    case IsoVerdict::Timeout: return "timeout";
  }
  return "?";
}

namespace {

// Colour-preserving maps fix S, so they are linear; we look for L with
// L(W1) = W2 and let every assignment propagate through both systems.
class Search {
 public:
  Search(const WhiteMap& w1, const WhiteMap& w2, std::size_t size, std::uint64_t budget)
      : w1_(w1), w2_(w2), img_(size, 0), pre_(size, 0), budget_(budget) {
    trail_.reserve(size);
  }

  enum class Outcome { Found, Exhausted, OutOfNodes };

  Outcome run(bool fix_one) {
    if (fix_one) {
      if (!assign(1, 1) || !propagate()) return Outcome::Exhausted;
    }
    return branch();
  }

  std::vector<Elem> witness() const { return img_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool assign(Elem x, Elem y) {
    if (img_[x] != 0) return img_[x] == y;
    if (pre_[y] != 0) return false;
    img_[x] = y;
    pre_[y] = x;
    trail_.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Elem x = trail_.back();
      trail_.pop_back();
      pre_[img_[x]] = 0;
      img_[x] = 0;
    }
    head_ = std::min(head_, mark);
  }

  // Every pair of assigned points is combined exactly once, when the later
  // of the two is reached.
  bool propagate() {
    for (; head_ < trail_.size(); ++head_) {
      const Elem x = trail_[head_];
      for (std::size_t j = 0; j < head_; ++j) {
        const Elem p = trail_[j];
        const Elem lx = img_[x], lp = img_[p];
        if (!assign(x ^ p, lx ^ lp)) return false;
        if (!assign(w1_.third(x, p), w2_.third(lx, lp))) return false;
      }
    }
    return true;
  }

  Outcome branch() {
    Elem x = 1;
    while (x < img_.size() && img_[x] != 0) ++x;
    if (x == img_.size()) return Outcome::Found;
    const std::size_t mark = trail_.size();
    for (Elem y = 1; y < pre_.size(); ++y) {
      if (pre_[y] != 0) continue;
      if (++nodes_ > budget_) return Outcome::OutOfNodes;
      if (assign(x, y) && propagate()) {
        const Outcome o = branch();
        if (o != Outcome::Exhausted) return o;
      }
      undo(mark);
    }
    return Outcome::Exhausted;
  }

  const WhiteMap& w1_;
  const WhiteMap& w2_;
  std::vector<Elem> img_;
  std::vector<Elem> pre_;
  std::vector<Elem> trail_;
  std::size_t head_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
};

}  // namespace

IsoResult iso_search(const Field& field, const Permutation& f1, const Permutation& f2,
                     Convention convention, std::uint64_t node_budget) {
  if (f1.m() != field.m() || f2.m() != field.m()) {
    throw Error(Errc::DegreeMismatch, "permutations live over different fields");
  }
  const Permutation g1 = f1.oriented(convention);
  const Permutation g2 = f2.oriented(convention);
  const WhiteMap w1(g1);

  IsoResult result;
  bool out_of_nodes = false;
  std::uint64_t remaining = node_budget;
  for (bool reversing : {false, true}) {
    // A colour-reversing phi = G2 o L where L maps G1(S) onto G2^{-1}(S).
    const Permutation target = reversing ? g2.inverse() : g2;
    const WhiteMap w2(target);
    // Multiplications are automorphisms of a monomial system, so 1 may be
    // sent to 1 without loss of generality.
    Search search(w1, w2, field.size(), remaining);
    const auto outcome = search.run(target.is_monomial());
    result.nodes += search.nodes();
    remaining = node_budget > result.nodes ? node_budget - result.nodes : 0;
    if (outcome == Search::Outcome::Found) {
      std::vector<Elem> phi = search.witness();
      if (reversing) {
        for (auto& y : phi) y = g2(y);
      }
      result.verdict = IsoVerdict::Isomorphic;
      result.colour_reversing = reversing;
      result.witness = std::move(phi);
      return result;
    }
    if (outcome == Search::Outcome::OutOfNodes) out_of_nodes = true;
  }
  if (out_of_nodes) {
    throw Error(Errc::Timeout, "isomorphism search exceeded " + std::to_string(node_budget) +
                                   " nodes");
  }
  result.verdict = IsoVerdict::NotIsomorphic;
  return result;
}

bool is_isomorphism(const Field& field, const Permutation& f1, const Permutation& f2,
                    Convention convention, std::span<const Elem> phi, bool colour_reversing) {
  const std::size_t size = field.size();
  if (phi.size() != size || phi[0] != 0) return false;
  std::vector<bool> hit(size, false);
  for (Elem y : phi) {
    if (y >= size || hit[y]) return false;
    hit[y] = true;
  }
  const Permutation g1 = f1.oriented(convention);
  const Permutation g2 = f2.oriented(convention);
  const WhiteMap w1(g1), w2(g2);
  for (Elem a = 1; a < size; ++a) {
    for (Elem b = a + 1; b < size; ++b) {
      const Elem pa = phi[a], pb = phi[b];
      const Elem black = phi[a ^ b], white = phi[w1.third(a, b)];
      if (colour_reversing) {
        if (black != w2.third(pa, pb) || white != (pa ^ pb)) return false;
      } else {
        if (black != (pa ^ pb) || white != w2.third(pa, pb)) return false;
      }
    }
  }
  return true;
}

}  // namespace atlas
