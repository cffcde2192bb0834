#pragma once

#include <optional>
#include <string>
#include <utility>

#include "varcong/report.hpp"

namespace varcong {

/// An element a^i b^j of the bicyclic monoid on generators a, b with the
/// relation b a = 1.  Every element has exactly one such normal form.
struct BicyclicElement {
  int i = 0;
  int j = 0;

  bool operator==(const BicyclicElement& o) const {
    return i == o.i && j == o.j;
  }
  bool operator!=(const BicyclicElement& o) const { return !(*this == o); }
};

/// (a^i b^j)(a^k b^l): the middle b^j a^k cancels pairwise, leaving a
/// surplus of a's (k > j) or b's (j > k).
BicyclicElement bmul(BicyclicElement x, BicyclicElement y);
BicyclicElement bmul(BicyclicElement x, BicyclicElement y, BicyclicElement z);

inline BicyclicElement bicyclic_one() { return {0, 0}; }
inline BicyclicElement bicyclic_a() { return {1, 0}; }
inline BicyclicElement bicyclic_b() { return {0, 1}; }

/// Normal form rendering with zero powers elided: "1", "a", "b^3", "a^2 b".
std::string to_string(BicyclicElement x);

/// First pair (s, t), in lexicographic order over the window
/// {a^i b^j : i, j < window}^2, with s u t != s t; nullopt when u behaves as
/// a mididentity throughout the window.
std::optional<std::pair<BicyclicElement, BicyclicElement>> mididentity_witness(
    BicyclicElement u, int window);

/// Replays, mechanically, the derivation that no faithful action of the
/// bicyclic monoid extends along the factor pair (alpha, beta) = (a, b):
/// assuming one did, the identity point would satisfy 1 = a b.  Also checks
/// that a b, although of the form v' v u u' for inverses, is not a
/// mididentity.  Every step is a checked normal form computation; `window`
/// bounds the searches.
CheckReport verify_example1(int window);

}  // namespace varcong
