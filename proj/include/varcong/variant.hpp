#pragma once

#include <vector>

#include "varcong/semigroup.hpp"

namespace varcong {

/// The variant of a semigroup by a sandwich element: same carrier, new
/// multiplication s * t = s a t.  `sandwich` is an element of base^1, so a
/// variant by the (possibly adjoined) identity is the semigroup itself.
struct Variant {
  FiniteSemigroup base;
  element sandwich;
  FiniteSemigroup star;  // the new multiplication; names carried over
};

/// Variant by a base element.
Variant variant(const FiniteSemigroup& s, element a);

/// Variant by any element of S^1 (monoid index).
Variant variant(const MonoidView& m, element a);

/// A way of writing the sandwich element as a product beta * alpha in S^1.
/// Both coordinates are monoid indices.
struct Decomposition {
  element beta;
  element alpha;
  bool operator==(const Decomposition& o) const {
    return beta == o.beta && alpha == o.alpha;
  }
};

/// All pairs (beta, alpha) in S^1 x S^1 with beta alpha = a, ordered
/// lexicographically by (beta, alpha).  Always nonempty for a in S: it
/// contains (a, 1) and (1, a).
std::vector<Decomposition> decompositions(const MonoidView& m, element a);

}  // namespace varcong
