#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "varcong/semigroup.hpp"
#include "varcong/variant.hpp"

namespace varcong {

/// A congruence on a fixed finite semigroup, stored as a partition of its
/// elements.  Canonical form: classes are numbered by first occurrence, so
/// class_of[0] == 0 and the numbering is contiguous.  The constructor
/// verifies compatibility with the multiplication (s ~ t implies us ~ ut and
/// su ~ tu), so a constructed object is always a congruence of its semigroup.
class Congruence {
 public:
  /// Accepts any labeling of the partition; labels are normalized.  Throws
  /// NotACongruence when the partition is incompatible.
  Congruence(FiniteSemigroup sg, std::vector<int> class_of);

  const FiniteSemigroup& semigroup() const { return sg_; }
  const std::vector<int>& class_of() const { return class_of_; }
  int num_classes() const { return num_classes_; }

  bool same(element s, element t) const {
    return class_of_[s] == class_of_[t];
  }

  /// Same semigroup and same partition.
  bool operator==(const Congruence& o) const {
    return sg_ == o.sg_ && class_of_ == o.class_of_;
  }
  bool operator!=(const Congruence& o) const { return !(*this == o); }

 private:
  FiniteSemigroup sg_;
  std::vector<int> class_of_;
  int num_classes_;
};

/// Equal as partitions of {0..n-1}, regardless of which multiplication each
/// congruence is a congruence for.  This is the right comparison when the two
/// sides live on different variants of the same carrier.
bool same_partition(const Congruence& a, const Congruence& b);

/// a refines b as partitions: every a-class sits inside a b-class.  For
/// congruences on a common carrier this is relation containment a <= b.
bool refines(const Congruence& a, const Congruence& b);

Congruence identity_congruence(const FiniteSemigroup& s);
Congruence universal_congruence(const FiniteSemigroup& s);

/// Least congruence containing the given pairs.  Union-find closure: merging
/// a pair enqueues its left and right translates.
Congruence congruence_closure(
    const FiniteSemigroup& s,
    const std::vector<std::pair<element, element>>& pairs);

/// Lattice operations.  Throw MixedSemigroups unless both arguments live on
/// the same semigroup.  meet is class intersection; join is the congruence
/// closure of the union.
Congruence meet(const Congruence& a, const Congruence& b);
Congruence join(const Congruence& a, const Congruence& b);

/// The transfer of rho along a sandwich pair: (s, t) related iff
/// (b s c, b t c) is in rho.  The result is a congruence of the variant of S
/// by c b (checked by construction, as always).  b and c are monoid indices.
Congruence rho_bc(const Congruence& rho, const MonoidView& m, element b,
                  element c);

/// The conjugate transfer: (s, t) related iff (a s a, a t a) is in rho; a
/// congruence of the variant by a.
Congruence rho_a(const Congruence& rho, const MonoidView& m, element a);

/// One-sided specializations: rho_left is rho_bc with c = 1 ((a s, a t) in
/// rho), rho_right is b = 1 ((s a, t a) in rho).  Both land on the variant
/// by a.
Congruence rho_left(const Congruence& rho, const MonoidView& m, element a);
Congruence rho_right(const Congruence& rho, const MonoidView& m, element a);

/// S / rho with classes relabeled by first occurrence; projection maps an
/// element to its class index.  When S is named, a class is named by joining
/// its member names in braces.
struct QuotientSemigroup {
  FiniteSemigroup quotient;
  std::vector<element> projection;
};

QuotientSemigroup quotient(const FiniteSemigroup& s, const Congruence& rho);

/// rho intersected with T x T, as a congruence of the subsemigroup.
Congruence restrict_to(const Congruence& rho, const SubsetSemigroup& t);

/// Every congruence of S, sorted by (number of classes, class labeling), so
/// the universal congruence comes first and the identity congruence last.
/// Guarded: throws OrderTooLarge above order 9.
std::vector<Congruence> all_congruences(const FiniteSemigroup& s);

/// A bijective homomorphism a -> b as a mapping vector, or nullopt.  The
/// returned map is re-verified by full scan before being returned; the search
/// is deterministic, so equal inputs give identical witnesses.
std::optional<std::vector<element>> find_isomorphism(const FiniteSemigroup& a,
                                                     const FiniteSemigroup& b);

}  // namespace varcong
