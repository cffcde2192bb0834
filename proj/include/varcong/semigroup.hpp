#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "varcong/errors.hpp"

namespace varcong {

/// Elements are always 0-based indices into a multiplication table.  Identity
/// of elements is positional: two semigroups are "the same" exactly when their
/// orders and tables coincide.
using element = int;

/// A finite semigroup given by its full multiplication table, row-major:
/// table[s * order + t] = s t.  The constructor rejects anything that is not
/// associative, so a constructed object is always a semigroup.
class FiniteSemigroup {
 public:
  /// Throws Error on malformed input, AssociativityViolation (with the
  /// lexicographically first bad triple) if the table is not associative.
  /// `names` is optional display labels, one token per element.
  FiniteSemigroup(int order, std::vector<element> table,
                  std::vector<std::string> names = {});

  int order() const { return order_; }

  element product(element s, element t) const {
    return table_[static_cast<size_t>(s) * order_ + t];
  }

  /// s t u, left to right.  Associativity makes the grouping irrelevant.
  element product(element s, element t, element u) const {
    return product(product(s, t), u);
  }

  const std::vector<element>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Display label: the given name token, or the decimal index.
  std::string name_of(element s) const;

  /// The two-sided identity, if the semigroup has one (it is then unique).
  std::optional<element> identity() const { return identity_; }

  bool operator==(const FiniteSemigroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }
  bool operator!=(const FiniteSemigroup& other) const {
    return !(*this == other);
  }

 private:
  int order_;
  std::vector<element> table_;
  std::vector<std::string> names_;
  std::optional<element> identity_;
};

/// S^1: the monoid view of S.  If S already has an identity this is S itself;
/// otherwise a fresh identity is adjoined as the last element (index
/// base_order()).  All monoid-level operations (cancellability, Green's
/// relations, factor pairs) run here.
class MonoidView {
 public:
  explicit MonoidView(const FiniteSemigroup& base);

  const FiniteSemigroup& base() const { return base_; }
  const FiniteSemigroup& monoid() const { return monoid_; }

  int order() const { return monoid_.order(); }
  int base_order() const { return base_.order(); }
  bool adjoined() const { return adjoined_; }
  element one() const { return one_; }

  /// True when u indexes an element of the underlying semigroup (as opposed
  /// to the adjoined identity).
  bool is_base(element u) const { return u < base_.order(); }

  element product(element u, element v) const { return monoid_.product(u, v); }
  element product(element u, element v, element w) const {
    return monoid_.product(u, v, w);
  }

  /// Like FiniteSemigroup::name_of; an adjoined identity prints as "1".
  std::string name_of(element u) const;

 private:
  FiniteSemigroup base_;
  FiniteSemigroup monoid_;
  bool adjoined_;
  element one_;
};

/// u is left cancellable when s -> u s is injective on the base semigroup:
/// u s = u t implies s = t for s, t in S.  u itself ranges over S^1.
bool is_left_cancellable(const MonoidView& m, element u);

/// Mirror image: s u = t u implies s = t, quantified over the base.
bool is_right_cancellable(const MonoidView& m, element u);

/// u is a mididentity when s u t = s t for all s, t in S.
bool is_mididentity(const FiniteSemigroup& s, element u);

/// Monoid version: an identity (adjoined or not) is trivially a mididentity;
/// a base element is checked in the base.
bool is_mididentity(const MonoidView& m, element u);

bool is_idempotent(const FiniteSemigroup& s, element e);

/// All idempotents, ascending.
std::vector<element> idempotents(const FiniteSemigroup& s);

/// Walk x, x^2, x^3, ... to the unique idempotent in the cyclic
/// subsemigroup generated by x.
element idempotent_power(const FiniteSemigroup& s, element x);

bool is_left_identity(const FiniteSemigroup& s, element e);
bool is_right_identity(const FiniteSemigroup& s, element e);

/// x is regular when x y x = x for some y.
bool is_regular_element(const FiniteSemigroup& s, element x);
bool is_regular_element(const MonoidView& m, element x);

/// Every element regular.
bool is_regular(const FiniteSemigroup& s);

/// All inverses of x: the y with x y x = x and y x y = y, ascending.
std::vector<element> inverses_of(const FiniteSemigroup& s, element x);
std::vector<element> inverses_of(const MonoidView& m, element x);

/// Regular with commuting idempotents; equivalently, unique inverses.
bool is_inverse_semigroup(const FiniteSemigroup& s);

/// Group: an identity plus a two-sided inverse for every element.
bool is_group(const FiniteSemigroup& s);

/// Green's L in the monoid S^1: equal principal left ideals S^1 x = S^1 y.
bool green_L_related(const MonoidView& m, element x, element y);

/// Green's R: x S^1 = y S^1.
bool green_R_related(const MonoidView& m, element x, element y);

/// S s = S for every s.
bool is_left_simple(const FiniteSemigroup& s);
bool is_right_simple(const FiniteSemigroup& s);

/// A subsemigroup presented on a sorted subset of a parent's elements, with
/// the induced table relabeled to 0..k-1.  Construction throws NotClosed if
/// some product escapes the subset.
class SubsetSemigroup {
 public:
  SubsetSemigroup(const FiniteSemigroup& parent, std::vector<element> members);

  const FiniteSemigroup& sub() const { return sub_; }
  const std::vector<element>& members() const { return members_; }

  /// Parent element id -> subset id, or -1 when absent.
  element to_sub(element parent_elt) const { return to_sub_[parent_elt]; }
  element to_parent(element sub_elt) const { return members_[sub_elt]; }

 private:
  std::vector<element> members_;
  std::vector<element> to_sub_;
  FiniteSemigroup sub_;
};

/// The subset { b s c : s in S } of S, closed because b(s c b t)c witnesses
/// products.  b and c range over S^1.
SubsetSemigroup sandwich_subset(const MonoidView& m, element b, element c);

enum class GroupSide { left, right };

/// S presented as a direct product of a group and a left-zero (side = left)
/// or right-zero (side = right) band of idempotents.
struct GroupDecomposition {
  GroupSide side;
  SubsetSemigroup group;      // e S (left) or S e (right) for an idempotent e
  SubsetSemigroup zero_part;  // all idempotents of S
  /// factor_of[s] = (group id, zero id); the map s -> factor_of[s] is a
  /// verified isomorphism onto the direct product.
  std::vector<std::pair<element, element>> factor_of;
  /// Inverse of factor_of, indexed group id * |zero| + zero id.
  std::vector<element> element_of;
};

/// Succeeds exactly when S is left simple or right simple and contains an
/// idempotent (left simple is tried first; groups report side = left with a
/// trivial zero part).  The returned decomposition has been verified
/// element-by-element, not trusted from the construction.
std::optional<GroupDecomposition> left_right_group_decompose(
    const FiniteSemigroup& s);

/// Inverse of g in a group (throws PreconditionFailed if `g` has none, which
/// for a verified group cannot happen).
element group_inverse(const FiniteSemigroup& g, element x);

}  // namespace varcong
