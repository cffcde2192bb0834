#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "varcong/congruence.hpp"
#include "varcong/report.hpp"
#include "varcong/semigroup.hpp"
#include "varcong/variant.hpp"

namespace varcong {

/// Witness that a table fails the action axiom: m.(s t) != (m.s).t.
struct ActionViolation {
  int m;
  element s, t;
};

/// First violation in lexicographic (m, s, t) order, or nullopt when `table`
/// (degree x order, row-major) is a genuine right action.
std::optional<ActionViolation> validate_action_table(
    const FiniteSemigroup& sg, int degree, const std::vector<int>& table);

/// A right action of a finite semigroup on points {0..degree-1}.  The
/// constructor validates the axiom, so a constructed Action is always one.
class Action {
 public:
  /// Throws InvalidAction with the first violating (m, s, t).
  Action(FiniteSemigroup sg, int degree, std::vector<int> table);

  const FiniteSemigroup& semigroup() const { return sg_; }
  int degree() const { return degree_; }

  int apply(int m, element s) const {
    return table_[static_cast<size_t>(m) * sg_.order() + s];
  }

  const std::vector<int>& table() const { return table_; }

  bool operator==(const Action& o) const {
    return sg_ == o.sg_ && degree_ == o.degree_ && table_ == o.table_;
  }

 private:
  FiniteSemigroup sg_;
  int degree_;
  std::vector<int> table_;
};

/// The right Cayley action of S on S^1: point u moved by s to u s.  Always
/// faithful, since the identity point separates elements.
Action cayley_action(const MonoidView& m);

/// The induced action of the variant by a = beta alpha: m * s = m . (alpha s
/// beta), with the convention that acting by an (adjoined) identity does
/// nothing.  alpha, beta, a are monoid indices; throws DecompositionMismatch
/// unless beta alpha = a in S^1.
struct InducedAction {
  Variant var;
  element alpha, beta;
  Action star;  // action of var.star
};

InducedAction induced(const Action& base, const MonoidView& m, element a,
                      element alpha, element beta);

/// First pair s < t acting identically on every point, or nullopt when the
/// action is faithful.
std::optional<std::pair<element, element>> unfaithful_witness(const Action& a);
bool is_faithful(const Action& a);

/// s ~ t iff they act identically on every point; always a congruence.
Congruence kernel_congruence(const Action& a);

/// m generates when m . S covers every point of M.
std::vector<int> generating_points(const Action& a);
bool is_cyclic(const Action& a);

/// The image set M . u for u in S^1, ascending; M . 1 = M.
std::vector<int> image_points(const Action& a, const MonoidView& m, element u);

/// Outcome of rebuilding a candidate base action from a star action via
/// m . s = m * (alpha^ s beta^), where alpha^, beta^ are chosen inverses.
/// `table` is always filled in; `action` only when the axiom holds.
struct Reconstruction {
  std::vector<int> table;
  std::optional<ActionViolation> axiom_fail;
  /// First (m, s) where the rebuilt action does not induce the star back:
  /// m . (alpha s beta) != m * s.
  std::optional<std::pair<int, element>> induce_fail;
  std::optional<Action> action;

  bool ok() const { return !axiom_fail && !induce_fail; }
};

/// Preconditions (PreconditionFailed when violated): alpha_star is an inverse
/// of alpha in S^1, beta_star an inverse of beta, beta_star beta alpha
/// alpha_star is a mididentity, and star is an action of the variant by
/// beta alpha.
Reconstruction reconstruct_action(const MonoidView& m, const Action& star,
                                  element alpha, element beta,
                                  element alpha_star, element beta_star);

/// Faithfulness transfer: the induced action is faithful iff the base action
/// is faithful, alpha is left cancellable and beta is right cancellable.
/// Checks both sides independently and compares.
CheckReport check_faithfulness_theorem(const Action& base, const MonoidView& m,
                                       element a, element alpha, element beta);

/// Cyclicity transfer: the induced action is cyclic iff the base action is
/// cyclic, M beta = M, and M alpha contains a generating point.
CheckReport check_cyclic_proposition(const Action& base, const MonoidView& m,
                                     element a, element alpha, element beta);

}  // namespace varcong
