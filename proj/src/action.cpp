#include "varcong/action.hpp"

#include <algorithm>
#include <cassert>

namespace varcong {

std::optional<ActionViolation> validate_action_table(
    const FiniteSemigroup& sg, int degree, const std::vector<int>& table) {
  const int n = sg.order();
  assert(table.size() == static_cast<size_t>(degree) * n);
  auto at = [&](int m, element s) {
    return table[static_cast<size_t>(m) * n + s];
  };
  for (int m = 0; m < degree; ++m)
    for (element s = 0; s < n; ++s)
      for (element t = 0; t < n; ++t)
        if (at(at(m, s), t) != at(m, sg.product(s, t)))
          return ActionViolation{m, s, t};
  return std::nullopt;
}

Action::Action(FiniteSemigroup sg, int degree, std::vector<int> table)
    : sg_(std::move(sg)), degree_(degree), table_(std::move(table)) {
  if (degree_ < 1) throw Error("action needs at least 1 point");
  if (table_.size() != static_cast<size_t>(degree_) * sg_.order())
    throw Error("action table has " + std::to_string(table_.size()) +
                " entries, expected " + std::to_string(degree_ * sg_.order()));
  for (int p : table_)
    if (p < 0 || p >= degree_)
      throw Error("action table entry " + std::to_string(p) + " out of range");
  if (auto v = validate_action_table(sg_, degree_, table_))
    throw InvalidAction(v->m, v->s, v->t);
}

Action cayley_action(const MonoidView& m) {
  const int d = m.order();
  const int n = m.base_order();
  std::vector<int> table(static_cast<size_t>(d) * n);
  for (int u = 0; u < d; ++u)
    for (element s = 0; s < n; ++s)
      table[static_cast<size_t>(u) * n + s] = m.product(u, s);
  return Action(m.base(), d, std::move(table));
}

InducedAction induced(const Action& base, const MonoidView& m, element a,
                      element alpha, element beta) {
  assert(base.semigroup() == m.base());
  if (m.product(beta, alpha) != a)
    throw DecompositionMismatch(
        "beta alpha = " + m.name_of(m.product(beta, alpha)) +
        " does not equal the sandwich element " + m.name_of(a));
  Variant v = variant(m, a);
  const int n = m.base_order();
  std::vector<int> table(static_cast<size_t>(base.degree()) * n);
  for (int p = 0; p < base.degree(); ++p)
    for (element s = 0; s < n; ++s) {
      element x = m.product(alpha, s, beta);
      assert(x < n && "alpha s beta stays in the base semigroup");
      table[static_cast<size_t>(p) * n + s] = base.apply(p, x);
    }
  Action star(v.star, base.degree(), std::move(table));
  return InducedAction{std::move(v), alpha, beta, std::move(star)};
}

std::optional<std::pair<element, element>> unfaithful_witness(const Action& a) {
  const int n = a.semigroup().order();
  for (element s = 0; s < n; ++s)
    for (element t = s + 1; t < n; ++t) {
      bool equal = true;
      for (int m = 0; m < a.degree() && equal; ++m)
        equal = a.apply(m, s) == a.apply(m, t);
      if (equal) return std::make_pair(s, t);
    }
  return std::nullopt;
}

bool is_faithful(const Action& a) { return !unfaithful_witness(a); }

Congruence kernel_congruence(const Action& a) {
  const int n = a.semigroup().order();
  std::vector<int> labels(n);
  for (element s = 0; s < n; ++s) {
    labels[s] = s;
    for (element t = 0; t < s; ++t) {
      bool equal = true;
      for (int m = 0; m < a.degree() && equal; ++m)
        equal = a.apply(m, s) == a.apply(m, t);
      if (equal) {
        labels[s] = labels[t];
        break;
      }
    }
  }
  return Congruence(a.semigroup(), std::move(labels));
}

std::vector<int> generating_points(const Action& a) {
  const int n = a.semigroup().order();
  std::vector<int> out;
  for (int m = 0; m < a.degree(); ++m) {
    std::vector<bool> hit(a.degree(), false);
    int count = 0;
    for (element s = 0; s < n; ++s) {
      int p = a.apply(m, s);
      if (!hit[p]) {
        hit[p] = true;
        ++count;
      }
    }
    if (count == a.degree()) out.push_back(m);
  }
  return out;
}

bool is_cyclic(const Action& a) { return !generating_points(a).empty(); }

std::vector<int> image_points(const Action& a, const MonoidView& m, element u) {
  std::vector<int> out;
  if (m.adjoined() && u == m.one()) {
    out.resize(a.degree());
    for (int p = 0; p < a.degree(); ++p) out[p] = p;
    return out;
  }
  assert(m.is_base(u));
  std::vector<bool> hit(a.degree(), false);
  for (int p = 0; p < a.degree(); ++p) hit[a.apply(p, u)] = true;
  for (int p = 0; p < a.degree(); ++p)
    if (hit[p]) out.push_back(p);
  return out;
}

Reconstruction reconstruct_action(const MonoidView& m, const Action& star,
                                  element alpha, element beta,
                                  element alpha_star, element beta_star) {
  auto inverse_in_monoid = [&](element x, element y) {
    return m.product(x, y, x) == x && m.product(y, x, y) == y;
  };
  if (!inverse_in_monoid(alpha, alpha_star))
    throw PreconditionFailed("alpha_star is an inverse of alpha in S^1");
  if (!inverse_in_monoid(beta, beta_star))
    throw PreconditionFailed("beta_star is an inverse of beta in S^1");
  element mid = m.product(m.product(beta_star, beta), m.product(alpha, alpha_star));
  if (!is_mididentity(m, mid))
    throw PreconditionFailed("beta_star beta alpha alpha_star is a mididentity");
  element a = m.product(beta, alpha);
  if (star.semigroup() != variant(m, a).star)
    throw PreconditionFailed("star is an action of the variant by beta alpha");

  const int n = m.base_order();
  Reconstruction r;
  r.table.resize(static_cast<size_t>(star.degree()) * n);
  for (int p = 0; p < star.degree(); ++p)
    for (element s = 0; s < n; ++s) {
      element x = m.product(alpha_star, s, beta_star);
      assert(x < n);
      r.table[static_cast<size_t>(p) * n + s] = star.apply(p, x);
    }
  r.axiom_fail = validate_action_table(m.base(), star.degree(), r.table);
  auto dot = [&](int p, element s) {
    return r.table[static_cast<size_t>(p) * n + s];
  };
  for (int p = 0; p < star.degree() && !r.induce_fail; ++p)
    for (element s = 0; s < n; ++s) {
      element x = m.product(alpha, s, beta);
      if (dot(p, x) != star.apply(p, s)) {
        r.induce_fail = std::make_pair(p, s);
        break;
      }
    }
  if (!r.axiom_fail)
    r.action = Action(m.base(), star.degree(), r.table);
  return r;
}

namespace {

nlohmann::ordered_json pair_json(std::pair<element, element> p) {
  return nlohmann::ordered_json::array({p.first, p.second});
}

}  // namespace

CheckReport check_faithfulness_theorem(const Action& base, const MonoidView& m,
                                       element a, element alpha, element beta) {
  InducedAction ind = induced(base, m, a, alpha, beta);
  const bool lhs = is_faithful(ind.star);
  const bool base_faithful = is_faithful(base);
  const bool lc = is_left_cancellable(m, alpha);
  const bool rc = is_right_cancellable(m, beta);
  const bool rhs = base_faithful && lc && rc;
  if (lhs == rhs) return pass_report("thm-faith", "");
  nlohmann::ordered_json w;
  w["induced_faithful"] = lhs;
  w["base_faithful"] = base_faithful;
  w["alpha_left_cancellable"] = lc;
  w["beta_right_cancellable"] = rc;
  if (auto uw = unfaithful_witness(ind.star))
    w["induced_collapses"] = pair_json(*uw);
  if (auto uw = unfaithful_witness(base)) w["base_collapses"] = pair_json(*uw);
  return fail_report("thm-faith", "", std::move(w));
}

CheckReport check_cyclic_proposition(const Action& base, const MonoidView& m,
                                     element a, element alpha, element beta) {
  InducedAction ind = induced(base, m, a, alpha, beta);
  const bool lhs = is_cyclic(ind.star);
  const bool base_cyclic = is_cyclic(base);
  std::vector<int> all(base.degree());
  for (int p = 0; p < base.degree(); ++p) all[p] = p;
  const bool beta_onto = image_points(base, m, beta) == all;
  auto gens = generating_points(base);
  auto alpha_image = image_points(base, m, alpha);
  bool gen_in_alpha_image = false;
  for (int g : gens)
    gen_in_alpha_image =
        gen_in_alpha_image ||
        std::binary_search(alpha_image.begin(), alpha_image.end(), g);
  const bool rhs = base_cyclic && beta_onto && gen_in_alpha_image;
  if (lhs == rhs) return pass_report("prop-cyclic", "");
  nlohmann::ordered_json w;
  w["induced_cyclic"] = lhs;
  w["base_cyclic"] = base_cyclic;
  w["beta_image_is_all"] = beta_onto;
  w["alpha_image_hits_generator"] = gen_in_alpha_image;
  w["generating_points"] = gens;
  w["alpha_image"] = alpha_image;
  return fail_report("prop-cyclic", "", std::move(w));
}

}  // namespace varcong
