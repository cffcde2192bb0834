#include "varcong/checks.hpp"

#include <cassert>

namespace varcong {

namespace {

struct QuotientContext {
  QuotientSemigroup q;
  MonoidView qm;

  QuotientContext(const FiniteSemigroup& s, const Congruence& rho)
      : q(quotient(s, rho)), qm(q.quotient) {}

  // S^1 -> (S/rho)^1, sending an adjoined identity to the quotient identity.
  element proj(const MonoidView& m, element u) const {
    if (m.is_base(u)) return q.projection[u];
    return qm.one();
  }
};

nlohmann::ordered_json classes_json(const Congruence& c) {
  return nlohmann::ordered_json(c.class_of());
}

// First (s, t) the two partitions disagree on, as a json array.
nlohmann::ordered_json disagreement(const Congruence& a, const Congruence& b) {
  const int n = static_cast<int>(a.class_of().size());
  for (element s = 0; s < n; ++s)
    for (element t = s + 1; t < n; ++t)
      if (a.same(s, t) != b.same(s, t))
        return nlohmann::ordered_json::array({s, t});
  return nullptr;
}

}  // namespace

CheckReport check_simple_theorem(const Congruence& rho, const Congruence& sigma,
                                 const MonoidView& m, element b, element c,
                                 element b1, element c1) {
  if (rho.semigroup() != m.base() || sigma.semigroup() != m.base())
    throw MixedSemigroups();
  QuotientContext qc(m.base(), rho);
  Congruence rbc = rho_bc(rho, m, b, c);

  nlohmann::ordered_json fails = nlohmann::ordered_json::array();

  const bool l_related = green_L_related(qc.qm, qc.proj(m, b), qc.proj(m, b1));
  const bool r_related = green_R_related(qc.qm, qc.proj(m, c), qc.proj(m, c1));
  if (l_related && r_related) {
    Congruence other = rho_bc(rho, m, b1, c1);
    if (!same_partition(rbc, other)) {
      nlohmann::ordered_json f;
      f["item"] = "same-transfer-under-green";
      f["transfer_bc"] = classes_json(rbc);
      f["transfer_b1c1"] = classes_json(other);
      f["splits_at"] = disagreement(rbc, other);
      fails.push_back(std::move(f));
    }
  }

  if (!refines(rho, rbc)) {
    nlohmann::ordered_json f;
    f["item"] = "contains-rho";
    f["rho"] = classes_json(rho);
    f["transfer"] = classes_json(rbc);
    fails.push_back(std::move(f));
  }

  {
    const bool equal = same_partition(rbc, rho);
    const bool canc = is_left_cancellable(qc.qm, qc.proj(m, b)) &&
                      is_right_cancellable(qc.qm, qc.proj(m, c));
    if (equal != canc) {
      nlohmann::ordered_json f;
      f["item"] = "fixed-point-iff-cancellable";
      f["transfer_equals_rho"] = equal;
      f["quotient_pair_cancellable"] = canc;
      fails.push_back(std::move(f));
    }
  }

  {
    Congruence sbc = rho_bc(sigma, m, b, c);
    const bool contain = refines(rho, sigma);
    const bool contain_bc = refines(rbc, sbc);
    if (contain && !contain_bc) {
      nlohmann::ordered_json f;
      f["item"] = "monotone";
      f["splits_at"] = disagreement(rbc, sbc);
      fails.push_back(std::move(f));
    }
    QuotientContext qs(m.base(), sigma);
    const bool canc_sigma = is_left_cancellable(qs.qm, qs.proj(m, b)) &&
                            is_right_cancellable(qs.qm, qs.proj(m, c));
    if (canc_sigma && contain != contain_bc) {
      nlohmann::ordered_json f;
      f["item"] = "monotone-reflects-under-cancellable";
      f["contains"] = contain;
      f["contains_after_transfer"] = contain_bc;
      fails.push_back(std::move(f));
    }
  }

  if (fails.empty()) return pass_report("thm-simple", "");
  nlohmann::ordered_json w;
  w["items"] = std::move(fails);
  return fail_report("thm-simple", "", std::move(w));
}

CheckReport check_inverse_R_proposition(const Congruence& rho,
                                        const MonoidView& m, element b,
                                        element c) {
  QuotientContext qc(m.base(), rho);
  if (!is_inverse_semigroup(qc.q.quotient))
    throw PreconditionFailed("S/rho is an inverse semigroup");

  const bool right_equal =
      same_partition(rho_right(rho, m, b), rho_right(rho, m, c));
  const bool r_green = green_R_related(qc.qm, qc.proj(m, b), qc.proj(m, c));
  const bool left_equal =
      same_partition(rho_left(rho, m, b), rho_left(rho, m, c));
  const bool l_green = green_L_related(qc.qm, qc.proj(m, b), qc.proj(m, c));

  if (right_equal == r_green && left_equal == l_green)
    return pass_report("prop-inverse-r", "");
  nlohmann::ordered_json w;
  w["right_transfers_equal"] = right_equal;
  w["R_related_in_quotient"] = r_green;
  w["left_transfers_equal"] = left_equal;
  w["L_related_in_quotient"] = l_green;
  return fail_report("prop-inverse-r", "", std::move(w));
}

CheckReport check_beautiful_theorem(const Congruence& rho,
                                    const Congruence& sigma,
                                    const MonoidView& m, element b, element c) {
  if (rho.semigroup() != m.base() || sigma.semigroup() != m.base())
    throw MixedSemigroups();
  Congruence rbc = rho_bc(rho, m, b, c);
  Congruence sbc = rho_bc(sigma, m, b, c);

  nlohmann::ordered_json fails = nlohmann::ordered_json::array();

  {
    Congruence lhs = rho_bc(meet(rho, sigma), m, b, c);
    Congruence rhs = meet(rbc, sbc);
    if (!same_partition(lhs, rhs)) {
      nlohmann::ordered_json f;
      f["item"] = "meet";
      f["transfer_of_meet"] = classes_json(lhs);
      f["meet_of_transfers"] = classes_json(rhs);
      f["splits_at"] = disagreement(lhs, rhs);
      fails.push_back(std::move(f));
    }
  }

  Congruence join_of_transfers = join(rbc, sbc);
  Congruence transfer_of_join = rho_bc(join(rho, sigma), m, b, c);
  if (!refines(join_of_transfers, transfer_of_join)) {
    nlohmann::ordered_json f;
    f["item"] = "join-contained";
    f["join_of_transfers"] = classes_json(join_of_transfers);
    f["transfer_of_join"] = classes_json(transfer_of_join);
    fails.push_back(std::move(f));
  }

  if (is_regular_element(m, b) && is_regular_element(m, c) &&
      !same_partition(join_of_transfers, transfer_of_join)) {
    nlohmann::ordered_json f;
    f["item"] = "join-equal-under-regular";
    f["join_of_transfers"] = classes_json(join_of_transfers);
    f["transfer_of_join"] = classes_json(transfer_of_join);
    f["splits_at"] = disagreement(join_of_transfers, transfer_of_join);
    fails.push_back(std::move(f));
  }

  if (static_cast<int>(sandwich_subset(m, b, c).members().size()) ==
          m.base_order() &&
      !same_partition(rho, sigma) && same_partition(rbc, sbc)) {
    nlohmann::ordered_json f;
    f["item"] = "injective-under-onto";
    f["rho"] = classes_json(rho);
    f["sigma"] = classes_json(sigma);
    f["common_transfer"] = classes_json(rbc);
    fails.push_back(std::move(f));
  }

  if (fails.empty()) return pass_report("thm-beautiful", "");
  nlohmann::ordered_json w;
  w["items"] = std::move(fails);
  return fail_report("thm-beautiful", "", std::move(w));
}

CheckReport check_main_equation_proposition(const Congruence& rho,
                                            const MonoidView& m, element b,
                                            element c) {
  QuotientContext qc(m.base(), rho);
  if (!is_inverse_semigroup(qc.q.quotient))
    throw PreconditionFailed("S/rho is an inverse semigroup");

  const element a = m.product(c, b);
  Congruence rbc = rho_bc(rho, m, b, c);
  Congruence ra = rho_a(rho, m, a);

  nlohmann::ordered_json fails = nlohmann::ordered_json::array();

  if (!refines(rbc, ra)) {
    nlohmann::ordered_json f;
    f["item"] = "transfer-contained-in-conjugate";
    f["transfer_bc"] = classes_json(rbc);
    f["conjugate"] = classes_json(ra);
    fails.push_back(std::move(f));
  }

  {
    const bool collapse = same_partition(rbc, ra);
    const element u = qc.proj(m, b);
    const element v = qc.proj(m, c);
    auto vu = inverses_of(qc.qm, u);
    auto vv = inverses_of(qc.qm, v);
    assert(vu.size() == 1 && vv.size() == 1 &&
           "inverse quotient monoid has unique inverses");
    const element ui = vu.front(), vi = vv.front();
    bool eq_holds = true;
    element bad_x = -1;
    for (element x = 0; x < qc.qm.base_order() && eq_holds; ++x) {
      element lhs = qc.qm.product(u, x, v);
      element left = qc.qm.product(qc.qm.product(vi, v), u);
      element right = qc.qm.product(qc.qm.product(v, u), ui);
      element rhs = qc.qm.product(left, x, right);
      if (lhs != rhs) {
        eq_holds = false;
        bad_x = x;
      }
    }
    if (collapse != eq_holds) {
      nlohmann::ordered_json f;
      f["item"] = "collapse-iff-equation";
      f["transfers_coincide"] = collapse;
      f["equation_holds"] = eq_holds;
      if (!eq_holds) f["equation_fails_at"] = bad_x;
      if (!collapse) f["splits_at"] = disagreement(rbc, ra);
      fails.push_back(std::move(f));
    }
  }

  if (fails.empty()) return pass_report("prop-main", "");
  nlohmann::ordered_json w;
  w["items"] = std::move(fails);
  return fail_report("prop-main", "", std::move(w));
}

namespace {

CheckReport quotient_iso_check(const char* claim, const Congruence& rho,
                               const MonoidView& m, element b, element c,
                               Congruence transferred) {
  const FiniteSemigroup& star = transferred.semigroup();
  QuotientSemigroup q1 = quotient(star, transferred);
  SubsetSemigroup t = sandwich_subset(m, b, c);
  Congruence rt = restrict_to(rho, t);
  QuotientSemigroup q2 = quotient(t.sub(), rt);

  const int n = m.base_order();
  auto f = [&](element x) {
    return rt.class_of()[t.to_sub(m.product(b, x, c))];
  };

  nlohmann::ordered_json fails = nlohmann::ordered_json::array();

  {
    std::vector<bool> hit(q2.quotient.order(), false);
    for (element x = 0; x < n; ++x) hit[f(x)] = true;
    bool onto = true;
    for (bool h : hit) onto = onto && h;
    if (!onto) {
      nlohmann::ordered_json fj;
      fj["item"] = "surjective";
      fails.push_back(std::move(fj));
    }
  }

  // First witnessing pair is enough for either property.
  auto first_bad = [n](auto pred) -> std::optional<std::pair<element, element>> {
    for (element x = 0; x < n; ++x)
      for (element y = 0; y < n; ++y)
        if (pred(x, y)) return std::make_pair(x, y);
    return std::nullopt;
  };

  if (auto bad = first_bad([&](element x, element y) {
        return (f(x) == f(y)) != transferred.same(x, y);
      })) {
    nlohmann::ordered_json fj;
    fj["item"] = "kernel-is-transfer";
    fj["at"] = nlohmann::ordered_json::array({bad->first, bad->second});
    fails.push_back(std::move(fj));
  }

  if (auto bad = first_bad([&](element x, element y) {
        return f(star.product(x, y)) !=
               q2.quotient.product(f(x), f(y));
      })) {
    auto [x, y] = *bad;
    nlohmann::ordered_json fj;
    fj["item"] = "homomorphism";
    fj["at"] = nlohmann::ordered_json::array({x, y});
    fj["map_of_product"] = f(star.product(x, y));
    fj["product_of_maps"] = q2.quotient.product(f(x), f(y));
    fails.push_back(std::move(fj));
  }

  if (q1.quotient.order() != q2.quotient.order()) {
    nlohmann::ordered_json fj;
    fj["item"] = "same-size";
    fj["variant_quotient_order"] = q1.quotient.order();
    fj["sandwich_image_quotient_order"] = q2.quotient.order();
    fails.push_back(std::move(fj));
  }

  if (fails.empty()) return pass_report(claim, "");
  nlohmann::ordered_json w;
  w["items"] = std::move(fails);
  w["quotients_abstractly_isomorphic"] =
      find_isomorphism(q1.quotient, q2.quotient).has_value();
  return fail_report(claim, "", std::move(w));
}

}  // namespace

CheckReport check_quotient_isomorphism_bc(const Congruence& rho,
                                          const MonoidView& m, element b,
                                          element c) {
  return quotient_iso_check("prop-fact", rho, m, b, c, rho_bc(rho, m, b, c));
}

CheckReport check_quotient_isomorphism_a(const Congruence& rho,
                                         const MonoidView& m, element a) {
  return quotient_iso_check("prop-quotient-a", rho, m, a, a,
                            rho_a(rho, m, a));
}

}  // namespace varcong
