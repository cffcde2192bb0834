#include "varcong/harness.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "claims.hpp"
#include "varcong/bicyclic.hpp"
#include "varcong/congruence.hpp"
#include "varcong/errors.hpp"

namespace varcong {

namespace detail {

std::vector<CheckReport> run_example_semilattice(const SweepConfig&) {
  const CorpusEntry e = semilattice_example();
  MonoidView m(e.sg);
  Congruence iota = identity_congruence(e.sg);
  // Both transfers along (a, a) and (a, b) land on the variant by a, since
  // a a = b a = a, and both are universal; yet a and b are not R-related,
  // so agreement of transfers does not force the Green hypotheses.
  Congruence t_aa = rho_bc(iota, m, 0, 0);
  Congruence t_ab = rho_bc(iota, m, 0, 1);
  const std::vector<int> universal = {0, 0};
  const bool aa_universal = t_aa.class_of() == universal;
  const bool ab_universal = t_ab.class_of() == universal;
  const bool equal = t_aa == t_ab;
  const bool r_related = green_R_related(m, 0, 1);
  if (aa_universal && ab_universal && equal && !r_related)
    return {pass_report("example-semilattice", e.id)};
  nlohmann::ordered_json w;
  w["transfer_aa"] = t_aa.class_of();
  w["transfer_ab"] = t_ab.class_of();
  w["transfers_equal"] = equal;
  w["a_R_b"] = r_related;
  return {fail_report("example-semilattice", e.id, std::move(w))};
}

std::vector<CheckReport> run_example_rees(const SweepConfig&) {
  const CorpusEntry e = rees_example();
  const FiniteSemigroup& s = e.sg;
  MonoidView m(s);
  const element b = 1;            // B
  const element c = m.one();      // adjoined identity
  Congruence rho = congruence_closure(s, {{3, 4}});    // AB ~ BA
  Congruence sigma = congruence_closure(s, {{3, 5}});  // AB ~ BB
  Congruence sum = join(rho, sigma);

  Congruence t_rho = rho_bc(rho, m, b, c);
  Congruence t_sigma = rho_bc(sigma, m, b, c);
  Congruence t_iota = rho_bc(identity_congruence(s), m, b, c);
  Congruence t_sum = rho_bc(sum, m, b, c);
  Congruence sum_t = join(t_rho, t_sigma);

  struct Expect {
    const char* what;
    const std::vector<int>* got;
    std::vector<int> want;
  };
  const std::array<Expect, 7> table = {{
      {"rho", &rho.class_of(), {0, 1, 2, 3, 3, 4, 5}},
      {"sigma", &sigma.class_of(), {0, 1, 2, 3, 4, 3, 5}},
      {"join", &sum.class_of(), {0, 1, 2, 3, 3, 3, 4}},
      {"transfer_rho", &t_rho.class_of(), {0, 1, 2, 2, 2, 2, 2}},
      {"transfer_sigma", &t_sigma.class_of(), {0, 1, 2, 2, 2, 2, 2}},
      {"transfer_identity", &t_iota.class_of(), {0, 1, 2, 2, 2, 2, 2}},
      {"transfer_join", &t_sum.class_of(), {0, 0, 1, 1, 1, 1, 1}},
  }};
  nlohmann::ordered_json w;
  bool ok = true;
  for (const Expect& x : table)
    if (*x.got != x.want) {
      ok = false;
      w[std::string(x.what) + "_got"] = *x.got;
      w[std::string(x.what) + "_want"] = x.want;
    }
  // join of transfers strictly below transfer of join, split at (A, B)
  const bool strict = refines(sum_t, t_sum) && !same_partition(sum_t, t_sum) &&
                      t_sum.same(0, 1) && !sum_t.same(0, 1);
  if (!strict) {
    ok = false;
    w["join_of_transfers"] = sum_t.class_of();
    w["strictly_below_transfer_of_join"] = strict;
  }
  if (ok) return {pass_report("example-rees", e.id)};
  return {fail_report("example-rees", e.id, std::move(w))};
}

std::vector<CheckReport> run_example_bicyclic(const SweepConfig& config) {
  CheckReport r = verify_example1(config.window);
  r.instance = "window=" + std::to_string(config.window);
  return {r};
}

}  // namespace detail

namespace {

using Driver = std::vector<CheckReport> (*)(const SweepConfig&);

struct ClaimEntry {
  const char* id;
  Driver driver;
  const char* about;
};

// Battery order.  Sweep caps: action-side claims run the full corpus up to
// max_order; congruence sweeps stop at order 3 except the meet law of
// thm-beautiful, which runs at max_order.
constexpr std::array<ClaimEntry, 15> kClaims = {{
    {"lemma-good", &detail::run_lemma_good,
     "The sandwich map s -> alpha s beta is injective on S exactly when\n"
     "alpha is left cancellable and beta is right cancellable over S\n"
     "(alpha, beta taken in S^1).\n"
     "Instances: S=<order:index> alpha=<i> beta=<i>, over every semigroup\n"
     "in the corpus and every pair from S^1."},
    {"thm-faith", &detail::run_thm_faith,
     "Fix an action of S on M and a factorization a = beta alpha in S^1.\n"
     "The induced action of the variant by a, m o s = m . (alpha s beta),\n"
     "is faithful exactly when the base action is faithful, alpha is left\n"
     "cancellable and beta is right cancellable.\n"
     "Instances: S=<id> act=<action> a=<a> beta=<b> alpha=<al>, over the\n"
     "base action corpus and every factorization of every a."},
    {"thm-reg", &detail::run_thm_reg,
     "Fix a = beta alpha, inverses alpha^ of alpha and beta^ of beta in S^1\n"
     "with beta^ beta alpha alpha^ a mididentity, and a faithful action o of\n"
     "the variant by a.  The rebuilt table m . s = m o (alpha^ s beta^) is\n"
     "an action of S that induces o back exactly when alpha is left and beta\n"
     "right cancellable.  Instances skip with\n"
     "no-inverse-pair-with-mididentity when no such (alpha^, beta^) exists.\n"
     "Instances: S=<id> a=<a> beta=<b> alpha=<al> star=<action>."},
    {"prop-aaa", &detail::run_prop_aaa,
     "Over a regular S, for every factorization a = beta alpha with alpha\n"
     "left and beta right cancellable, the inverse-pair search above cannot\n"
     "fail, and the rebuilt action always lands back on the given faithful\n"
     "action of the variant.\n"
     "Instances: S=<id> a=<a> beta=<b> alpha=<al> star=<action>, regular S\n"
     "and cancellable factorizations only."},
    {"thm-easy", &detail::run_thm_easy,
     "For regular S, the one-sided unit property (every idempotent is a\n"
     "right identity, or every one is a left identity) is equivalent to S\n"
     "factoring as a group times a one-sided zero band.  When S so\n"
     "decomposes, every action of a variant of S arises from an action of S\n"
     "via the group coordinate shift; when some idempotent e is neither a\n"
     "left nor a right identity, no faithful action of the variant by e\n"
     "matches a corpus action of S through m o s = m . (e s) or m . (s e).\n"
     "Instances: S=<id> item=equivalence | construction a=<a> star=<action>\n"
     "| no-unit-form e=<e> star=<action> act=<action>."},
    {"prop-cyclic", &detail::run_prop_cyclic,
     "With the induced action m o s = m . (alpha s beta): it is cyclic\n"
     "exactly when the base action is cyclic, M . beta = M, and the image\n"
     "M . alpha contains a generating point of the base action.\n"
     "Instances: as for thm-faith."},
    {"prop-fact", &detail::run_prop_fact,
     "x -> (b x c) rho is a surjective homomorphism from the variant of S\n"
     "by c b onto b S c mod rho restricted, and its kernel is the transfer\n"
     "of rho, so the variant mod the transfer is isomorphic to b S c mod\n"
     "rho.  Surjectivity, kernel and the homomorphism law are each checked\n"
     "extensionally.\n"
     "Instances: S=<id> rho=<congruence index> b=<b> c=<c>, orders <= 3."},
    {"thm-simple", &detail::run_thm_simple,
     "Transfer of a congruence rho along a sandwich pair (b, c), monoid\n"
     "indices: (1) if b rho is L-related to b1 rho and c rho R-related to\n"
     "c1 rho in (S/rho)^1, the transfers by (b, c) and (b1, c1) coincide;\n"
     "(2) rho is contained in its transfer; (3) the transfer equals rho\n"
     "exactly when b rho is left and c rho right cancellable over S/rho;\n"
     "(4) transfer is monotone, and reflects containment when the sigma\n"
     "side is cancellable.\n"
     "Instances: S=<id> b=<b> c=<c>, with rho, sigma, b1, c1 quantified\n"
     "inside each instance; orders <= 3."},
    {"prop-inverse-r", &detail::run_prop_inverse_r,
     "When S/rho is inverse: the right transfers by b and by c coincide\n"
     "exactly when b rho and c rho are R-related in (S/rho)^1; dually the\n"
     "left transfers coincide exactly under L.  Non-inverse quotients skip\n"
     "with quotient-not-inverse.\n"
     "Instances: S=<id> rho=<congruence index> [b=<b> c=<c>], orders <= 3."},
    {"thm-beautiful", &detail::run_thm_beautiful,
     "The transfer rho -> rho_(b,c) against the congruence lattice:\n"
     "(1) meets are preserved; (2) the join of transfers is contained in\n"
     "the transfer of the join; (3) with b and c regular in S^1 that\n"
     "containment is an equality; (4) with b S c = S the transfer is\n"
     "injective.  Items 2 to 4 sweep orders <= 3; the meet law runs on the\n"
     "full corpus.\n"
     "Instances: S=<id> b=<b> c=<c>, with rho, sigma quantified inside."},
    {"example-semilattice", &detail::run_example_semilattice,
     "Two element semilattice {a, b}, a below b: the transfers of the\n"
     "trivial congruence along (a, a) and (a, b) are both universal on the\n"
     "variant by a, yet a and b are not R-related.  Agreement of transfers\n"
     "does not force the Green hypotheses they follow from.\n"
     "Instance: semilattice2."},
    {"example-rees", &detail::run_example_rees,
     "Seven element example (two generators A, B, their four products, and\n"
     "a zero): the congruences AB ~ BA and AB ~ BB have equal transfers\n"
     "along (B, 1), so the join of the transfers is that same partition,\n"
     "while the transfer of the join also merges A with B.  The join law\n"
     "for transfers is a strict containment here, witnessed by (A, B).\n"
     "Instance: rees7."},
    {"example-bicyclic", &detail::run_example_bicyclic,
     "Bicyclic monoid on a, b with b a = 1: assuming any faithful action\n"
     "extends along the factor pair (alpha, beta) = (a, b) forces 1 = a b\n"
     "at the identity point, a contradiction; and a b, although of the\n"
     "inverse-sandwich form, is not a mididentity.  Searches are bounded by\n"
     "the window.\n"
     "Instance: window=<k>."},
    {"prop-main", &detail::run_prop_main,
     "When S/rho is inverse, with u = b rho, v = c rho and primed unique\n"
     "inverses in (S/rho)^1: the transfer by (b, c) always refines the\n"
     "conjugate transfer by a = c b, and equals it exactly when\n"
     "u x v = (v' v u) x (v u u') for every x in S/rho.  Non-inverse\n"
     "quotients skip with quotient-not-inverse.\n"
     "Instances: S=<id> rho=<congruence index> [b=<b> c=<c>], orders <= 3."},
    {"prop-quotient-a", &detail::run_prop_quotient_a,
     "Candidate mirror of prop-fact for the conjugate transfer: the variant\n"
     "of S by a modulo rho_a, against a S a modulo rho restricted, along\n"
     "x -> (a x a) rho.  Surjectivity, kernel and the homomorphism law are\n"
     "each checked extensionally; a failing instance carries the first\n"
     "broken pair.\n"
     "Instances: S=<id> rho=<congruence index> a=<a>, orders <= 3."},
}};

const ClaimEntry* find_claim(const std::string& id) {
  for (const ClaimEntry& e : kClaims)
    if (id == e.id) return &e;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const ClaimEntry& e : kClaims) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

bool is_claim(const std::string& id) { return find_claim(id) != nullptr; }

std::vector<CheckReport> run_claim(const std::string& id,
                                   const SweepConfig& config) {
  const ClaimEntry* e = find_claim(id);
  if (!e) throw UnknownClaim(id);
  return e->driver(config);
}

std::vector<CheckReport> run_battery(const SweepConfig& config) {
  std::vector<CheckReport> out;
  for (const ClaimEntry& e : kClaims) {
    auto reports = e.driver(config);
    out.insert(out.end(), std::make_move_iterator(reports.begin()),
               std::make_move_iterator(reports.end()));
  }
  return out;
}

std::string explain(const std::string& id) {
  const ClaimEntry* e = find_claim(id);
  if (!e) throw UnknownClaim(id);
  return std::string(e->id) + "\n" + e->about + "\n";
}

}  // namespace varcong
