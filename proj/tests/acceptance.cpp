// Acceptance battery: ten criteria, one verdict line each on standard
// output, details on standard error.  Exit status is the number of failed
// criteria, so a clean run exits 0.
//
// Criterion 6 is expected to stay red: the conjugate-transfer quotient map
// x -> (a x a) rho is checked faithfully and has verified counterexamples
// (smallest: the two-element group).  See the prop-quotient-a witnesses.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "varcong/action.hpp"
#include "varcong/bicyclic.hpp"
#include "varcong/congruence.hpp"
#include "varcong/corpus.hpp"
#include "varcong/harness.hpp"
#include "varcong/io.hpp"
#include "varcong/variant.hpp"

using namespace varcong;
using Clock = std::chrono::steady_clock;

namespace {

int failed_criteria = 0;

void verdict(int n, const std::string& what, bool ok) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what
            << "\n";
  if (!ok) ++failed_criteria;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool under_budget(int n, double elapsed_ms, double budget_ms) {
  if (elapsed_ms <= budget_ms) return true;
  std::cerr << "criterion " << n << ": over budget, " << elapsed_ms
            << " ms > " << budget_ms << " ms\n";
  return false;
}

struct ClaimStats {
  size_t pass = 0, fail = 0, skipped = 0;
  std::string first_fail_instance;
};

ClaimStats run_and_count(const std::string& id, int max_order) {
  SweepConfig cfg;
  cfg.max_order = max_order;
  ClaimStats st;
  for (const CheckReport& r : run_claim(id, cfg)) {
    switch (r.verdict) {
      case Verdict::pass: ++st.pass; break;
      case Verdict::skipped: ++st.skipped; break;
      case Verdict::fail:
        if (st.fail == 0) st.first_fail_instance = r.instance;
        ++st.fail;
        break;
    }
  }
  return st;
}

void report_stats(const std::string& id, const ClaimStats& st) {
  std::cerr << "  " << id << ": " << st.pass << " pass, " << st.fail
            << " fail, " << st.skipped << " skipped";
  if (st.fail) std::cerr << "; first failure at " << st.first_fail_instance;
  std::cerr << "\n";
}

// 1. Two-element semilattice: equal universal transfers without the Green
// relation that would explain them.
void criterion1() {
  CorpusEntry e = semilattice_example();
  auto t0 = Clock::now();
  MonoidView m(e.sg);
  Congruence iota = identity_congruence(e.sg);
  Congruence t_aa = rho_bc(iota, m, 0, 0);
  Congruence t_ab = rho_bc(iota, m, 0, 1);
  bool ok = t_aa == t_ab && t_aa.num_classes() == 1 &&
            t_ab.num_classes() == 1 && !green_R_related(m, 0, 1);
  double elapsed = ms_since(t0);
  std::cerr << "criterion 1: transfers " << emit(t_aa) << "  in " << elapsed
            << " ms\n";
  ok = under_budget(1, elapsed, 1.0) && ok;
  verdict(1, "equal universal transfers on the 2-element semilattice, "
             "a and b not R-related", ok);
}

// 2. Seven-element example: the join of transfers is strictly finer than
// the transfer of the join, split exactly at (a, b).
void criterion2() {
  CorpusEntry e = rees_example();
  auto t0 = Clock::now();
  MonoidView m(e.sg);
  const element b = 1, c = m.one();
  Congruence rho = congruence_closure(e.sg, {{3, 4}});
  Congruence sigma = congruence_closure(e.sg, {{3, 5}});
  Congruence t_rho = rho_bc(rho, m, b, c);
  Congruence t_sigma = rho_bc(sigma, m, b, c);
  Congruence t_join = rho_bc(join(rho, sigma), m, b, c);
  Congruence join_t = join(t_rho, t_sigma);

  // kernel of s -> b s, computed directly; the constructor normalizes labels
  std::vector<int> by_image(e.sg.order());
  for (element s = 0; s < e.sg.order(); ++s)
    by_image[s] = e.sg.product(b, s);
  Congruence kernel_b(variant(m, m.product(c, b)).star, by_image);

  bool ok = same_partition(t_rho, t_sigma) &&
            same_partition(t_rho, kernel_b) && t_join.same(0, 1) &&
            !join_t.same(0, 1) && refines(join_t, t_join) &&
            !same_partition(join_t, t_join);
  double elapsed = ms_since(t0);
  std::cerr << "criterion 2: transfer of rho = transfer of sigma = kernel of "
               "s -> b s: "
            << emit(t_rho) << "  transfer of the join: " << emit(t_join)
            << "  in " << elapsed << " ms\n";
  ok = under_budget(2, elapsed, 10.0) && ok;
  verdict(2, "join transfer strictly coarser than joined transfers on the "
             "7-element example, split at (a, b)", ok);
}

// 3. Bicyclic replay: the chain ends in 1 = a b, which is false.
void criterion3() {
  auto t0 = Clock::now();
  CheckReport r = verify_example1(4);
  double elapsed = ms_since(t0);
  bool chain = false, nonident = false;
  for (const std::string& line : r.detail) {
    chain = chain || line.find("1 = 1 o (a b)") != std::string::npos;
    nonident = nonident || line.find("a b = a b, not 1") != std::string::npos;
  }
  for (const std::string& line : r.detail) std::cerr << "  " << line << "\n";
  bool ok = r.verdict == Verdict::pass && chain && nonident;
  ok = under_budget(3, elapsed, 1.0) && ok;

  auto sub = cli::run({"bicyclic", "verify-example1"});
  ok = ok && sub.exit_code == 0 &&
       sub.out.find("1 = 1 o (a b)") != std::string::npos;
  verdict(3, "bicyclic derivation chain forces the false identity 1 = a b",
          ok);
}

// 4. Faithfulness equivalence across the full order-4 sweep.
void criterion4() {
  auto t0 = Clock::now();
  ClaimStats st = run_and_count("thm-faith", 4);
  double elapsed = ms_since(t0);
  report_stats("thm-faith", st);
  bool ok = st.fail == 0 && st.pass > 0 &&
            under_budget(4, elapsed, 5 * 60 * 1000.0);
  verdict(4, "induced faithful iff base faithful and factors cancellable, "
             "full corpus sweep", ok);
}

// 5. Transfer laws and lattice laws, full sweeps; strictness of the join
// containment witnessed by the 7-element example.
void criterion5() {
  auto t0 = Clock::now();
  ClaimStats simple = run_and_count("thm-simple", 4);
  ClaimStats beautiful = run_and_count("thm-beautiful", 4);
  double elapsed = ms_since(t0);
  report_stats("thm-simple", simple);
  report_stats("thm-beautiful", beautiful);

  // strictness recheck, straight from the example
  CorpusEntry e = rees_example();
  MonoidView m(e.sg);
  Congruence rho = congruence_closure(e.sg, {{3, 4}});
  Congruence sigma = congruence_closure(e.sg, {{3, 5}});
  Congruence lhs = join(rho_bc(rho, m, 1, m.one()),
                        rho_bc(sigma, m, 1, m.one()));
  Congruence rhs = rho_bc(join(rho, sigma), m, 1, m.one());
  bool strict = refines(lhs, rhs) && !same_partition(lhs, rhs);

  bool ok = simple.fail == 0 && simple.pass > 0 && beautiful.fail == 0 &&
            beautiful.pass > 0 && strict &&
            under_budget(5, elapsed, 10 * 60 * 1000.0);
  verdict(5, "transfer laws and lattice laws hold across the sweep; join "
             "containment strict at least once", ok);
}

// 6. The two quotient isomorphism checks.  The (b, c) map passes
// everywhere; the (a, a) conjugate map does not, and the red half is
// reported honestly rather than papered over.
void criterion6() {
  ClaimStats fact = run_and_count("prop-fact", 3);
  ClaimStats conj = run_and_count("prop-quotient-a", 3);
  report_stats("prop-fact", fact);
  report_stats("prop-quotient-a", conj);
  if (conj.fail)
    std::cerr << "  the conjugate map x -> (a x a) rho is not a homomorphism "
                 "in general; smallest counterexample above\n";
  bool ok = fact.fail == 0 && fact.pass > 0 && conj.fail == 0 && conj.pass > 0;
  verdict(6, "both quotient maps verified surjective homomorphisms with the "
             "stated kernels on all small instances", ok);
}

// 7. One-sided unit equivalence, and every returned decomposition passes an
// independent product-table isomorphism re-check.
void criterion7() {
  ClaimStats easy = run_and_count("thm-easy", 4);
  report_stats("thm-easy", easy);

  size_t decomposed = 0, recheck_failures = 0;
  for (const CorpusEntry& e : corpus_up_to(4)) {
    if (!is_regular(e.sg)) continue;
    auto d = left_right_group_decompose(e.sg);
    if (!d) continue;
    ++decomposed;
    const FiniteSemigroup& g = d->group.sub();
    const FiniteSemigroup& u = d->zero_part.sub();
    const int gk = g.order(), uk = u.order();
    bool good = is_group(g) && gk * uk == e.sg.order();
    // the band must be one-sided zero on the matching side
    for (element x = 0; x < uk; ++x)
      for (element y = 0; y < uk; ++y)
        good = good && u.product(x, y) == (d->side == GroupSide::left ? x : y);
    // factor map is a bijective homomorphism onto the direct product
    std::vector<int> seen(e.sg.order(), 0);
    for (element s = 0; s < e.sg.order(); ++s) {
      auto [gi, ui] = d->factor_of[s];
      size_t slot = static_cast<size_t>(gi) * uk + ui;
      good = good && gi >= 0 && gi < gk && ui >= 0 && ui < uk &&
             d->element_of[slot] == s;
      ++seen[slot];
    }
    for (int cnt : seen) good = good && cnt == 1;
    for (element s = 0; s < e.sg.order(); ++s)
      for (element t = 0; t < e.sg.order(); ++t) {
        auto [gs, us] = d->factor_of[s];
        auto [gt, ut] = d->factor_of[t];
        auto [gp, up] = d->factor_of[e.sg.product(s, t)];
        good = good && gp == g.product(gs, gt) && up == u.product(us, ut);
      }
    if (!good) {
      ++recheck_failures;
      std::cerr << "  decomposition recheck failed on " << e.id << "\n";
    }
  }
  std::cerr << "  " << decomposed << " decompositions re-verified, "
            << recheck_failures << " failures\n";
  bool ok = easy.fail == 0 && easy.pass > 0 && decomposed > 0 &&
            recheck_failures == 0;
  verdict(7, "one-sided unit property equivalent to group x one-sided-zero "
             "factorization; factorizations re-verified independently", ok);
}

// 8. Enumeration counts, against the independent naive filter where
// feasible, and reproducible across runs and worker counts.
void criterion8() {
  auto t0 = Clock::now();
  const std::vector<size_t> expect = {1, 5, 24, 188};
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    auto sgs = enumerate_semigroups(n);
    if (sgs.size() != expect[n - 1]) {
      std::cerr << "  order " << n << ": got " << sgs.size() << ", expected "
                << expect[n - 1] << "\n";
      ok = false;
    }
    if (n <= 3) {
      auto naive = oracles::all_semigroups_naive(n);
      bool same = naive.size() == sgs.size();
      for (size_t i = 0; same && i < naive.size(); ++i)
        same = naive[i] == sgs[i].table();
      if (!same) {
        std::cerr << "  order " << n << ": differs from naive filter\n";
        ok = false;
      }
    }
  }
  auto once = enumerate_semigroups(4, 1);
  auto twice = enumerate_semigroups(4, 1);
  auto wide = enumerate_semigroups(4, 3);
  bool stable = once.size() == twice.size() && once.size() == wide.size();
  for (size_t i = 0; stable && i < once.size(); ++i)
    stable = once[i] == twice[i] && once[i] == wide[i];
  if (!stable) {
    std::cerr << "  order 4 enumeration unstable across runs or workers\n";
    ok = false;
  }
  double elapsed = ms_since(t0);
  std::cerr << "criterion 8: " << elapsed << " ms\n";
  ok = under_budget(8, elapsed, 2 * 60 * 1000.0) && ok;
  verdict(8, "enumeration counts 1, 5, 24, 188, equal to the naive filter "
             "where feasible, stable under reruns and workers", ok);
}

// 9. Cross-implementation oracles: join vs sweep closure, transfer of a
// kernel vs kernel of the induced action, closed-form bicyclic product vs
// string rewriting.
void criterion9() {
  bool ok = true;

  for (const CorpusEntry& e : corpus_up_to(3)) {
    auto congs = all_congruences(e.sg);
    for (const Congruence& a : congs)
      for (const Congruence& b : congs)
        if (join(a, b).class_of() !=
            oracles::partition_join(a.class_of(), b.class_of())) {
          std::cerr << "  join oracle mismatch on " << e.id << "\n";
          ok = false;
        }
  }

  // every valid action of degree <= 2 plus the Cayley action
  size_t kernel_checked = 0;
  for (const CorpusEntry& e : corpus_up_to(3)) {
    MonoidView m(e.sg);
    std::vector<Action> actions;
    actions.push_back(cayley_action(m));
    for (int degree = 1; degree <= 2; ++degree) {
      std::vector<int> t(static_cast<size_t>(degree) * e.sg.order(), 0);
      for (;;) {
        if (!validate_action_table(e.sg, degree, t))
          actions.emplace_back(e.sg, degree, t);
        size_t i = 0;
        while (i < t.size() && t[i] == degree - 1) t[i++] = 0;
        if (i == t.size()) break;
        ++t[i];
      }
    }
    for (const Action& act : actions)
      for (element b = 0; b < m.order(); ++b)
        for (element c = 0; c < m.order(); ++c) {
          Congruence lhs = rho_bc(kernel_congruence(act), m, b, c);
          InducedAction ia = induced(act, m, m.product(c, b), b, c);
          Congruence rhs = kernel_congruence(ia.star);
          ++kernel_checked;
          if (!same_partition(lhs, rhs)) {
            std::cerr << "  kernel transfer mismatch on " << e.id << " b=" << b
                      << " c=" << c << "\n";
            ok = false;
          }
        }
  }
  std::cerr << "criterion 9: " << kernel_checked
            << " kernel-transfer instances\n";

  for (int i = 0; i < 4 && ok; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          BicyclicElement x{i, j}, y{k, l};
          if (!(bmul(x, y) == oracles::bicyclic_rewrite(x, y))) {
            std::cerr << "  bicyclic oracle mismatch at " << to_string(x)
                      << " * " << to_string(y) << "\n";
            ok = false;
          }
        }

  verdict(9, "join, kernel-transfer, and bicyclic products equal their "
             "independent oracles", ok);
}

// 10. Byte-identical machine output across two full runs of the binary.
void criterion10() {
  auto first = cli::run({"check", "--all", "--json"});
  auto second = cli::run({"check", "--all", "--json"});
  bool ok = first.exit_code == second.exit_code && first.out == second.out &&
            !first.out.empty();
  std::cerr << "criterion 10: " << first.out.size() << " bytes per run, exit "
            << first.exit_code << "\n";
  verdict(10, "two check --all --json runs byte-identical", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (10 - failed_criteria) << "/10 criteria passed\n";
  if (failed_criteria)
    std::cout << "expected red: criterion 6 stays open; the conjugate "
                 "quotient map has verified counterexamples\n";
  return failed_criteria;
}
