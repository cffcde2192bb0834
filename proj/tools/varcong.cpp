// Command line front end.  Subcommands mirror the library one to one; every
// record read or written uses the text formats from io.hpp.  Exit codes:
// 0 success / all checks pass, 1 a check or construction failed, 2 usage,
// format or data errors.  Data goes to standard output, everything else to
// standard error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "varcong/bicyclic.hpp"
#include "varcong/congruence.hpp"
#include "varcong/corpus.hpp"
#include "varcong/errors.hpp"
#include "varcong/harness.hpp"
#include "varcong/io.hpp"
#include "varcong/variant.hpp"

namespace {

using namespace varcong;

int cli_workers(long long jobs) {
  if (jobs > 0) return static_cast<int>(jobs);
  if (const char* env = std::getenv("VARCONG_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 16);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(static_cast<int>(hw), 1, 16);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteSemigroup load_semigroup(const std::string& path) {
  return parse_semigroup(read_text(path));
}

element checked_monoid_index(const MonoidView& m, long long u,
                             const std::string& flag) {
  if (u < 0 || u >= m.order())
    throw Error(flag + " out of range: expected 0.." +
                std::to_string(m.order() - 1) + ", got " + std::to_string(u));
  return static_cast<element>(u);
}

struct CheckOptions {
  bool all = false;
  std::string claim;
  bool json = false;
  SweepConfig config;
};

int run_check(const CheckOptions& opt) {
  if (opt.all == !opt.claim.empty())
    throw Error("check needs exactly one of --all or --claim <id>");
  std::vector<CheckReport> reports = opt.all
                                         ? run_battery(opt.config)
                                         : run_claim(opt.claim, opt.config);
  size_t passed = 0, failed = 0, skipped = 0;
  for (const CheckReport& r : reports) {
    switch (r.verdict) {
      case Verdict::pass: ++passed; break;
      case Verdict::fail: ++failed; break;
      case Verdict::skipped: ++skipped; break;
    }
    if (opt.json)
      std::cout << json_line(r) << "\n";
    else
      std::cout << verdict_string(r) << " " << r.claim << " " << r.instance
                << "\n";
  }
  std::cerr << reports.size() << " reports: " << passed << " pass, " << failed
            << " fail, " << skipped << " skipped\n";
  return failed == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"finite semigroup variants, induced actions, and sandwich "
               "congruence transfers"};
  app.require_subcommand(1);

  // validate <semigroup>
  std::string va_path;
  CLI::App* va = app.add_subcommand(
      "validate", "parse a semigroup record and re-emit it canonically");
  va->add_option("semigroup", va_path, "semigroup record file, - for stdin")
      ->required();

  // variant <semigroup> --a
  std::string vr_path;
  long long vr_a = 0;
  CLI::App* vr =
      app.add_subcommand("variant", "multiplication twisted to s a t");
  vr->add_option("semigroup", vr_path)->required();
  vr->add_option("--a", vr_a, "sandwich element")->required();

  // induce <semigroup> <action> --a --alpha --beta
  std::string in_sg, in_act;
  long long in_a = 0, in_alpha = 0, in_beta = 0;
  CLI::App* ind = app.add_subcommand(
      "induce", "action of the variant by a = beta alpha: m o s = m . "
                "(alpha s beta)");
  ind->add_option("semigroup", in_sg)->required();
  ind->add_option("action", in_act)->required();
  ind->add_option("--a", in_a, "sandwich element")->required();
  ind->add_option("--alpha", in_alpha, "right factor (monoid index)")
      ->required();
  ind->add_option("--beta", in_beta, "left factor (monoid index)")->required();

  // faithful <semigroup> <action>
  std::string ff_sg, ff_act;
  CLI::App* ff = app.add_subcommand(
      "faithful", "report faithful, or the first collapsing pair");
  ff->add_option("semigroup", ff_sg)->required();
  ff->add_option("action", ff_act)->required();

  // kernel <semigroup> <action>
  std::string ke_sg, ke_act;
  CLI::App* ke = app.add_subcommand(
      "kernel", "congruence relating elements that act identically");
  ke->add_option("semigroup", ke_sg)->required();
  ke->add_option("action", ke_act)->required();

  // cyclic <semigroup> <action>
  std::string cy_sg, cy_act;
  CLI::App* cy =
      app.add_subcommand("cyclic", "cyclicity and the generating points");
  cy->add_option("semigroup", cy_sg)->required();
  cy->add_option("action", cy_act)->required();

  // reconstruct <semigroup> <star-action> --alpha --beta --alpha-star --beta-star
  std::string rc_sg, rc_act;
  long long rc_alpha = 0, rc_beta = 0, rc_astar = 0, rc_bstar = 0;
  CLI::App* rc = app.add_subcommand(
      "reconstruct", "rebuild a base action from an action of the variant by "
                     "beta alpha via m . s = m o (alpha^ s beta^)");
  rc->add_option("semigroup", rc_sg)->required();
  rc->add_option("star-action", rc_act, "action of the variant")->required();
  rc->add_option("--alpha", rc_alpha)->required();
  rc->add_option("--beta", rc_beta)->required();
  rc->add_option("--alpha-star", rc_astar, "inverse of alpha in S^1")
      ->required();
  rc->add_option("--beta-star", rc_bstar, "inverse of beta in S^1")
      ->required();

  // closure <semigroup> <pairs...>
  std::string cl_sg;
  std::vector<long long> cl_pairs;
  CLI::App* cl = app.add_subcommand(
      "closure", "least congruence containing the given element pairs");
  cl->add_option("semigroup", cl_sg)->required();
  cl->add_option("pairs", cl_pairs, "flat list: s1 t1 s2 t2 ...");

  // meet / join <semigroup> <cong> <cong>
  std::string mt_sg, mt_c1, mt_c2, jn_sg, jn_c1, jn_c2;
  CLI::App* mt = app.add_subcommand("meet", "class intersection");
  mt->add_option("semigroup", mt_sg)->required();
  mt->add_option("cong1", mt_c1)->required();
  mt->add_option("cong2", mt_c2)->required();
  CLI::App* jn =
      app.add_subcommand("join", "least congruence containing both");
  jn->add_option("semigroup", jn_sg)->required();
  jn->add_option("cong1", jn_c1)->required();
  jn->add_option("cong2", jn_c2)->required();

  // rho-bc <semigroup> <cong> --b --c
  std::string rb_sg, rb_c;
  long long rb_b = 0, rb_cc = 0;
  CLI::App* rb = app.add_subcommand(
      "rho-bc", "transfer along (b, c): s ~ t iff b s c ~ b t c; a "
                "congruence of the variant by c b");
  rb->add_option("semigroup", rb_sg)->required();
  rb->add_option("congruence", rb_c)->required();
  rb->add_option("--b", rb_b, "left sandwich (monoid index)")->required();
  rb->add_option("--c", rb_cc, "right sandwich (monoid index)")->required();

  // rho-a <semigroup> <cong> --a
  std::string ra_sg, ra_c;
  long long ra_a = 0;
  CLI::App* ra = app.add_subcommand(
      "rho-a", "conjugate transfer: s ~ t iff a s a ~ a t a; a congruence "
               "of the variant by a");
  ra->add_option("semigroup", ra_sg)->required();
  ra->add_option("congruence", ra_c)->required();
  ra->add_option("--a", ra_a, "sandwich element (monoid index)")->required();

  // quotient <semigroup> <cong>
  std::string qt_sg, qt_c;
  CLI::App* qt = app.add_subcommand("quotient", "S modulo a congruence");
  qt->add_option("semigroup", qt_sg)->required();
  qt->add_option("congruence", qt_c)->required();

  // cong-all <semigroup>
  std::string ca_sg;
  CLI::App* ca = app.add_subcommand(
      "cong-all", "every congruence, universal first, identity last");
  ca->add_option("semigroup", ca_sg)->required();

  // corpus enumerate --order N [--allow-large] [--jobs J] | corpus examples
  CLI::App* co = app.add_subcommand("corpus", "semigroup inventories");
  co->require_subcommand(1);
  long long co_order = 0, co_jobs = 0;
  bool co_large = false;
  CLI::App* coe = co->add_subcommand(
      "enumerate", "all semigroups of one order, up to isomorphism");
  coe->add_option("--order", co_order, "1..4, or 5 with --allow-large")
      ->required();
  coe->add_flag("--allow-large", co_large, "permit the slow order 5 run");
  coe->add_option("--jobs", co_jobs, "worker threads (0 = auto)");
  CLI::App* cox = co->add_subcommand("examples", "the named fixtures");

  // bicyclic verify-example1 [--window K]
  CLI::App* bi = app.add_subcommand("bicyclic", "symbolic bicyclic monoid");
  bi->require_subcommand(1);
  long long bi_window = 4;
  CLI::App* bie = bi->add_subcommand(
      "verify-example1",
      "replay the no-induced-back derivation and the mididentity failure");
  bie->add_option("--window", bi_window, "search bound on exponents");

  // check --all | --claim <id> [--max-order N] [--json] [--jobs J] [--window K]
  CheckOptions ck;
  long long ck_max = 4, ck_jobs = 0, ck_window = 4;
  CLI::App* chk =
      app.add_subcommand("check", "run claim sweeps over the corpus");
  chk->add_flag("--all", ck.all, "every claim in battery order");
  chk->add_option("--claim", ck.claim, "a single claim id");
  chk->add_option("--max-order", ck_max, "corpus bound (default 4)");
  chk->add_flag("--json", ck.json, "one JSON object per report line");
  chk->add_option("--jobs", ck_jobs, "worker threads (0 = auto)");
  chk->add_option("--window", ck_window, "bicyclic search bound");

  // explain <id>
  std::string ex_id;
  CLI::App* ex =
      app.add_subcommand("explain", "what a claim id asserts and sweeps");
  ex->add_option("claim", ex_id)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  if (va->parsed()) {
    std::cout << emit(load_semigroup(va_path));
    return 0;
  }
  if (vr->parsed()) {
    FiniteSemigroup s = load_semigroup(vr_path);
    MonoidView m(s);
    std::cout << emit(variant(m, checked_monoid_index(m, vr_a, "--a")).star);
    return 0;
  }
  if (ind->parsed()) {
    FiniteSemigroup s = load_semigroup(in_sg);
    Action base = parse_action(read_text(in_act), s);
    MonoidView m(s);
    InducedAction ia =
        induced(base, m, checked_monoid_index(m, in_a, "--a"),
                checked_monoid_index(m, in_alpha, "--alpha"),
                checked_monoid_index(m, in_beta, "--beta"));
    std::cout << emit(ia.star);
    return 0;
  }
  if (ff->parsed()) {
    FiniteSemigroup s = load_semigroup(ff_sg);
    Action a = parse_action(read_text(ff_act), s);
    if (auto w = unfaithful_witness(a))
      std::cout << "unfaithful " << w->first << " " << w->second << "\n";
    else
      std::cout << "faithful\n";
    return 0;
  }
  if (ke->parsed()) {
    FiniteSemigroup s = load_semigroup(ke_sg);
    Action a = parse_action(read_text(ke_act), s);
    std::cout << emit(kernel_congruence(a));
    return 0;
  }
  if (cy->parsed()) {
    FiniteSemigroup s = load_semigroup(cy_sg);
    Action a = parse_action(read_text(cy_act), s);
    std::cout << (is_cyclic(a) ? "cyclic" : "not-cyclic") << "\n";
    std::cout << "generating-points:";
    for (int p : generating_points(a)) std::cout << " " << p;
    std::cout << "\n";
    return 0;
  }
  if (rc->parsed()) {
    FiniteSemigroup s = load_semigroup(rc_sg);
    MonoidView m(s);
    element alpha = checked_monoid_index(m, rc_alpha, "--alpha");
    element beta = checked_monoid_index(m, rc_beta, "--beta");
    Variant v = variant(m, m.product(beta, alpha));
    Action star = parse_action(read_text(rc_act), v.star);
    Reconstruction r = reconstruct_action(
        m, star, alpha, beta, checked_monoid_index(m, rc_astar, "--alpha-star"),
        checked_monoid_index(m, rc_bstar, "--beta-star"));
    if (r.ok()) {
      std::cout << emit(*r.action);
      return 0;
    }
    if (r.axiom_fail)
      std::cerr << "rebuilt table is not an action: point " << r.axiom_fail->m
                << " under " << r.axiom_fail->s << " then " << r.axiom_fail->t
                << "\n";
    else
      std::cerr << "rebuilt action does not induce the given one back: point "
                << r.induce_fail->first << " under " << r.induce_fail->second
                << "\n";
    return 1;
  }
  if (cl->parsed()) {
    FiniteSemigroup s = load_semigroup(cl_sg);
    if (cl_pairs.size() % 2 != 0)
      throw Error("closure pairs come in twos, got " +
                  std::to_string(cl_pairs.size()) + " values");
    std::vector<std::pair<element, element>> pairs;
    for (size_t i = 0; i < cl_pairs.size(); i += 2) {
      for (long long v : {cl_pairs[i], cl_pairs[i + 1]})
        if (v < 0 || v >= s.order())
          throw Error("pair element out of range: " + std::to_string(v));
      pairs.emplace_back(static_cast<element>(cl_pairs[i]),
                         static_cast<element>(cl_pairs[i + 1]));
    }
    std::cout << emit(congruence_closure(s, pairs));
    return 0;
  }
  if (mt->parsed() || jn->parsed()) {
    const bool is_meet = mt->parsed();
    FiniteSemigroup s = load_semigroup(is_meet ? mt_sg : jn_sg);
    Congruence c1 = parse_congruence(read_text(is_meet ? mt_c1 : jn_c1), s);
    Congruence c2 = parse_congruence(read_text(is_meet ? mt_c2 : jn_c2), s);
    std::cout << emit(is_meet ? meet(c1, c2) : join(c1, c2));
    return 0;
  }
  if (rb->parsed()) {
    FiniteSemigroup s = load_semigroup(rb_sg);
    MonoidView m(s);
    Congruence rho = parse_congruence(read_text(rb_c), s);
    std::cout << emit(rho_bc(rho, m, checked_monoid_index(m, rb_b, "--b"),
                             checked_monoid_index(m, rb_cc, "--c")));
    return 0;
  }
  if (ra->parsed()) {
    FiniteSemigroup s = load_semigroup(ra_sg);
    MonoidView m(s);
    Congruence rho = parse_congruence(read_text(ra_c), s);
    std::cout << emit(rho_a(rho, m, checked_monoid_index(m, ra_a, "--a")));
    return 0;
  }
  if (qt->parsed()) {
    FiniteSemigroup s = load_semigroup(qt_sg);
    Congruence rho = parse_congruence(read_text(qt_c), s);
    std::cout << emit(quotient(s, rho).quotient);
    return 0;
  }
  if (ca->parsed()) {
    FiniteSemigroup s = load_semigroup(ca_sg);
    auto congs = all_congruences(s);
    for (size_t i = 0; i < congs.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << emit(congs[i]);
    }
    return 0;
  }
  if (coe->parsed()) {
    if (co_order == 5 && !co_large)
      throw Error("order 5 enumeration takes a while; pass --allow-large");
    auto sgs = enumerate_semigroups(static_cast<int>(co_order),
                                    cli_workers(co_jobs));
    for (size_t i = 0; i < sgs.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << emit(sgs[i]);
    }
    std::cerr << sgs.size() << " semigroups of order " << co_order << "\n";
    return 0;
  }
  if (cox->parsed()) {
    auto ex_list = named_examples();
    for (size_t i = 0; i < ex_list.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << emit(ex_list[i].sg);
    }
    return 0;
  }
  if (bie->parsed()) {
    if (bi_window < 2) throw Error("--window must be at least 2");
    CheckReport r = verify_example1(static_cast<int>(bi_window));
    for (const std::string& line : r.detail) std::cout << line << "\n";
    return r.verdict == Verdict::pass ? 0 : 1;
  }
  if (chk->parsed()) {
    if (ck_max < 1 || ck_max > 5)
      throw Error("--max-order must be between 1 and 5");
    if (ck_window < 2) throw Error("--window must be at least 2");
    ck.config.max_order = static_cast<int>(ck_max);
    ck.config.window = static_cast<int>(ck_window);
    ck.config.workers = static_cast<int>(ck_jobs);
    return run_check(ck);
  }
  if (ex->parsed()) {
    std::cout << explain(ex_id);
    return 0;
  }
  return 0;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const varcong::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
