#include <algorithm>

#include "claims.hpp"
#include "varcong/checks.hpp"

namespace varcong::detail {

namespace {

constexpr int kCongruenceOrderCap = 3;

int cong_cap(const SweepConfig& config) {
  return std::min(kCongruenceOrderCap, config.max_order);
}

std::string cong_inst(const std::string& sid, int rho_index) {
  return "S=" + sid + " rho=" + std::to_string(rho_index);
}

}  // namespace

std::vector<CheckReport> run_prop_fact(const SweepConfig& config) {
  auto entries = entries_up_to(cong_cap(config), resolve_workers(config));
  return sweep_entries(
      entries, resolve_workers(config), [](const CorpusEntry& e) {
        std::vector<CheckReport> out;
        MonoidView m(e.sg);
        auto congs = all_congruences(e.sg);
        for (size_t i = 0; i < congs.size(); ++i)
          for (element b = 0; b < m.order(); ++b)
            for (element c = 0; c < m.order(); ++c) {
              CheckReport r = check_quotient_isomorphism_bc(congs[i], m, b, c);
              r.instance = cong_inst(e.id, static_cast<int>(i)) +
                           " b=" + std::to_string(b) +
                           " c=" + std::to_string(c);
              out.push_back(std::move(r));
            }
        return out;
      });
}

std::vector<CheckReport> run_thm_simple(const SweepConfig& config) {
  auto entries = entries_up_to(cong_cap(config), resolve_workers(config));
  return sweep_entries(
      entries, resolve_workers(config), [](const CorpusEntry& e) {
        std::vector<CheckReport> out;
        MonoidView m(e.sg);
        auto congs = all_congruences(e.sg);
        for (element b = 0; b < m.order(); ++b)
          for (element c = 0; c < m.order(); ++c) {
            // One report per (S, b, c); rho, sigma and the comparison pair
            // (b1, c1) are quantified inside.
            std::optional<nlohmann::ordered_json> first_fail;
            int fails = 0;
            for (size_t i = 0; i < congs.size(); ++i)
              for (size_t j = 0; j < congs.size(); ++j)
                for (element b1 = 0; b1 < m.order(); ++b1)
                  for (element c1 = 0; c1 < m.order(); ++c1) {
                    CheckReport r = check_simple_theorem(congs[i], congs[j], m,
                                                         b, c, b1, c1);
                    if (r.verdict == Verdict::pass) continue;
                    ++fails;
                    if (!first_fail) {
                      nlohmann::ordered_json w;
                      w["rho"] = i;
                      w["sigma"] = j;
                      w["b1"] = b1;
                      w["c1"] = c1;
                      w["inner"] = std::move(r.witness);
                      first_fail = std::move(w);
                    }
                  }
            std::string inst = "S=" + e.id + " b=" + std::to_string(b) +
                               " c=" + std::to_string(c);
            if (!first_fail) {
              out.push_back(pass_report("thm-simple", inst));
            } else {
              (*first_fail)["failing_tuples"] = fails;
              out.push_back(
                  fail_report("thm-simple", inst, std::move(*first_fail)));
            }
          }
        return out;
      });
}

std::vector<CheckReport> run_prop_inverse_r(const SweepConfig& config) {
  auto entries = entries_up_to(cong_cap(config), resolve_workers(config));
  return sweep_entries(
      entries, resolve_workers(config), [](const CorpusEntry& e) {
        std::vector<CheckReport> out;
        MonoidView m(e.sg);
        auto congs = all_congruences(e.sg);
        for (size_t i = 0; i < congs.size(); ++i) {
          if (!is_inverse_semigroup(quotient(e.sg, congs[i]).quotient)) {
            out.push_back(skip_report("prop-inverse-r",
                                      cong_inst(e.id, static_cast<int>(i)),
                                      "quotient-not-inverse"));
            continue;
          }
          for (element b = 0; b < m.order(); ++b)
            for (element c = 0; c < m.order(); ++c) {
              CheckReport r = check_inverse_R_proposition(congs[i], m, b, c);
              r.instance = cong_inst(e.id, static_cast<int>(i)) +
                           " b=" + std::to_string(b) +
                           " c=" + std::to_string(c);
              out.push_back(std::move(r));
            }
        }
        return out;
      });
}

std::vector<CheckReport> run_thm_beautiful(const SweepConfig& config) {
  auto entries = entries_up_to(config.max_order, resolve_workers(config));
  return sweep_entries(
      entries, resolve_workers(config), [](const CorpusEntry& e) {
        std::vector<CheckReport> out;
        MonoidView m(e.sg);
        auto congs = all_congruences(e.sg);
        const bool full = e.sg.order() <= kCongruenceOrderCap;
        for (element b = 0; b < m.order(); ++b)
          for (element c = 0; c < m.order(); ++c) {
            std::optional<nlohmann::ordered_json> first_fail;
            int fails = 0;
            for (size_t i = 0; i < congs.size(); ++i)
              for (size_t j = 0; j < congs.size(); ++j) {
                std::optional<nlohmann::ordered_json> bad;
                if (full) {
                  CheckReport r =
                      check_beautiful_theorem(congs[i], congs[j], m, b, c);
                  if (r.verdict != Verdict::pass) bad = std::move(r.witness);
                } else {
                  // Above the congruence sweep cap only the meet law is
                  // exercised; it is the one item that stays cheap.
                  Congruence lhs = rho_bc(meet(congs[i], congs[j]), m, b, c);
                  Congruence rhs =
                      meet(rho_bc(congs[i], m, b, c), rho_bc(congs[j], m, b, c));
                  if (lhs != rhs) {
                    nlohmann::ordered_json w;
                    w["items"] = nlohmann::ordered_json::array({"meet"});
                    bad = std::move(w);
                  }
                }
                if (!bad) continue;
                ++fails;
                if (!first_fail) {
                  nlohmann::ordered_json w;
                  w["rho"] = i;
                  w["sigma"] = j;
                  w["inner"] = std::move(*bad);
                  first_fail = std::move(w);
                }
              }
            std::string inst = "S=" + e.id + " b=" + std::to_string(b) +
                               " c=" + std::to_string(c);
            if (!first_fail) {
              out.push_back(pass_report("thm-beautiful", inst));
            } else {
              (*first_fail)["failing_tuples"] = fails;
              out.push_back(
                  fail_report("thm-beautiful", inst, std::move(*first_fail)));
            }
          }
        return out;
      });
}

std::vector<CheckReport> run_prop_main(const SweepConfig& config) {
  auto entries = entries_up_to(cong_cap(config), resolve_workers(config));
  return sweep_entries(
      entries, resolve_workers(config), [](const CorpusEntry& e) {
        std::vector<CheckReport> out;
        MonoidView m(e.sg);
        auto congs = all_congruences(e.sg);
        for (size_t i = 0; i < congs.size(); ++i) {
          if (!is_inverse_semigroup(quotient(e.sg, congs[i]).quotient)) {
            out.push_back(skip_report("prop-main",
                                      cong_inst(e.id, static_cast<int>(i)),
                                      "quotient-not-inverse"));
            continue;
          }
          for (element b = 0; b < m.order(); ++b)
            for (element c = 0; c < m.order(); ++c) {
              CheckReport r = check_main_equation_proposition(congs[i], m, b, c);
              r.instance = cong_inst(e.id, static_cast<int>(i)) +
                           " b=" + std::to_string(b) +
                           " c=" + std::to_string(c);
              out.push_back(std::move(r));
            }
        }
        return out;
      });
}

std::vector<CheckReport> run_prop_quotient_a(const SweepConfig& config) {
  auto entries = entries_up_to(cong_cap(config), resolve_workers(config));
  return sweep_entries(
      entries, resolve_workers(config), [](const CorpusEntry& e) {
        std::vector<CheckReport> out;
        MonoidView m(e.sg);
        auto congs = all_congruences(e.sg);
        for (size_t i = 0; i < congs.size(); ++i)
          for (element a = 0; a < m.order(); ++a) {
            CheckReport r = check_quotient_isomorphism_a(congs[i], m, a);
            r.instance = cong_inst(e.id, static_cast<int>(i)) +
                         " a=" + std::to_string(a);
            out.push_back(std::move(r));
          }
        return out;
      });
}

}  // namespace varcong::detail
