#pragma once

// Internal plumbing shared by the per-claim sweep drivers.

#include <functional>
#include <string>
#include <vector>

#include "varcong/action.hpp"
#include "varcong/corpus.hpp"
#include "varcong/harness.hpp"
#include "varcong/semigroup.hpp"

namespace varcong::detail {

/// Cached corpus_up_to: enumeration is the only expensive shared step, so
/// run_battery does it once per order.
const std::vector<CorpusEntry>& cached_corpus(int max_order, int workers);

/// Entries of order <= cap.
std::vector<const CorpusEntry*> entries_up_to(int cap, int workers);

struct ActionEntry {
  std::string id;
  Action action;
};

/// The base action corpus for a semigroup: its right Cayley action on S^1
/// always; for order <= 3 additionally every action on 1 or 2 points
/// ("deg1#k", "deg2#k", numbered among valid tables in lexicographic order)
/// and the Cayley action of each quotient on (S/rho)^1 ("quot#i", numbered
/// by congruence index).
std::vector<ActionEntry> base_actions(const FiniteSemigroup& s);

/// Star-side corpus for a variant: its Cayley action plus, for order <= 3,
/// the small-degree actions; optionally restricted to faithful ones (ids
/// keep their unrestricted numbering).
std::vector<ActionEntry> star_actions(const FiniteSemigroup& star,
                                      bool faithful_only);

/// Run fn(i) over entry indices with per-index result slots, then
/// concatenate in index order.  Deterministic for any worker count.
std::vector<CheckReport> sweep_entries(
    const std::vector<const CorpusEntry*>& entries, int workers,
    const std::function<std::vector<CheckReport>(const CorpusEntry&)>& fn);

int resolve_workers(const SweepConfig& config);

// Per-claim drivers.
std::vector<CheckReport> run_lemma_good(const SweepConfig&);
std::vector<CheckReport> run_thm_faith(const SweepConfig&);
std::vector<CheckReport> run_thm_reg(const SweepConfig&);
std::vector<CheckReport> run_prop_aaa(const SweepConfig&);
std::vector<CheckReport> run_thm_easy(const SweepConfig&);
std::vector<CheckReport> run_prop_cyclic(const SweepConfig&);
std::vector<CheckReport> run_prop_fact(const SweepConfig&);
std::vector<CheckReport> run_thm_simple(const SweepConfig&);
std::vector<CheckReport> run_prop_inverse_r(const SweepConfig&);
std::vector<CheckReport> run_thm_beautiful(const SweepConfig&);
std::vector<CheckReport> run_example_semilattice(const SweepConfig&);
std::vector<CheckReport> run_example_rees(const SweepConfig&);
std::vector<CheckReport> run_example_bicyclic(const SweepConfig&);
std::vector<CheckReport> run_prop_main(const SweepConfig&);
std::vector<CheckReport> run_prop_quotient_a(const SweepConfig&);

}  // namespace varcong::detail
