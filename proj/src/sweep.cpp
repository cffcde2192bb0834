#include <map>
#include <mutex>

#include "claims.hpp"
#include "parallel.hpp"
#include "varcong/congruence.hpp"

namespace varcong::detail {

namespace {

std::mutex corpus_mutex;
std::map<int, std::vector<CorpusEntry>> corpus_by_max;

}  // namespace

const std::vector<CorpusEntry>& cached_corpus(int max_order, int workers) {
  std::lock_guard<std::mutex> lock(corpus_mutex);
  auto it = corpus_by_max.find(max_order);
  if (it == corpus_by_max.end())
    it = corpus_by_max.emplace(max_order, corpus_up_to(max_order, workers))
             .first;
  return it->second;
}

std::vector<const CorpusEntry*> entries_up_to(int cap, int workers) {
  const auto& all = cached_corpus(cap, workers);
  std::vector<const CorpusEntry*> out;
  out.reserve(all.size());
  for (const auto& e : all) out.push_back(&e);
  return out;
}

namespace {

// All action tables of `s` on `degree` points, in lexicographic table order.
std::vector<Action> small_actions(const FiniteSemigroup& s, int degree) {
  const int n = s.order();
  const size_t cells = static_cast<size_t>(degree) * n;
  std::vector<Action> out;
  std::vector<int> table(cells, 0);
  while (true) {
    if (!validate_action_table(s, degree, table))
      out.emplace_back(s, degree, table);
    size_t i = cells;
    while (i > 0 && table[i - 1] == degree - 1) table[--i] = 0;
    if (i == 0) break;
    ++table[i - 1];
  }
  return out;
}

}  // namespace

std::vector<ActionEntry> base_actions(const FiniteSemigroup& s) {
  std::vector<ActionEntry> out;
  MonoidView m(s);
  out.push_back({"cayley", cayley_action(m)});
  if (s.order() <= 3) {
    for (int degree = 1; degree <= 2; ++degree) {
      auto acts = small_actions(s, degree);
      for (size_t k = 0; k < acts.size(); ++k)
        out.push_back({"deg" + std::to_string(degree) + "#" + std::to_string(k),
                       std::move(acts[k])});
    }
    auto congs = all_congruences(s);
    for (size_t i = 0; i < congs.size(); ++i) {
      QuotientSemigroup q = quotient(s, congs[i]);
      MonoidView qm(q.quotient);
      const int d = qm.order();
      std::vector<int> table(static_cast<size_t>(d) * s.order());
      for (int p = 0; p < d; ++p)
        for (element x = 0; x < s.order(); ++x)
          table[static_cast<size_t>(p) * s.order() + x] =
              qm.product(p, q.projection[x]);
      out.push_back({"quot#" + std::to_string(i),
                     Action(s, d, std::move(table))});
    }
  }
  return out;
}

std::vector<ActionEntry> star_actions(const FiniteSemigroup& star,
                                      bool faithful_only) {
  std::vector<ActionEntry> out;
  out.push_back({"cayley", cayley_action(MonoidView(star))});
  if (star.order() <= 3) {
    for (int degree = 1; degree <= 2; ++degree) {
      auto acts = small_actions(star, degree);
      for (size_t k = 0; k < acts.size(); ++k) {
        if (faithful_only && !is_faithful(acts[k])) continue;
        out.push_back({"deg" + std::to_string(degree) + "#" + std::to_string(k),
                       std::move(acts[k])});
      }
    }
  }
  return out;
}

std::vector<CheckReport> sweep_entries(
    const std::vector<const CorpusEntry*>& entries, int workers,
    const std::function<std::vector<CheckReport>(const CorpusEntry&)>& fn) {
  std::vector<std::vector<CheckReport>> slots(entries.size());
  parallel_index(workers, static_cast<int>(entries.size()),
                 [&](int i) { slots[i] = fn(*entries[i]); });
  std::vector<CheckReport> out;
  for (auto& slot : slots)
    for (auto& r : slot) out.push_back(std::move(r));
  return out;
}

int resolve_workers(const SweepConfig& config) {
  return config.workers > 0 ? config.workers : default_workers();
}

}  // namespace varcong::detail
