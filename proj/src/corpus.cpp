#include "varcong/corpus.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "parallel.hpp"

namespace varcong {

namespace {

// Backtracking over table cells in row-major order.  A cell assignment is
// kept only if no associativity triple that it completes is violated; a
// triple can be checked as soon as all four products it mentions are filled.
struct TableSearch {
  int n;
  std::vector<element> t;  // -1 for unassigned
  std::vector<std::vector<element>>* out;

  element get(element x, element y) const { return t[x * n + y]; }

  bool consistent(int r, int c) const {
    // Triples completed by cell (r, c): it can appear as (s t) u with
    // (s, t) = (r, c), as s (t u) with (t, u) = (r, c), or as the outer
    // product when get(x, y) == r and the partner cell exists.
    for (element z = 0; z < n; ++z) {
      if (!check_triple(r, c, z)) return false;
      if (!check_triple(z, r, c)) return false;
    }
    for (element x = 0; x < n; ++x)
      for (element y = 0; y < n; ++y)
        if (get(x, y) == r && !check_triple(x, y, c)) return false;
    for (element y = 0; y < n; ++y)
      for (element z = 0; z < n; ++z)
        if (get(y, z) == c && !check_triple(r, y, z)) return false;
    return true;
  }

  // False only when every involved product is known and the triple fails.
  bool check_triple(element x, element y, element z) const {
    element xy = get(x, y);
    if (xy < 0) return true;
    element xy_z = get(xy, z);
    if (xy_z < 0) return true;
    element yz = get(y, z);
    if (yz < 0) return true;
    element x_yz = get(x, yz);
    if (x_yz < 0) return true;
    return xy_z == x_yz;
  }

  void fill_until(int cell, int stop) {
    if (cell == stop) {
      out->push_back(t);
      return;
    }
    const int r = cell / n, c = cell % n;
    for (element v = 0; v < n; ++v) {
      t[cell] = v;
      if (consistent(r, c)) fill_until(cell + 1, stop);
    }
    t[cell] = -1;
  }
};

std::vector<element> canonical_form(int n, const std::vector<element>& table) {
  std::vector<element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<element> best = table;
  std::vector<element> relabeled(table.size());
  do {
    for (element s = 0; s < n; ++s)
      for (element t = 0; t < n; ++t)
        relabeled[perm[s] * n + perm[t]] = perm[table[s * n + t]];
    if (relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteSemigroup> enumerate_semigroups(int order, int workers) {
  if (order < 1 || order > 5)
    throw OrderTooLarge("enumeration supports orders 1 through 5");
  const int n = order;

  // Seed tasks: every consistent completion of the first row, found serially.
  std::vector<std::vector<element>> seeds;
  {
    TableSearch s{n, std::vector<element>(n * n, -1), &seeds};
    s.fill_until(0, n);
  }

  std::vector<std::vector<std::vector<element>>> found(seeds.size());
  detail::parallel_index(workers, static_cast<int>(seeds.size()), [&](int i) {
    TableSearch s{n, seeds[i], &found[i]};
    s.fill_until(n, n * n);
  });

  std::vector<std::vector<element>> canon;
  for (const auto& bucket : found)
    for (const auto& table : bucket) canon.push_back(canonical_form(n, table));
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  std::vector<FiniteSemigroup> out;
  out.reserve(canon.size());
  for (auto& table : canon) out.emplace_back(n, std::move(table));
  return out;
}

std::vector<std::string> structure_tags(const FiniteSemigroup& s) {
  std::vector<std::string> tags;
  if (s.identity()) tags.push_back("has-identity");
  if (is_regular(s)) tags.push_back("regular");
  if (is_inverse_semigroup(s)) tags.push_back("inverse");
  if (is_group(s)) tags.push_back("group");
  bool has_idem = !idempotents(s).empty();
  if (is_left_simple(s) && has_idem) tags.push_back("left-group");
  if (is_right_simple(s) && has_idem) tags.push_back("right-group");
  return tags;
}

std::vector<CorpusEntry> corpus_up_to(int max_order, int workers) {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= max_order; ++n) {
    auto sgs = enumerate_semigroups(n, workers);
    for (size_t i = 0; i < sgs.size(); ++i) {
      std::string id = std::to_string(n) + ":" + std::to_string(i);
      auto tags = structure_tags(sgs[i]);
      out.push_back(CorpusEntry{std::move(id), std::move(sgs[i]), std::move(tags)});
    }
  }
  return out;
}

CorpusEntry semilattice_example() {
  FiniteSemigroup sg(2, {0, 0, 0, 1}, {"a", "b"});
  return CorpusEntry{"semilattice2", sg, structure_tags(sg)};
}

CorpusEntry rees_example() {
  // Words a, b, aa, ab, ba, bb and a zero absorbing every longer word.
  const int A = 0, B = 1, AA = 2, AB = 3, BA = 4, BB = 5, Z = 6;
  std::vector<element> table(49, Z);
  table[A * 7 + A] = AA;
  table[A * 7 + B] = AB;
  table[B * 7 + A] = BA;
  table[B * 7 + B] = BB;
  FiniteSemigroup sg(7, std::move(table), {"a", "b", "aa", "ab", "ba", "bb", "0"});
  return CorpusEntry{"rees7", sg, structure_tags(sg)};
}

std::vector<CorpusEntry> named_examples() {
  return {semilattice_example(), rees_example()};
}

}  // namespace varcong
