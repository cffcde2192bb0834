#pragma once

// Independent reference implementations used to cross-check library results.
// Each one is deliberately written with a different algorithm than the
// library: agreement then actually means something.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "varcong/bicyclic.hpp"
#include "varcong/semigroup.hpp"

namespace oracles {

// Join of two partitions by repeated pairwise sweeps over an explicit
// boolean relation matrix until it stops changing (the library uses
// union-find with translate propagation instead).  The transitive closure of
// a union of congruences is compatible automatically, so no translate step
// is needed here.
inline std::vector<int> partition_join(const std::vector<int>& a,
                                       const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<char> rel(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rel[static_cast<size_t>(i) * n + j] = a[i] == a[j] || b[i] == b[j];
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!rel[static_cast<size_t>(i) * n + j]) continue;
        for (int k = 0; k < n; ++k)
          if (rel[static_cast<size_t>(j) * n + k] &&
              !rel[static_cast<size_t>(i) * n + k]) {
            rel[static_cast<size_t>(i) * n + k] = 1;
            changed = true;
          }
      }
  }
  std::vector<int> out(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (out[i] >= 0) continue;
    out[i] = next;
    for (int j = i + 1; j < n; ++j)
      if (rel[static_cast<size_t>(i) * n + j]) out[j] = next;
    ++next;
  }
  return out;
}

inline bool table_associative(int n, const std::vector<int>& t) {
  for (int s = 0; s < n; ++s)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (t[static_cast<size_t>(t[static_cast<size_t>(s) * n + u]) * n + v] !=
            t[static_cast<size_t>(s) * n + t[static_cast<size_t>(u) * n + v]])
          return false;
  return true;
}

// Least table among all relabelings, computed the plain way.
inline std::vector<int> least_relabeling(int n, const std::vector<int>& t) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> img(static_cast<size_t>(n) * n);
    for (int s = 0; s < n; ++s)
      for (int u = 0; u < n; ++u)
        img[static_cast<size_t>(perm[s]) * n + perm[u]] =
            perm[t[static_cast<size_t>(s) * n + u]];
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every semigroup of one order up to isomorphism by filtering all n^(n*n)
// tables.  Only sane for n <= 3 (3^9 = 19683 candidates).
inline std::vector<std::vector<int>> all_semigroups_naive(int n) {
  std::vector<std::vector<int>> out;
  const size_t cells = static_cast<size_t>(n) * n;
  std::vector<int> t(cells, 0);
  for (;;) {
    if (table_associative(n, t)) {
      std::vector<int> canon = least_relabeling(n, t);
      if (std::find(out.begin(), out.end(), canon) == out.end())
        out.push_back(canon);
    }
    size_t i = 0;
    while (i < cells && t[i] == n - 1) t[i++] = 0;
    if (i == cells) break;
    ++t[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Bicyclic product by literal string rewriting: write both factors as words
// over {a, b}, concatenate, erase "ba" until none is left, then read off the
// (unique) normal form a^i b^j.
inline varcong::BicyclicElement bicyclic_rewrite(varcong::BicyclicElement x,
                                                 varcong::BicyclicElement y) {
  std::string w = std::string(x.i, 'a') + std::string(x.j, 'b') +
                  std::string(y.i, 'a') + std::string(y.j, 'b');
  for (size_t pos; (pos = w.find("ba")) != std::string::npos;)
    w.erase(pos, 2);
  varcong::BicyclicElement r;
  size_t split = w.find('b');
  if (split == std::string::npos) split = w.size();
  r.i = static_cast<int>(split);
  r.j = static_cast<int>(w.size() - split);
  return r;
}

}  // namespace oracles
