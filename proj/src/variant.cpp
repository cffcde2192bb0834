#include "varcong/variant.hpp"

#include <cassert>

namespace varcong {

Variant variant(const MonoidView& m, element a) {
  const FiniteSemigroup& s = m.base();
  const int n = s.order();
  assert(a >= 0 && a < m.order());
  std::vector<element> table(static_cast<size_t>(n) * n);
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y)
      table[static_cast<size_t>(x) * n + y] = m.product(x, a, y);
  // The sandwich product is associative for free; the constructor re-checks
  // anyway, in line with not trusting constructions.
  return Variant{s, a, FiniteSemigroup(n, std::move(table), s.names())};
}

Variant variant(const FiniteSemigroup& s, element a) {
  assert(a >= 0 && a < s.order());
  return variant(MonoidView(s), a);
}

std::vector<Decomposition> decompositions(const MonoidView& m, element a) {
  std::vector<Decomposition> out;
  for (element beta = 0; beta < m.order(); ++beta)
    for (element alpha = 0; alpha < m.order(); ++alpha)
      if (m.product(beta, alpha) == a) out.push_back({beta, alpha});
  return out;
}

}  // namespace varcong
