#include "varcong/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace varcong {

namespace {

// Relabel so classes appear in first-occurrence order.  Input labels can be
// anything; output is the canonical form.
std::vector<int> normalize_labels(const std::vector<int>& raw) {
  std::vector<std::pair<int, int>> remap;  // (seen label, canonical label)
  std::vector<int> out(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    int r = raw[i];
    assert(r >= 0);
    auto hit = std::find_if(remap.begin(), remap.end(),
                            [r](const auto& p) { return p.first == r; });
    if (hit == remap.end()) {
      remap.emplace_back(r, static_cast<int>(remap.size()));
      hit = std::prev(remap.end());
    }
    out[i] = hit->second;
  }
  return out;
}

int count_classes(const std::vector<int>& canonical) {
  int mx = -1;
  for (int c : canonical) mx = std::max(mx, c);
  return mx + 1;
}

}  // namespace

Congruence::Congruence(FiniteSemigroup sg, std::vector<int> class_of)
    : sg_(std::move(sg)), class_of_(), num_classes_(0) {
  const int n = sg_.order();
  if (class_of.size() != static_cast<size_t>(n))
    throw Error("partition has " + std::to_string(class_of.size()) +
                " entries, expected " + std::to_string(n));
  for (int c : class_of)
    if (c < 0) throw Error("class label out of range");
  class_of_ = normalize_labels(class_of);
  num_classes_ = count_classes(class_of_);
  for (element s = 0; s < n; ++s)
    for (element t = s + 1; t < n; ++t) {
      if (class_of_[s] != class_of_[t]) continue;
      for (element u = 0; u < n; ++u) {
        if (class_of_[sg_.product(u, s)] != class_of_[sg_.product(u, t)] ||
            class_of_[sg_.product(s, u)] != class_of_[sg_.product(t, u)])
          throw NotACongruence(
              "classes of " + std::to_string(s) + " and " + std::to_string(t) +
              " agree but their translates by " + std::to_string(u) +
              " do not");
      }
    }
}

bool same_partition(const Congruence& a, const Congruence& b) {
  // Canonical labeling makes partition equality plain vector equality.
  return a.class_of() == b.class_of();
}

bool refines(const Congruence& a, const Congruence& b) {
  if (a.class_of().size() != b.class_of().size()) return false;
  // a-class -> b-class must be a function.
  std::vector<int> image(a.num_classes(), -1);
  for (size_t i = 0; i < a.class_of().size(); ++i) {
    int ca = a.class_of()[i];
    int cb = b.class_of()[i];
    if (image[ca] < 0)
      image[ca] = cb;
    else if (image[ca] != cb)
      return false;
  }
  return true;
}

Congruence identity_congruence(const FiniteSemigroup& s) {
  std::vector<int> labels(s.order());
  std::iota(labels.begin(), labels.end(), 0);
  return Congruence(s, std::move(labels));
}

Congruence universal_congruence(const FiniteSemigroup& s) {
  return Congruence(s, std::vector<int>(s.order(), 0));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns true when the merge did something.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // Attach the larger root under the smaller: roots stay least members,
    // which feeds straight into canonical labeling.
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Congruence congruence_closure(
    const FiniteSemigroup& s,
    const std::vector<std::pair<element, element>>& pairs) {
  const int n = s.order();
  UnionFind uf(n);
  std::vector<std::pair<element, element>> work;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error("generating pair out of range");
    work.emplace_back(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    // Compatibility: each merged pair forces its translates together.  Every
    // derived relation is a chain of merged pairs, so translating only the
    // merged ones reaches the full closure.
    for (element u = 0; u < n; ++u) {
      work.emplace_back(s.product(u, a), s.product(u, b));
      work.emplace_back(s.product(a, u), s.product(b, u));
    }
  }
  std::vector<int> labels(n);
  for (element x = 0; x < n; ++x) labels[x] = uf.find(x);
  return Congruence(s, std::move(labels));
}

Congruence meet(const Congruence& a, const Congruence& b) {
  if (a.semigroup() != b.semigroup()) throw MixedSemigroups();
  const int n = a.semigroup().order();
  // Intersection of partitions: label by the pair of labels.
  std::vector<int> labels(n);
  std::vector<int> seen;
  for (element x = 0; x < n; ++x) {
    int key = a.class_of()[x] * n + b.class_of()[x];
    auto it = std::find(seen.begin(), seen.end(), key);
    if (it == seen.end()) {
      seen.push_back(key);
      labels[x] = static_cast<int>(seen.size()) - 1;
    } else {
      labels[x] = static_cast<int>(it - seen.begin());
    }
  }
  return Congruence(a.semigroup(), std::move(labels));
}

Congruence join(const Congruence& a, const Congruence& b) {
  if (a.semigroup() != b.semigroup()) throw MixedSemigroups();
  const int n = a.semigroup().order();
  std::vector<std::pair<element, element>> pairs;
  auto add_generators = [&](const Congruence& c) {
    // (first member of the class, member) pairs generate the partition.
    std::vector<int> first(c.num_classes(), -1);
    for (element x = 0; x < n; ++x) {
      int cl = c.class_of()[x];
      if (first[cl] < 0)
        first[cl] = x;
      else
        pairs.emplace_back(first[cl], x);
    }
  };
  add_generators(a);
  add_generators(b);
  return congruence_closure(a.semigroup(), pairs);
}

Congruence rho_bc(const Congruence& rho, const MonoidView& m, element b,
                  element c) {
  assert(rho.semigroup() == m.base());
  const int n = m.base_order();
  std::vector<int> labels(n);
  for (element s = 0; s < n; ++s) {
    element bsc = m.product(b, s, c);
    assert(bsc < n && "b s c stays in the base semigroup");
    labels[s] = rho.class_of()[bsc];
  }
  Variant v = variant(m, m.product(c, b));
  return Congruence(std::move(v.star), std::move(labels));
}

Congruence rho_a(const Congruence& rho, const MonoidView& m, element a) {
  // Same relating rule as rho_bc with b = c = a, but the carrier is the
  // variant by a, not by a a.
  assert(rho.semigroup() == m.base());
  const int n = m.base_order();
  std::vector<int> labels(n);
  for (element s = 0; s < n; ++s) {
    element asa = m.product(a, s, a);
    assert(asa < n);
    labels[s] = rho.class_of()[asa];
  }
  Variant v = variant(m, a);
  return Congruence(std::move(v.star), std::move(labels));
}

Congruence rho_left(const Congruence& rho, const MonoidView& m, element a) {
  return rho_bc(rho, m, a, m.one());
}

Congruence rho_right(const Congruence& rho, const MonoidView& m, element a) {
  return rho_bc(rho, m, m.one(), a);
}

QuotientSemigroup quotient(const FiniteSemigroup& s, const Congruence& rho) {
  assert(rho.semigroup() == s);
  const int n = s.order();
  const int k = rho.num_classes();
  std::vector<element> rep(k, -1);
  for (element x = 0; x < n; ++x)
    if (rep[rho.class_of()[x]] < 0) rep[rho.class_of()[x]] = x;
  std::vector<element> table(static_cast<size_t>(k) * k, -1);
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y) {
      int cx = rho.class_of()[x], cy = rho.class_of()[y];
      int cz = rho.class_of()[s.product(x, y)];
      element& slot = table[static_cast<size_t>(cx) * k + cy];
      // Well-defined because rho is a verified congruence.
      assert(slot == -1 || slot == cz);
      slot = cz;
    }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    names.assign(k, "");
    for (element x = 0; x < n; ++x) {
      std::string& nm = names[rho.class_of()[x]];
      nm += nm.empty() ? "{" : ",";
      nm += s.names()[x];
    }
    for (auto& nm : names) nm += "}";
  }
  return QuotientSemigroup{FiniteSemigroup(k, std::move(table), std::move(names)),
                           rho.class_of()};
}

Congruence restrict_to(const Congruence& rho, const SubsetSemigroup& t) {
  std::vector<int> labels;
  labels.reserve(t.members().size());
  for (element m : t.members()) labels.push_back(rho.class_of()[m]);
  return Congruence(t.sub(), std::move(labels));
}

namespace {

// Restricted growth strings enumerate set partitions of {0..n-1} in a
// canonical order: labels[0] = 0 and labels[i] <= 1 + max(labels[0..i-1]).
bool next_partition(std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  for (int i = n - 1; i >= 1; --i) {
    int mx = 0;
    for (int j = 0; j < i; ++j) mx = std::max(mx, labels[j]);
    if (labels[i] <= mx) {
      ++labels[i];
      std::fill(labels.begin() + i + 1, labels.end(), 0);
      return true;
    }
    labels[i] = 0;
  }
  return false;
}

bool compatible(const FiniteSemigroup& s, const std::vector<int>& labels) {
  const int n = s.order();
  for (element x = 0; x < n; ++x)
    for (element y = x + 1; y < n; ++y) {
      if (labels[x] != labels[y]) continue;
      for (element u = 0; u < n; ++u)
        if (labels[s.product(u, x)] != labels[s.product(u, y)] ||
            labels[s.product(x, u)] != labels[s.product(y, u)])
          return false;
    }
  return true;
}

}  // namespace

std::vector<Congruence> all_congruences(const FiniteSemigroup& s) {
  const int n = s.order();
  if (n > 9)
    throw OrderTooLarge("congruence lattice enumeration is limited to order 9");
  std::vector<Congruence> out;
  std::vector<int> labels(n, 0);
  do {
    if (compatible(s, labels)) out.emplace_back(s, labels);
  } while (next_partition(labels));
  std::sort(out.begin(), out.end(), [](const Congruence& a, const Congruence& b) {
    if (a.num_classes() != b.num_classes())
      return a.num_classes() < b.num_classes();
    return a.class_of() < b.class_of();
  });
  return out;
}

namespace {

// Invariants that any isomorphism must preserve; used both to order the
// source elements (most constrained first) and to prefilter candidates.
struct ElementKey {
  bool idem;
  int row_distinct;
  int col_distinct;
  bool in_row_image;  // x = x y for some y

  bool operator==(const ElementKey& o) const {
    return idem == o.idem && row_distinct == o.row_distinct &&
           col_distinct == o.col_distinct && in_row_image == o.in_row_image;
  }
  bool operator<(const ElementKey& o) const {
    if (idem != o.idem) return idem < o.idem;
    if (row_distinct != o.row_distinct) return row_distinct < o.row_distinct;
    if (col_distinct != o.col_distinct) return col_distinct < o.col_distinct;
    return in_row_image < o.in_row_image;
  }
};

ElementKey key_of(const FiniteSemigroup& s, element x) {
  const int n = s.order();
  uint64_t row = 0, col = 0;
  bool self = false;
  for (element y = 0; y < n; ++y) {
    row |= uint64_t{1} << s.product(x, y);
    col |= uint64_t{1} << s.product(y, x);
    self = self || s.product(x, y) == x;
  }
  return {is_idempotent(s, x), __builtin_popcountll(row),
          __builtin_popcountll(col), self};
}

bool extend(const FiniteSemigroup& a, const FiniteSemigroup& b,
            const std::vector<element>& order_a,
            const std::vector<ElementKey>& keys_a,
            const std::vector<ElementKey>& keys_b, size_t depth,
            std::vector<element>& map, std::vector<bool>& used) {
  const int n = a.order();
  if (depth == order_a.size()) return true;
  element x = order_a[depth];
  for (element y = 0; y < n; ++y) {
    if (used[y] || !(keys_a[x] == keys_b[y])) continue;
    map[x] = y;
    used[y] = true;
    bool ok = true;
    // Check every product both of whose factors are already mapped.
    for (size_t i = 0; i <= depth && ok; ++i) {
      element u = order_a[i];
      element pu = map[u];
      element xy = a.product(x, u), yx = a.product(u, x);
      element mxy = map[xy], myx = map[yx];
      if (mxy >= 0 && b.product(y, pu) != mxy) ok = false;
      if (ok && myx >= 0 && b.product(pu, y) != myx) ok = false;
    }
    if (ok &&
        extend(a, b, order_a, keys_a, keys_b, depth + 1, map, used))
      return true;
    map[x] = -1;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<element>> find_isomorphism(const FiniteSemigroup& a,
                                                     const FiniteSemigroup& b) {
  const int n = a.order();
  if (n != b.order()) return std::nullopt;
  std::vector<ElementKey> keys_a, keys_b;
  for (element x = 0; x < n; ++x) {
    keys_a.push_back(key_of(a, x));
    keys_b.push_back(key_of(b, x));
  }
  {
    auto sa = keys_a, sb = keys_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!(sa == sb)) return std::nullopt;
  }
  std::vector<element> order_a(n);
  std::iota(order_a.begin(), order_a.end(), 0);
  std::stable_sort(order_a.begin(), order_a.end(),
                   [&](element x, element y) { return keys_a[x] < keys_a[y]; });
  std::vector<element> map(n, -1);
  std::vector<bool> used(n, false);
  if (!extend(a, b, order_a, keys_a, keys_b, 0, map, used))
    return std::nullopt;
  // Re-verify from scratch before handing the witness out.
  std::vector<bool> hit(n, false);
  for (element x = 0; x < n; ++x) {
    assert(map[x] >= 0 && map[x] < n && !hit[map[x]]);
    hit[map[x]] = true;
  }
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y)
      assert(b.product(map[x], map[y]) == map[a.product(x, y)]);
  return map;
}

}  // namespace varcong
