#include "varcong/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace varcong {

namespace {

// Element sets for orders this library handles fit comfortably in a word.
uint64_t full_mask(int n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

FiniteSemigroup build_monoid(const FiniteSemigroup& base) {
  if (base.identity()) return base;
  const int n = base.order();
  const int m = n + 1;
  std::vector<element> ext(static_cast<size_t>(m) * m);
  for (element s = 0; s < n; ++s)
    for (element t = 0; t < n; ++t)
      ext[static_cast<size_t>(s) * m + t] = base.product(s, t);
  for (element s = 0; s < n; ++s) {
    ext[static_cast<size_t>(s) * m + n] = s;
    ext[static_cast<size_t>(n) * m + s] = s;
  }
  ext[static_cast<size_t>(n) * m + n] = n;
  std::vector<std::string> names;
  if (!base.names().empty()) {
    names = base.names();
    names.push_back("1");
  }
  return FiniteSemigroup(m, std::move(ext), std::move(names));
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(int order, std::vector<element> table,
                                 std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ < 1) throw Error("semigroup order must be at least 1");
  if (table_.size() != static_cast<size_t>(order_) * order_)
    throw Error("table has " + std::to_string(table_.size()) +
                " entries, expected " + std::to_string(order_ * order_));
  for (element x : table_)
    if (x < 0 || x >= order_)
      throw Error("table entry " + std::to_string(x) + " out of range");
  if (!names_.empty() && names_.size() != static_cast<size_t>(order_))
    throw Error("expected one name per element");
  for (element s = 0; s < order_; ++s)
    for (element t = 0; t < order_; ++t)
      for (element u = 0; u < order_; ++u)
        if (product(product(s, t), u) != product(s, product(t, u)))
          throw AssociativityViolation(s, t, u);
  for (element e = 0; e < order_; ++e) {
    bool ident = true;
    for (element s = 0; s < order_ && ident; ++s)
      ident = product(e, s) == s && product(s, e) == s;
    if (ident) {
      identity_ = e;
      break;
    }
  }
}

std::string FiniteSemigroup::name_of(element s) const {
  return names_.empty() ? std::to_string(s) : names_[s];
}

MonoidView::MonoidView(const FiniteSemigroup& base)
    : base_(base),
      monoid_(build_monoid(base)),
      adjoined_(!base.identity().has_value()),
      one_(adjoined_ ? base.order() : *base.identity()) {}

std::string MonoidView::name_of(element u) const {
  if (adjoined_ && u == one_) return "1";
  return monoid_.name_of(u);
}

bool is_left_cancellable(const MonoidView& m, element u) {
  const int n = m.base_order();
  uint64_t seen = 0;
  for (element s = 0; s < n; ++s) {
    uint64_t bit = uint64_t{1} << m.product(u, s);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool is_right_cancellable(const MonoidView& m, element u) {
  const int n = m.base_order();
  uint64_t seen = 0;
  for (element s = 0; s < n; ++s) {
    uint64_t bit = uint64_t{1} << m.product(s, u);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool is_mididentity(const FiniteSemigroup& sg, element u) {
  const int n = sg.order();
  for (element s = 0; s < n; ++s)
    for (element t = 0; t < n; ++t)
      if (sg.product(s, u, t) != sg.product(s, t)) return false;
  return true;
}

bool is_mididentity(const MonoidView& m, element u) {
  if (u == m.one()) return true;
  return is_mididentity(m.base(), u);
}

bool is_idempotent(const FiniteSemigroup& s, element e) {
  return s.product(e, e) == e;
}

std::vector<element> idempotents(const FiniteSemigroup& s) {
  std::vector<element> out;
  for (element e = 0; e < s.order(); ++e)
    if (is_idempotent(s, e)) out.push_back(e);
  return out;
}

element idempotent_power(const FiniteSemigroup& s, element x) {
  // The power sequence has index i and period p with i + p <= order() + 1,
  // and the unique idempotent of <x> sits at an exponent below i + p.
  element pow = x;
  for (int k = 0; k <= 2 * s.order(); ++k) {
    if (is_idempotent(s, pow)) return pow;
    pow = s.product(pow, x);
  }
  assert(false && "cyclic subsemigroup without idempotent");
  return pow;
}

bool is_left_identity(const FiniteSemigroup& s, element e) {
  for (element t = 0; t < s.order(); ++t)
    if (s.product(e, t) != t) return false;
  return true;
}

bool is_right_identity(const FiniteSemigroup& s, element e) {
  for (element t = 0; t < s.order(); ++t)
    if (s.product(t, e) != t) return false;
  return true;
}

bool is_regular_element(const FiniteSemigroup& s, element x) {
  for (element y = 0; y < s.order(); ++y)
    if (s.product(x, y, x) == x) return true;
  return false;
}

bool is_regular_element(const MonoidView& m, element x) {
  for (element y = 0; y < m.order(); ++y)
    if (m.product(x, y, x) == x) return true;
  return false;
}

bool is_regular(const FiniteSemigroup& s) {
  for (element x = 0; x < s.order(); ++x)
    if (!is_regular_element(s, x)) return false;
  return true;
}

std::vector<element> inverses_of(const FiniteSemigroup& s, element x) {
  std::vector<element> out;
  for (element y = 0; y < s.order(); ++y)
    if (s.product(x, y, x) == x && s.product(y, x, y) == y) out.push_back(y);
  return out;
}

std::vector<element> inverses_of(const MonoidView& m, element x) {
  return inverses_of(m.monoid(), x);
}

bool is_inverse_semigroup(const FiniteSemigroup& s) {
  if (!is_regular(s)) return false;
  auto es = idempotents(s);
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (s.product(es[i], es[j]) != s.product(es[j], es[i])) return false;
  return true;
}

bool is_group(const FiniteSemigroup& s) {
  auto e = s.identity();
  if (!e) return false;
  for (element x = 0; x < s.order(); ++x) {
    bool inv = false;
    for (element y = 0; y < s.order() && !inv; ++y)
      inv = s.product(x, y) == *e && s.product(y, x) == *e;
    if (!inv) return false;
  }
  return true;
}

bool green_L_related(const MonoidView& m, element x, element y) {
  uint64_t lx = 0, ly = 0;
  for (element u = 0; u < m.order(); ++u) {
    lx |= uint64_t{1} << m.product(u, x);
    ly |= uint64_t{1} << m.product(u, y);
  }
  return lx == ly;
}

bool green_R_related(const MonoidView& m, element x, element y) {
  uint64_t rx = 0, ry = 0;
  for (element u = 0; u < m.order(); ++u) {
    rx |= uint64_t{1} << m.product(x, u);
    ry |= uint64_t{1} << m.product(y, u);
  }
  return rx == ry;
}

bool is_left_simple(const FiniteSemigroup& s) {
  const uint64_t all = full_mask(s.order());
  for (element t = 0; t < s.order(); ++t) {
    uint64_t ideal = 0;
    for (element x = 0; x < s.order(); ++x)
      ideal |= uint64_t{1} << s.product(x, t);
    if (ideal != all) return false;
  }
  return true;
}

bool is_right_simple(const FiniteSemigroup& s) {
  const uint64_t all = full_mask(s.order());
  for (element t = 0; t < s.order(); ++t) {
    uint64_t ideal = 0;
    for (element x = 0; x < s.order(); ++x)
      ideal |= uint64_t{1} << s.product(t, x);
    if (ideal != all) return false;
  }
  return true;
}

namespace {

FiniteSemigroup induced_table(const FiniteSemigroup& parent,
                              const std::vector<element>& members,
                              const std::vector<element>& to_sub) {
  const int k = static_cast<int>(members.size());
  std::vector<element> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      element p = parent.product(members[i], members[j]);
      element q = to_sub[p];
      if (q < 0) throw NotClosed(members[i], members[j]);
      table[static_cast<size_t>(i) * k + j] = q;
    }
  std::vector<std::string> names;
  if (!parent.names().empty())
    for (element m : members) names.push_back(parent.names()[m]);
  return FiniteSemigroup(k, std::move(table), std::move(names));
}

std::vector<element> sub_index(int parent_order,
                               const std::vector<element>& members) {
  std::vector<element> to_sub(parent_order, -1);
  for (size_t i = 0; i < members.size(); ++i) to_sub[members[i]] = i;
  return to_sub;
}

std::vector<element> normalized_members(const FiniteSemigroup& parent,
                                        std::vector<element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw Error("subset semigroup needs at least 1 element");
  for (element m : members)
    if (m < 0 || m >= parent.order())
      throw Error("subset member " + std::to_string(m) + " out of range");
  return members;
}

}  // namespace

SubsetSemigroup::SubsetSemigroup(const FiniteSemigroup& parent,
                                 std::vector<element> members)
    : members_(normalized_members(parent, std::move(members))),
      to_sub_(sub_index(parent.order(), members_)),
      sub_(induced_table(parent, members_, to_sub_)) {}

SubsetSemigroup sandwich_subset(const MonoidView& m, element b, element c) {
  std::vector<element> members;
  for (element s = 0; s < m.base_order(); ++s)
    members.push_back(m.product(b, s, c));
  return SubsetSemigroup(m.base(), std::move(members));
}

namespace {

std::optional<GroupDecomposition> try_decompose(const FiniteSemigroup& s,
                                                GroupSide side) {
  auto es = idempotents(s);
  if (es.empty()) return std::nullopt;
  const element e0 = es[0];
  const int n = s.order();

  std::vector<element> gm;
  for (element x = 0; x < n; ++x)
    gm.push_back(side == GroupSide::left ? s.product(e0, x)
                                         : s.product(x, e0));
  SubsetSemigroup group(s, std::move(gm));
  if (!is_group(group.sub())) return std::nullopt;
  SubsetSemigroup zero(s, es);
  for (element u = 0; u < zero.sub().order(); ++u)
    for (element v = 0; v < zero.sub().order(); ++v) {
      element expect = side == GroupSide::left ? u : v;
      if (zero.sub().product(u, v) != expect) return std::nullopt;
    }

  // s factors as (e0 s) paired with its idempotent power (left case; the
  // right case mirrors).  Rebuild s from the pair before believing anything.
  GroupDecomposition d{side, std::move(group), std::move(zero), {}, {}};
  const int gk = d.group.sub().order();
  const int zk = d.zero_part.sub().order();
  if (gk * zk != n) return std::nullopt;
  d.element_of.assign(static_cast<size_t>(gk) * zk, -1);
  for (element x = 0; x < n; ++x) {
    element gp = side == GroupSide::left ? s.product(e0, x) : s.product(x, e0);
    element zp = idempotent_power(s, x);
    element gi = d.group.to_sub(gp);
    element zi = d.zero_part.to_sub(zp);
    if (gi < 0 || zi < 0) return std::nullopt;
    element back = side == GroupSide::left ? s.product(zp, gp)
                                           : s.product(gp, zp);
    if (back != x) return std::nullopt;
    size_t slot = static_cast<size_t>(gi) * zk + zi;
    if (d.element_of[slot] != -1) return std::nullopt;
    d.element_of[slot] = x;
    d.factor_of.emplace_back(gi, zi);
  }
  for (element slot_val : d.element_of)
    if (slot_val < 0) return std::nullopt;
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y) {
      auto [gx, zx] = d.factor_of[x];
      auto [gy, zy] = d.factor_of[y];
      auto [gxy, zxy] = d.factor_of[s.product(x, y)];
      if (gxy != d.group.sub().product(gx, gy)) return std::nullopt;
      if (zxy != d.zero_part.sub().product(zx, zy)) return std::nullopt;
    }
  return d;
}

}  // namespace

std::optional<GroupDecomposition> left_right_group_decompose(
    const FiniteSemigroup& s) {
  if (is_left_simple(s)) return try_decompose(s, GroupSide::left);
  if (is_right_simple(s)) return try_decompose(s, GroupSide::right);
  return std::nullopt;
}

element group_inverse(const FiniteSemigroup& g, element x) {
  auto e = g.identity();
  if (!e) throw PreconditionFailed("semigroup has no identity");
  for (element y = 0; y < g.order(); ++y)
    if (g.product(x, y) == *e && g.product(y, x) == *e) return y;
  throw PreconditionFailed("element " + std::to_string(x) +
                           " has no group inverse");
}

}  // namespace varcong
