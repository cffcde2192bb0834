#pragma once

#include <string>
#include <vector>

#include "varcong/semigroup.hpp"

namespace varcong {

/// A corpus member: a semigroup with a stable id and recomputed structural
/// tags.  Enumerated entries are named "order:index" ("3:17"); the handmade
/// examples carry word ids.
struct CorpusEntry {
  std::string id;
  FiniteSemigroup sg;
  std::vector<std::string> tags;
};

/// Every semigroup of the given order, one per isomorphism class, as
/// canonical tables (the lexicographically least relabeling), ascending.
/// Deterministic for any worker count.  Orders 1..5 only; 5 takes a while
/// and sits behind a CLI flag.  Throws OrderTooLarge outside that range.
std::vector<FiniteSemigroup> enumerate_semigroups(int order, int workers = 1);

/// Enumerated entries for all orders 1..max_order, with ids and tags.
std::vector<CorpusEntry> corpus_up_to(int max_order, int workers = 1);

/// Tags in a fixed order, each recomputed from the table: has-identity,
/// regular, inverse, group, left-group, right-group.
std::vector<std::string> structure_tags(const FiniteSemigroup& s);

/// The two-element chain semilattice {a < b} under meet; b is the identity.
CorpusEntry semilattice_example();

/// The free semigroup on {a, b} with every word of length three or more
/// collapsed to zero: elements a, b, aa, ab, ba, bb, 0.
CorpusEntry rees_example();

std::vector<CorpusEntry> named_examples();

}  // namespace varcong
