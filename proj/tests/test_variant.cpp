#include <doctest.h>

#include <algorithm>

#include "varcong/corpus.hpp"
#include "varcong/variant.hpp"

using namespace varcong;

TEST_CASE("variant multiplies through the sandwich element") {
  FiniteSemigroup z2(2, {0, 1, 1, 0});
  Variant v = variant(z2, 1);
  // s * t = s g t in Z2: shifts the group table by g
  CHECK(v.star.product(0, 0) == 1);
  CHECK(v.star.product(0, 1) == 0);
  CHECK(v.star.product(1, 1) == 1);
  CHECK(v.sandwich == 1);
  CHECK(v.base == z2);
}

TEST_CASE("variant by the bottom of a semilattice is null") {
  CorpusEntry e = semilattice_example();
  Variant v = variant(e.sg, 0);
  for (element s = 0; s < 2; ++s)
    for (element t = 0; t < 2; ++t) CHECK(v.star.product(s, t) == 0);
  // names ride along
  CHECK(v.star.name_of(1) == "b");
}

TEST_CASE("variant by an identity is the semigroup itself") {
  FiniteSemigroup chain(2, {0, 0, 0, 1});
  MonoidView m(chain);
  CHECK(variant(m, 1).star == chain);  // 1 is the identity of the chain

  FiniteSemigroup lz(2, {0, 0, 1, 1});
  MonoidView madj(lz);
  CHECK(variant(madj, madj.one()).star == lz);
}

TEST_CASE("iterated variants collapse: a variant of a variant is a variant") {
  // (S_a)_b = S_{aba}, elementwise: (s * b * t) in S_a is s a b a t.
  for (const CorpusEntry& e : corpus_up_to(3)) {
    for (element a = 0; a < e.sg.order(); ++a) {
      Variant va = variant(e.sg, a);
      for (element b = 0; b < e.sg.order(); ++b) {
        Variant vab = variant(va.star, b);
        Variant direct = variant(e.sg, e.sg.product(a, b, a));
        CHECK(vab.star == direct.star);
      }
    }
  }
}

TEST_CASE("decompositions cover exactly the factor pairs") {
  FiniteSemigroup lz(2, {0, 0, 1, 1});
  MonoidView m(lz);
  for (element a = 0; a < 2; ++a) {
    auto ds = decompositions(m, a);
    // always present: (a, 1) and (1, a)
    CHECK(std::find(ds.begin(), ds.end(), Decomposition{a, m.one()}) != ds.end());
    CHECK(std::find(ds.begin(), ds.end(), Decomposition{m.one(), a}) != ds.end());
    // sound and complete against the definition
    int count = 0;
    for (element beta = 0; beta < m.order(); ++beta)
      for (element alpha = 0; alpha < m.order(); ++alpha)
        if (m.product(beta, alpha) == a) ++count;
    CHECK(static_cast<int>(ds.size()) == count);
    for (const Decomposition& d : ds) CHECK(m.product(d.beta, d.alpha) == a);
    // lexicographic by (beta, alpha)
    for (size_t i = 1; i < ds.size(); ++i) {
      bool ordered = ds[i - 1].beta < ds[i].beta ||
                     (ds[i - 1].beta == ds[i].beta &&
                      ds[i - 1].alpha < ds[i].alpha);
      CHECK(ordered);
    }
  }
}
