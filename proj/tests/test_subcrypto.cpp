#include <doctest.h>

#include <algorithm>

#include "semitop/error.hpp"
#include "semitop/subcrypto.hpp"
#include "semitop/theorems.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace semitop;
using namespace semitop::testing;

TEST_CASE("subcryptogroup flags") {
  const TopoSemigroup e3 = example_2_3();
  const SubcryptoRecord k = subcrypto_flags(e3, make_bits(6, {0, 1, 3, 4}));
  CHECK(k.is_subcryptogroup);
  CHECK(k.is_full);
  CHECK(k.is_normal);
  CHECK(!k.is_closed);  // its closure is the whole space
  CHECK(e3.top().closure(k.subset) == ~Bits(6));

  const TopoSemigroup e1 = example_2_1();
  const SubcryptoRecord n = subcrypto_flags(e1, make_bits(10, {0, 1, 2, 4, 5, 6, 8}));
  CHECK(n.is_subcryptogroup);
  CHECK(n.is_full);
  CHECK(n.is_normal);
  CHECK(n.is_closed);  // complement {3,7,9} is open
  CHECK(n.is_open);

  Bits full(10);
  full.set();
  const SubcryptoRecord whole = subcrypto_flags(e1, full);
  CHECK(whole.is_subcryptogroup);
  CHECK(whole.is_full);
  CHECK(whole.is_normal);
  CHECK(whole.is_open);
  CHECK(whole.is_closed);

  CHECK_THROWS_WITH_AS(
      subcrypto_flags(TopoSemigroup(FinSemigroup::from_table({{0, 0}, {0, 0}}),
                                    FinTopology::discrete(2)),
                      make_bits(2, {0})),
      doctest::Contains("NotCryptogroup"), Error);
}

TEST_CASE("enumeration of full subcryptogroups") {
  // Z6: exactly three, all normal by commutativity.
  const std::vector<Bits> z6 = full_subcryptogroup_subsets(zn_mul(6), false);
  const std::vector<Bits> expected = {make_bits(6, {0, 1, 3, 4}),
                                      make_bits(6, {0, 1, 2, 3, 4}),
                                      make_bits(6, {0, 1, 2, 3, 4, 5})};
  CHECK(z6 == expected);
  CHECK(full_subcryptogroup_subsets(zn_mul(6), true) == expected);

  // A band is all idempotents, so fullness forces the whole semigroup.
  const FinSemigroup rb = rectangular_band(2, 3);
  Bits all(6);
  all.set();
  CHECK(full_subcryptogroup_subsets(rb, false) == std::vector<Bits>{all});

  // Z10 contains the three highlighted members.
  const std::vector<Bits> z10 = full_subcryptogroup_subsets(zn_mul(10), false);
  auto contains = [&](const Bits& b) {
    return std::find(z10.begin(), z10.end(), b) != z10.end();
  };
  CHECK(contains(make_bits(10, {0, 1, 5, 6})));
  CHECK(contains(make_bits(10, {0, 1, 2, 4, 5, 6, 8})));
  Bits full10(10);
  full10.set();
  CHECK(contains(full10));

  CHECK_THROWS_WITH_AS(full_subcryptogroup_subsets(zn_mul(6), false, 4),
                       doctest::Contains("TooLarge"), Error);
}

TEST_CASE("enumeration agrees with the exhaustive scan") {
  for (const auto& [name, inst] : build_corpus()) {
    const FinSemigroup& s = inst.sgp();
    if (s.size() > 12 || !s.classify().is_cryptogroup) {
      continue;
    }
    CAPTURE(name);
    for (bool only_normal : {false, true}) {
      std::vector<Bits> oracle = exhaustive_full_subcryptogroups(s, only_normal);
      std::sort(oracle.begin(), oracle.end());
      CHECK(full_subcryptogroup_subsets(s, only_normal) == oracle);
    }
  }
}

TEST_CASE("closure lemma battery on the fixtures") {
  for (auto make : {example_2_1, example_2_2, example_2_3}) {
    const Ledger ledger = verify_closure_lemmas(make());
    for (const CheckResult& c : ledger.items) {
      CAPTURE(c.id);
      CAPTURE(c.note);
      if (c.applicable) {
        CHECK(c.passed);
      }
    }
  }
  // The concrete case: closure of {0,1,3,4} under the example 2.3
  // topology is the whole semigroup, a full normal subcryptogroup.
  const TopoSemigroup e3 = example_2_3();
  const Bits cl = e3.top().closure(make_bits(6, {0, 1, 3, 4}));
  CHECK(is_full_normal_subcryptogroup(e3.sgp(), e3.h(), cl));
}

TEST_CASE("open full subcryptogroups are closed") {
  for (auto make : {example_2_1, example_2_2}) {
    const Ledger ledger = open_full_is_closed(make());
    for (const CheckResult& c : ledger.items) {
      CAPTURE(c.note);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("u-disjointness") {
  const TopoSemigroup e1 = example_2_1();
  const Bits a = make_bits(10, {1, 3});
  CHECK(u_disjoint(e1, a, make_bits(10, {0, 1, 5, 6})));
  Bits full(10);
  full.set();
  CHECK(!u_disjoint(e1, a, full));  // (1 S)* is the whole unit class
  CHECK(u_disjoint(e1, make_bits(10, {7}), full));
}

TEST_CASE("discrete family check") {
  const TopoSemigroup e1 = example_2_1();
  const Bits u = make_bits(10, {0, 1, 2, 4, 5, 6, 8});
  REQUIRE(e1.top().is_open(u));
  // V = U works: V is symmetric and V^4 stays inside U.
  CHECK(discrete_family_check(e1, make_bits(10, {1, 3}), u, u));
  CHECK(discrete_family_check(e1, make_bits(10, {3}), u, u));

  // E(S) itself is not open here, so it fails the hypothesis check.
  CHECK_THROWS_WITH_AS(discrete_family_check(e1, make_bits(10, {1}), make_bits(10, {0, 1, 5, 6}),
                                             u),
                       doctest::Contains("HypothesisViolated"), Error);
  // Open and over E(S), but not symmetric: contains 3 yet misses 3^-1 = 7.
  Bits full10(10);
  full10.set();
  const Bits asym = make_bits(10, {0, 1, 2, 3, 4, 5, 6, 8});
  REQUIRE(e1.top().is_open(asym));
  CHECK_THROWS_WITH_AS(discrete_family_check(e1, make_bits(10, {1}), full10, asym),
                       doctest::Contains("HypothesisViolated"), Error);
}

TEST_CASE("rho_N partitions") {
  const FinSemigroup z10 = zn_mul(10);

  const RhoN big = rho_n(z10, make_bits(10, {0, 1, 2, 4, 5, 6, 8}));
  CHECK(big.partition.blocks()
        == std::vector<std::vector<int>>{{0}, {1}, {2, 4, 6, 8}, {3}, {5}, {7}, {9}});

  Bits full(10);
  full.set();
  CHECK(rho_n(z10, full).partition == z10.green_relations().h);

  const RhoN small = rho_n(z10, make_bits(10, {0, 1, 5, 6}));
  CHECK(small.partition == Partition::singletons(10));

  CHECK_THROWS_WITH_AS(rho_n(z10, make_bits(10, {0, 1})),
                       doctest::Contains("NotFullNormalSubcryptogroup"), Error);
}

TEST_CASE("quotient by N") {
  const TopoSemigroup e1 = example_2_1();

  // N = E u B: seven classes, discrete quotient, still botg.
  const QuotientByN q = quotient_by_n(e1, make_bits(10, {0, 1, 2, 4, 5, 6, 8}));
  CHECK(q.instance.size() == 7);
  CHECK(q.instance.top().separation().discrete);
  CHECK(classify_topological(q.instance).is_botg_criterion);

  // N = S reproduces the quotient by H with its quotient topology.
  Bits full(10);
  full.set();
  const QuotientByN qh = quotient_by_n(e1, full);
  const Partition h = e1.h().h;
  CHECK(qh.instance.sgp() == e1.sgp().quotient(h).first);
  CHECK(qh.instance.top() == quotient_topology(e1.top(), h));

  // N = E: the diagonal congruence, so the instance comes back unchanged.
  const QuotientByN qe = quotient_by_n(e1, make_bits(10, {0, 1, 5, 6}));
  CHECK(qe.instance.sgp() == e1.sgp());
  CHECK(qe.instance.top() == e1.top());

  CHECK_THROWS_WITH_AS(quotient_by_n(example_2_3(), make_bits(6, {0, 1, 3, 4})),
                       doctest::Contains("PreconditionViolated"), Error);
}

TEST_CASE("hausdorff equivalence triples") {
  const TopoSemigroup e1 = example_2_1();

  const HausdorffTriple bad = hausdorff_equivalence(e1, make_bits(10, {0, 1, 5, 6}));
  CHECK(!bad.quotient_hausdorff);
  CHECK(!bad.rho_closed);
  CHECK(!bad.n_closed);
  CHECK(bad.all_equal());

  const HausdorffTriple good = hausdorff_equivalence(e1, make_bits(10, {0, 1, 2, 4, 5, 6, 8}));
  CHECK(good.quotient_hausdorff);
  CHECK(good.rho_closed);
  CHECK(good.n_closed);

  const TopoSemigroup disc(zn_mul(10), FinTopology::discrete(10));
  for (const Bits& n : full_subcryptogroup_subsets(disc.sgp(), true)) {
    const HausdorffTriple t = hausdorff_equivalence(disc, n);
    CHECK(t.quotient_hausdorff);
    CHECK(t.rho_closed);
    CHECK(t.n_closed);
  }
}

TEST_CASE("quotient correspondence") {
  const FinSemigroup z10 = zn_mul(10);
  for (const Bits& n : full_subcryptogroup_subsets(z10, true)) {
    CAPTURE(bits_to_string(n));
    CHECK(check_subcrypto_correspondence(z10, n));
  }
  const FinSemigroup z6 = zn_mul(6);
  for (const Bits& n : full_subcryptogroup_subsets(z6, true)) {
    CHECK(check_subcrypto_correspondence(z6, n));
  }
}
