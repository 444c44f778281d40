#include <doctest.h>

#include <random>

#include "semitop/error.hpp"
#include "semitop/topology.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace semitop;
using namespace semitop::testing;

namespace {

FinTopology ex21_topology() {
  return example_2_1().top();
}

}  // namespace

TEST_CASE("generation from subbases") {
  const FinTopology t = ex21_topology();
  CHECK(t.open_count() == 128);  // unions of seven disjoint atoms
  CHECK(t.min_nbhd(2) == make_bits(10, {2, 4, 6, 8}));
  CHECK(t.min_nbhd(0) == make_bits(10, {0}));

  const FinTopology z6 = z6_three_atom_topology();
  CHECK(z6.open_count() == 8);  // unions of three atoms plus empty and full
  CHECK(z6.is_open(make_bits(6, {0, 3})));
  CHECK(z6.is_open(make_bits(6, {1, 2, 3, 4, 5})));
  CHECK(!z6.is_open(make_bits(6, {1, 5})));

  CHECK(FinTopology::discrete(3).open_count() == 8);
  CHECK(FinTopology::indiscrete(4).open_count() == 2);
}

TEST_CASE("from_opens validates the axioms") {
  // Missing union {0,1}.
  std::vector<Bits> family = {make_bits(3, {0}), make_bits(3, {1})};
  CHECK_THROWS_WITH_AS(FinTopology::from_opens(3, family),
                       doctest::Contains("not closed under union"), Error);
  CHECK_THROWS_WITH_AS(FinTopology::from_opens(3, {make_bits(4, {0})}),
                       doctest::Contains("SubsetOutOfRange"), Error);
  // A valid chain topology passes.
  CHECK(FinTopology::from_opens(3, {make_bits(3, {0}), make_bits(3, {0, 1})}).open_count() == 4);
}

TEST_CASE("closure and interior") {
  const FinTopology z6 = z6_three_atom_topology();
  CHECK(z6.closure(make_bits(6, {1})) == make_bits(6, {1, 2, 4, 5}));
  const FinTopology t = ex21_topology();
  CHECK(t.closure(make_bits(10, {2})) == make_bits(10, {2, 4, 6, 8}));
  CHECK(t.closure(Bits(10)) == Bits(10));
  CHECK(t.interior(make_bits(10, {0, 2})) == make_bits(10, {0}));
  CHECK(t.is_dense(make_bits(10, {0, 1, 2, 3, 5, 7, 9})));
  CHECK(!t.is_dense(make_bits(10, {0, 1, 3, 5, 7, 9})));
}

TEST_CASE("closure operator laws against the closed-superset oracle") {
  std::mt19937 rng(7);
  for (const auto& [name, inst] : build_corpus()) {
    const FinTopology& t = inst.top();
    if (t.open_count() > 512) {
      continue;
    }
    CAPTURE(name);
    std::uniform_int_distribution<std::uint64_t> dist(
        0, (std::uint64_t{1} << t.ground_size()) - 1);
    for (int round = 0; round < 16; ++round) {
      Bits a(static_cast<std::size_t>(t.ground_size()));
      const std::uint64_t mask = dist(rng);
      for (int i = 0; i < t.ground_size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) {
          a.set(static_cast<std::size_t>(i));
        }
      }
      const Bits cl = t.closure(a);
      CHECK(cl == closure_oracle(t, a));
      CHECK(t.interior(a) == interior_oracle(t, a));
      CHECK(a.is_subset_of(cl));
      CHECK(t.closure(cl) == cl);
      CHECK(t.interior(a) == ~t.closure(~a));
      Bits b = a;
      if (b.any()) {
        b.reset(b.find_first());
        CHECK(t.closure(b).is_subset_of(cl));
      }
    }
  }
}

TEST_CASE("separation flags on the worked examples") {
  const SeparationFlags ex21 = ex21_topology().separation();
  CHECK(!ex21.t0);  // 2 and 4 share their minimal neighborhood
  CHECK(!ex21.t2);
  CHECK(!ex21.discrete);

  const SeparationFlags disc = FinTopology::discrete(4).separation();
  CHECK(disc.t0);
  CHECK(disc.t1);
  CHECK(disc.t2);
  CHECK(disc.regular);
  CHECK(disc.completely_regular);
  CHECK(disc.normal);
  CHECK(disc.discrete);
  CHECK(disc.locally_connected);
  CHECK(!disc.connected);

  const SeparationFlags z6 = z6_three_atom_topology().separation();
  CHECK(!z6.connected);  // {0} is clopen there
  CHECK(FinTopology::indiscrete(3).separation().connected);
}

TEST_CASE("separation flags match the literal quantifier oracles") {
  for (const auto& [name, inst] : build_corpus()) {
    const FinTopology& t = inst.top();
    if (t.open_count() > 64) {
      continue;
    }
    CAPTURE(name);
    const SeparationFlags f = t.separation();
    CHECK(f.t2 == t2_literal(t));
    CHECK(f.regular == regular_literal(t));
    CHECK(f.normal == normal_literal(t));
  }
}

TEST_CASE("separation flag implications across the corpus") {
  for (const auto& [name, inst] : build_corpus()) {
    CAPTURE(name);
    const SeparationFlags f = inst.top().separation();
    if (f.t2) {
      CHECK(f.t1);
    }
    if (f.t1) {
      CHECK(f.t0);
    }
    CHECK(f.t1 == f.discrete);  // finite spaces
    if (f.discrete) {
      CHECK(f.t2);
      CHECK(f.regular);
      CHECK(f.completely_regular);
      CHECK(f.normal);
    }
  }
}

TEST_CASE("alexandrov property") {
  for (const auto& [name, inst] : build_corpus()) {
    const FinTopology& t = inst.top();
    if (t.open_count() > 512) {
      continue;
    }
    CAPTURE(name);
    for (int x = 0; x < t.ground_size(); ++x) {
      CHECK(t.is_open(t.min_nbhd(x)));
      for (const Bits& u : t.opens()) {
        if (u.test(static_cast<std::size_t>(x))) {
          CHECK(t.min_nbhd(x).is_subset_of(u));
        }
      }
    }
    // A set is open iff it contains the minimal neighborhood of each of
    // its points.
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint64_t> dist(
        0, (std::uint64_t{1} << t.ground_size()) - 1);
    for (int round = 0; round < 32; ++round) {
      Bits a(static_cast<std::size_t>(t.ground_size()));
      const std::uint64_t mask = dist(rng);
      for (int i = 0; i < t.ground_size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) {
          a.set(static_cast<std::size_t>(i));
        }
      }
      bool alexandrov_open = true;
      for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x)) {
        alexandrov_open = alexandrov_open && t.min_nbhd(static_cast<int>(x)).is_subset_of(a);
      }
      CHECK(t.is_open(a) == alexandrov_open);
    }
  }
}

TEST_CASE("opens closed under union and intersection") {
  std::mt19937 rng(13);
  for (const auto& [name, inst] : build_corpus()) {
    const FinTopology& t = inst.top();
    CAPTURE(name);
    std::uniform_int_distribution<std::size_t> pick(0, t.open_count() - 1);
    for (int round = 0; round < 64; ++round) {
      const Bits& u = t.opens()[pick(rng)];
      const Bits& v = t.opens()[pick(rng)];
      CHECK(t.is_open(u | v));
      CHECK(t.is_open(u & v));
    }
  }
}

TEST_CASE("subspace, product and quotient") {
  const FinTopology t = ex21_topology();
  const FinTopology sub = subspace_topology(t, make_bits(10, {0, 1, 5, 6}));
  CHECK(sub.ground_size() == 4);
  CHECK(sub.separation().discrete);

  const FinTopology ind2 = FinTopology::indiscrete(2);
  const FinTopology prod = product_topology(ind2, ind2);
  CHECK(prod.ground_size() == 4);
  CHECK(prod.open_count() == 2);

  // Product of discrete spaces is discrete.
  CHECK(product_topology(FinTopology::discrete(2), FinTopology::discrete(3))
            .separation()
            .discrete);

  // Quotient of the three-atom Z6 topology by the H-partition: the class
  // {1,5} is not open, so only {c0}, {c3} and the union {c1,c2} survive.
  const FinTopology z6 = z6_three_atom_topology();
  const Partition h = Partition::from_blocks(6, {{0}, {1, 5}, {2, 4}, {3}});
  const FinTopology q = quotient_topology(z6, h);
  // Blocks by minimal member: c0={0}, c1={1,5}, c2={2,4}, c3={3}.
  std::vector<Bits> expected = {Bits(4),
                                make_bits(4, {0}),
                                make_bits(4, {3}),
                                make_bits(4, {0, 3}),
                                make_bits(4, {1, 2}),
                                make_bits(4, {0, 1, 2}),
                                make_bits(4, {1, 2, 3}),
                                make_bits(4, {0, 1, 2, 3})};
  std::sort(expected.begin(), expected.end());
  CHECK(q.opens() == expected);
  CHECK(!q.is_open(make_bits(4, {1})));

  // Quotient by singletons is the identity up to re-indexing.
  const FinTopology qid = quotient_topology(z6, Partition::singletons(6));
  CHECK(qid == z6);
}

TEST_CASE("product openness oracle basics") {
  const FinTopology d2 = FinTopology::discrete(2);
  Bits diag(4);
  diag.set(0);
  diag.set(3);
  CHECK(is_open_in_product(d2, d2, diag));
  const FinTopology i2 = FinTopology::indiscrete(2);
  CHECK(!is_open_in_product(i2, i2, diag));
  CHECK(is_open_in_product(i2, i2, Bits(4)));
}
