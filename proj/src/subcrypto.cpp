#include "semitop/subcrypto.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semitop/error.hpp"

namespace semitop {

namespace {

bool closed_under_product(const FinSemigroup& s, const Bits& k) {
  for (auto x = k.find_first(); x != Bits::npos; x = k.find_next(x)) {
    for (auto y = k.find_first(); y != Bits::npos; y = k.find_next(y)) {
      if (!k.test(static_cast<std::size_t>(s.product(static_cast<int>(x), static_cast<int>(y))))) {
        return false;
      }
    }
  }
  return true;
}

bool closed_under_inverse(const HStructure& h, const Bits& k) {
  for (auto x = k.find_first(); x != Bits::npos; x = k.find_next(x)) {
    if (!k.test(static_cast<std::size_t>(h.inverse_of(static_cast<int>(x))))) {
      return false;
    }
  }
  return true;
}

bool is_normal_subset(const FinSemigroup& s, const HStructure& h, const Bits& k) {
  for (int t = 0; t < s.size(); ++t) {
    const int ti = h.inverse_of(t);
    for (auto x = k.find_first(); x != Bits::npos; x = k.find_next(x)) {
      if (!k.test(static_cast<std::size_t>(s.product(s.product(t, static_cast<int>(x)), ti)))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

// BFS over generated subgroups.
std::vector<Bits> subgroups_of_h_class(const FinSemigroup& s, const HStructure& h, int block) {
  const std::vector<int>& members = h.h.block(block);
  const std::size_t n = static_cast<std::size_t>(s.size());
  const int e = h.idem_of_class[static_cast<std::size_t>(block)];

  auto generate = [&](Bits seed) {
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<int> cur = members_of(seed);
      for (int x : cur) {
        for (int y : cur) {
          const std::size_t p = static_cast<std::size_t>(s.product(x, y));
          if (!seed.test(p)) {
            seed.set(p);
            grew = true;
          }
        }
      }
    }
    return seed;
  };

  std::set<Bits> found;
  std::vector<Bits> queue;
  Bits trivial(n);
  trivial.set(static_cast<std::size_t>(e));
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    Bits g = queue.back();
    queue.pop_back();
    for (int m : members) {
      if (g.test(static_cast<std::size_t>(m))) {
        continue;
      }
      Bits bigger = g;
      bigger.set(static_cast<std::size_t>(m));
      bigger = generate(std::move(bigger));
      if (found.insert(bigger).second) {
        queue.push_back(bigger);
      }
    }
  }
  return std::vector<Bits>(found.begin(), found.end());
}

bool is_subcryptogroup_subset(const FinSemigroup& s, const HStructure& h, const Bits& k) {
  return k.any() && closed_under_product(s, k) && closed_under_inverse(h, k);
}

bool is_full_normal_subcryptogroup(const FinSemigroup& s, const HStructure& h, const Bits& k) {
  return s.idempotent_set().is_subset_of(k) && closed_under_product(s, k)
         && closed_under_inverse(h, k) && is_normal_subset(s, h, k);
}

SubcryptoRecord subcrypto_flags(const TopoSemigroup& ts, const Bits& k) {
  if (!ts.is_cryptogroup()) {
    throw Error("NotCryptogroup: subcryptogroup flags need a cryptogroup");
  }
  if (k.size() != static_cast<std::size_t>(ts.size())) {
    throw Error("SubsetOutOfRange: subset over wrong ground size");
  }
  const HStructure& h = ts.h();
  SubcryptoRecord r;
  r.subset = k;
  r.is_subcryptogroup = k.any() && closed_under_product(ts.sgp(), k) && closed_under_inverse(h, k);
  r.is_full = ts.idempotents().is_subset_of(k);
  r.is_normal = is_normal_subset(ts.sgp(), h, k);
  r.is_open = ts.top().is_open(k);
  r.is_closed = ts.top().is_closed(k);
  r.is_discrete_subspace = k.none() || subspace_topology(ts.top(), k).separation().discrete;
  return r;
}

std::vector<Bits> full_subcryptogroup_subsets(const FinSemigroup& s, bool only_normal, int cap) {
  if (s.size() > cap) {
    throw Error("TooLarge: enumeration capped at n = " + std::to_string(cap));
  }
  if (!s.classify().is_cryptogroup) {
    throw Error("NotCryptogroup: enumeration needs a cryptogroup");
  }
  const HStructure h = h_structure(s);
  const int blocks = h.h.block_count();
  std::vector<std::vector<Bits>> lattice;
  lattice.reserve(static_cast<std::size_t>(blocks));
  for (int b = 0; b < blocks; ++b) {
    lattice.push_back(subgroups_of_h_class(s, h, b));
  }

  std::vector<Bits> out;
  std::vector<std::size_t> choice(static_cast<std::size_t>(blocks), 0);
  while (true) {
    Bits candidate(static_cast<std::size_t>(s.size()));
    for (int b = 0; b < blocks; ++b) {
      candidate |= lattice[static_cast<std::size_t>(b)][choice[static_cast<std::size_t>(b)]];
    }
    if (closed_under_product(s, candidate)
        && (!only_normal || is_normal_subset(s, h, candidate))) {
      out.push_back(std::move(candidate));
    }
    int b = 0;
    for (; b < blocks; ++b) {
      if (++choice[static_cast<std::size_t>(b)] < lattice[static_cast<std::size_t>(b)].size()) {
        break;
      }
      choice[static_cast<std::size_t>(b)] = 0;
    }
    if (b == blocks) {
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubcryptoRecord> enumerate_full_subcryptogroups(const TopoSemigroup& ts,
                                                            bool only_normal, int cap) {
  std::vector<SubcryptoRecord> out;
  for (const Bits& k : full_subcryptogroup_subsets(ts.sgp(), only_normal, cap)) {
    out.push_back(subcrypto_flags(ts, k));
  }
  return out;
}

RhoN rho_n(const FinSemigroup& s, const Bits& n) {
  if (n.size() != static_cast<std::size_t>(s.size())) {
    throw Error("SubsetOutOfRange: subset over wrong ground size");
  }
  if (!s.classify().is_cryptogroup) {
    throw Error("NotCryptogroup: rho_N needs a cryptogroup");
  }
  const HStructure h = h_structure(s);
  if (!is_full_normal_subcryptogroup(s, h, n)) {
    throw Error("NotFullNormalSubcryptogroup: " + bits_to_string(n));
  }
  std::vector<Bits> star(static_cast<std::size_t>(s.size()));
  for (int x = 0; x < s.size(); ++x) {
    star[static_cast<std::size_t>(x)] = star_xu(s, h, x, n);
  }
  // The star sets are the classes of an equivalence; sanity-check before
  // treating them as a partition.
  std::vector<int> cls(static_cast<std::size_t>(s.size()), -1);
  std::map<Bits, int> labels;
  for (int x = 0; x < s.size(); ++x) {
    const Bits& c = star[static_cast<std::size_t>(x)];
    if (!c.test(static_cast<std::size_t>(x))) {
      throw Error("OracleMismatch: rho_N class misses its own representative");
    }
    for (auto y = c.find_first(); y != Bits::npos; y = c.find_next(y)) {
      if (star[y] != c) {
        throw Error("OracleMismatch: rho_N star sets do not form a partition");
      }
    }
    auto it = labels.emplace(c, static_cast<int>(labels.size())).first;
    cls[static_cast<std::size_t>(x)] = it->second;
  }
  Partition p(s.size(), cls);
  if (!s.is_congruence(p)) {
    throw Error("OracleMismatch: rho_N is not a congruence");
  }
  FinSemigroup quotient = s.quotient(p).first;
  if (!quotient.classify().is_cryptogroup) {
    throw Error("OracleMismatch: quotient by rho_N is not a cryptogroup");
  }
  // E(S/N) = {(xN)* : x in N}.
  Bits expected(static_cast<std::size_t>(p.block_count()));
  for (auto x = n.find_first(); x != Bits::npos; x = n.find_next(x)) {
    expected.set(static_cast<std::size_t>(p.block_of(static_cast<int>(x))));
  }
  if (expected != quotient.idempotent_set()) {
    throw Error("OracleMismatch: E(S/N) is not the image of N");
  }
  return RhoN{n, std::move(p)};
}

QuotientByN quotient_by_n(const TopoSemigroup& ts, const Bits& n) {
  if (!classify_topological(ts).is_botg_criterion) {
    throw Error("PreconditionViolated: quotient by N needs a band of topological groups");
  }
  RhoN rho = rho_n(ts.sgp(), n);
  auto [qsgp, projection] = ts.sgp().quotient(rho.partition);
  FinTopology qtop = quotient_topology(ts.top(), rho.partition);
  TopoSemigroup instance(std::move(qsgp), std::move(qtop));
  if (!classify_topological(instance).is_botg_criterion) {
    throw Error("OracleMismatch: quotient instance is not a band of topological groups");
  }
  // The projection maps H-classes onto H-classes.
  const Partition& hs = ts.h().h;
  const Partition& hq = instance.h().h;
  for (int b = 0; b < hs.block_count(); ++b) {
    Bits image(static_cast<std::size_t>(instance.size()));
    for (int m : hs.block(b)) {
      image.set(static_cast<std::size_t>(projection[static_cast<std::size_t>(m)]));
    }
    const int rep = projection[static_cast<std::size_t>(hs.block(b).front())];
    if (image != hq.block_bits(hq.block_of(rep))) {
      throw Error("OracleMismatch: projection does not map H-classes onto H-classes");
    }
  }
  return QuotientByN{std::move(instance), std::move(projection), std::move(rho)};
}

HausdorffTriple hausdorff_equivalence(const TopoSemigroup& ts, const Bits& n) {
  QuotientByN q = quotient_by_n(ts, n);
  HausdorffTriple triple;
  triple.quotient_hausdorff = q.instance.top().separation().t2;

  const std::size_t sz = static_cast<std::size_t>(ts.size());
  Bits complement(sz * sz);
  for (int a = 0; a < ts.size(); ++a) {
    for (int b = 0; b < ts.size(); ++b) {
      if (!q.rho.partition.same_block(a, b)) {
        complement.set(static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b));
      }
    }
  }
  triple.rho_closed = is_open_in_product(ts.top(), ts.top(), complement);

  triple.n_closed = ts.top().closure(n) == n;
  return triple;
}

bool u_disjoint(const TopoSemigroup& ts, const Bits& a, const Bits& u) {
  for (auto p = a.find_first(); p != Bits::npos; p = a.find_next(p)) {
    const Bits star = star_xu(ts, static_cast<int>(p), u);
    for (auto q = a.find_first(); q != Bits::npos; q = a.find_next(q)) {
      if (p != q && star.test(q)) {
        return false;
      }
    }
  }
  return true;
}

bool discrete_family_check(const TopoSemigroup& ts, const Bits& a, const Bits& u, const Bits& v) {
  if (!classify_topological(ts).is_botg_criterion) {
    throw Error("HypothesisViolated: ambient space is not a band of topological groups");
  }
  const Bits e = ts.idempotents();
  if (!ts.top().is_open(u)) {
    throw Error("HypothesisViolated: U is not open");
  }
  if (!ts.top().is_open(v)) {
    throw Error("HypothesisViolated: V is not open");
  }
  if (!e.is_subset_of(u) || !e.is_subset_of(v)) {
    throw Error("HypothesisViolated: U and V must contain E(S)");
  }
  if (ts.inverse_set(v) != v) {
    throw Error("HypothesisViolated: V is not symmetric");
  }
  const FinSemigroup& s = ts.sgp();
  const Bits v2 = s.product_set(v, v);
  if (!s.product_set(v2, v2).is_subset_of(u)) {
    throw Error("HypothesisViolated: V^4 is not inside U");
  }

  std::set<Bits> family;
  for (auto p = a.find_first(); p != Bits::npos; p = a.find_next(p)) {
    family.insert(star_xu(ts, static_cast<int>(p), v));
  }
  bool discrete = true;
  for (int x = 0; x < ts.size() && discrete; ++x) {
    int met = 0;
    for (const Bits& member : family) {
      if (ts.top().min_nbhd(x).intersects(member) && ++met > 1) {
        discrete = false;
        break;
      }
    }
  }
  if (!discrete && u_disjoint(ts, a, u)) {
    throw Error("OracleMismatch: U-disjoint family failed to be discrete");
  }
  return discrete;
}

}  // namespace semitop
