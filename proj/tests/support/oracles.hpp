#pragma once

// Brute-force oracles for the test suites. These deliberately avoid the
// library's computation paths: principal ideals are compared pairwise as
// ordered sets, inverses are found through idempotent powers, closures by
// intersecting closed supersets, and separation axioms by literal
// quantification over pairs of opens.

#include <set>
#include <vector>

#include "semitop/semigroup.hpp"
#include "semitop/topo_semigroup.hpp"
#include "semitop/topology.hpp"

namespace semitop::testing {

struct GreenOracle {
  std::vector<int> l_class;
  std::vector<int> r_class;
  std::vector<int> h_class;
};

inline GreenOracle green_oracle(const FinSemigroup& s) {
  const int n = s.size();
  std::vector<std::set<int>> left(static_cast<std::size_t>(n));
  std::vector<std::set<int>> right(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    left[static_cast<std::size_t>(a)].insert(a);
    right[static_cast<std::size_t>(a)].insert(a);
    for (int x = 0; x < n; ++x) {
      left[static_cast<std::size_t>(a)].insert(s.product(x, a));
      right[static_cast<std::size_t>(a)].insert(s.product(a, x));
    }
  }
  GreenOracle g;
  g.l_class.assign(static_cast<std::size_t>(n), -1);
  g.r_class.assign(static_cast<std::size_t>(n), -1);
  g.h_class.assign(static_cast<std::size_t>(n), -1);
  int nl = 0;
  int nr = 0;
  int nh = 0;
  for (int a = 0; a < n; ++a) {
    if (g.l_class[static_cast<std::size_t>(a)] == -1) {
      const int label = nl++;
      for (int b = a; b < n; ++b) {
        if (left[static_cast<std::size_t>(b)] == left[static_cast<std::size_t>(a)]) {
          g.l_class[static_cast<std::size_t>(b)] = label;
        }
      }
    }
    if (g.r_class[static_cast<std::size_t>(a)] == -1) {
      const int label = nr++;
      for (int b = a; b < n; ++b) {
        if (right[static_cast<std::size_t>(b)] == right[static_cast<std::size_t>(a)]) {
          g.r_class[static_cast<std::size_t>(b)] = label;
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.h_class[static_cast<std::size_t>(a)] == -1) {
      const int label = nh++;
      for (int b = a; b < n; ++b) {
        if (g.l_class[static_cast<std::size_t>(b)] == g.l_class[static_cast<std::size_t>(a)]
            && g.r_class[static_cast<std::size_t>(b)] == g.r_class[static_cast<std::size_t>(a)]) {
          g.h_class[static_cast<std::size_t>(b)] = label;
        }
      }
    }
  }
  return g;
}

// In a finite cryptogroup the inverse lies among the powers: after the
// smallest m with x^m idempotent, x^-1 = x^(m-1) (or x itself when x is
// idempotent).
inline int inverse_by_powers(const FinSemigroup& s, int x) {
  int power = x;
  int m = 1;
  while (s.product(power, power) != power) {
    power = s.product(power, x);
    ++m;
  }
  if (m == 1) {
    return x;
  }
  int inv = x;
  for (int i = 2; i <= m - 1; ++i) {
    inv = s.product(inv, x);
  }
  return inv;
}

// Exhaustive full-subcryptogroup scan. Closure under product already
// forces closure under inverse at finite scale (the inverse is a power),
// so the membership test is E(S) inside K and K closed under product.
inline std::vector<Bits> exhaustive_full_subcryptogroups(const FinSemigroup& s,
                                                         bool only_normal) {
  const int n = s.size();
  const Bits idems = s.idempotent_set();
  std::vector<Bits> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bits k(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        k.set(static_cast<std::size_t>(i));
      }
    }
    if (!idems.is_subset_of(k)) {
      continue;
    }
    bool closed = true;
    for (auto a = k.find_first(); a != Bits::npos && closed; a = k.find_next(a)) {
      for (auto b = k.find_first(); b != Bits::npos; b = k.find_next(b)) {
        if (!k.test(static_cast<std::size_t>(
                s.product(static_cast<int>(a), static_cast<int>(b))))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) {
      continue;
    }
    if (only_normal) {
      bool normal = true;
      for (int t = 0; t < n && normal; ++t) {
        const int ti = inverse_by_powers(s, t);
        for (auto a = k.find_first(); a != Bits::npos; a = k.find_next(a)) {
          if (!k.test(static_cast<std::size_t>(
                  s.product(s.product(t, static_cast<int>(a)), ti)))) {
            normal = false;
            break;
          }
        }
      }
      if (!normal) {
        continue;
      }
    }
    out.push_back(std::move(k));
  }
  return out;
}

// Smallest closed superset, straight from the closed-sets list.
inline Bits closure_oracle(const FinTopology& t, const Bits& a) {
  Bits out(static_cast<std::size_t>(t.ground_size()));
  out.set();
  for (const Bits& c : t.closed_sets()) {
    if (a.is_subset_of(c)) {
      out &= c;
    }
  }
  return out;
}

inline Bits interior_oracle(const FinTopology& t, const Bits& a) {
  return ~closure_oracle(t, ~a);
}

// Literal pairwise-open quantification for the separation axioms.
inline bool t2_literal(const FinTopology& t) {
  for (int x = 0; x < t.ground_size(); ++x) {
    for (int y = x + 1; y < t.ground_size(); ++y) {
      bool separated = false;
      for (const Bits& u : t.opens()) {
        if (!u.test(static_cast<std::size_t>(x))) {
          continue;
        }
        for (const Bits& v : t.opens()) {
          if (v.test(static_cast<std::size_t>(y)) && !u.intersects(v)) {
            separated = true;
            break;
          }
        }
        if (separated) {
          break;
        }
      }
      if (!separated) {
        return false;
      }
    }
  }
  return true;
}

inline bool regular_literal(const FinTopology& t) {
  for (int x = 0; x < t.ground_size(); ++x) {
    for (const Bits& closed : t.closed_sets()) {
      if (closed.test(static_cast<std::size_t>(x))) {
        continue;
      }
      bool separated = false;
      for (const Bits& u : t.opens()) {
        if (!u.test(static_cast<std::size_t>(x))) {
          continue;
        }
        for (const Bits& v : t.opens()) {
          if (closed.is_subset_of(v) && !u.intersects(v)) {
            separated = true;
            break;
          }
        }
        if (separated) {
          break;
        }
      }
      if (!separated) {
        return false;
      }
    }
  }
  return true;
}

inline bool normal_literal(const FinTopology& t) {
  const std::vector<Bits> closed = t.closed_sets();
  for (const Bits& a : closed) {
    for (const Bits& b : closed) {
      if (a.intersects(b)) {
        continue;
      }
      bool separated = false;
      for (const Bits& u : t.opens()) {
        if (!a.is_subset_of(u)) {
          continue;
        }
        for (const Bits& v : t.opens()) {
          if (b.is_subset_of(v) && !u.intersects(v)) {
            separated = true;
            break;
          }
        }
        if (separated) {
          break;
        }
      }
      if (!separated) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace semitop::testing
