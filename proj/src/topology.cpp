#include "semitop/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "semitop/error.hpp"

namespace semitop {

namespace {

bool family_contains(const std::vector<Bits>& sorted_family, const Bits& a) {
  auto it = std::lower_bound(sorted_family.begin(), sorted_family.end(), a);
  return it != sorted_family.end() && *it == a;
}

std::vector<Bits> canonicalize(std::vector<Bits> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

// Closure of `seed` under pairwise union, with a size guard.
std::vector<Bits> close_under_union(std::vector<Bits> seed, std::size_t max_size) {
  std::set<Bits> result(seed.begin(), seed.end());
  std::deque<Bits> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    Bits p = pending.front();
    pending.pop_front();
    std::vector<Bits> fresh;
    for (const Bits& r : result) {
      Bits u = p | r;
      if (result.find(u) == result.end()) {
        fresh.push_back(std::move(u));
      }
    }
    for (Bits& u : fresh) {
      if (result.size() >= max_size) {
        throw Error("TooLarge: open-set family exceeds cap " + std::to_string(max_size));
      }
      if (result.insert(u).second) {
        pending.push_back(std::move(u));
      }
    }
  }
  return std::vector<Bits>(result.begin(), result.end());
}

std::vector<Bits> close_under_intersection(std::vector<Bits> seed, std::size_t max_size) {
  std::set<Bits> result(seed.begin(), seed.end());
  std::deque<Bits> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    Bits p = pending.front();
    pending.pop_front();
    std::vector<Bits> fresh;
    for (const Bits& r : result) {
      Bits u = p & r;
      if (result.find(u) == result.end()) {
        fresh.push_back(std::move(u));
      }
    }
    for (Bits& u : fresh) {
      if (result.size() >= max_size) {
        throw Error("TooLarge: base family exceeds cap " + std::to_string(max_size));
      }
      if (result.insert(u).second) {
        pending.push_back(std::move(u));
      }
    }
  }
  return std::vector<Bits>(result.begin(), result.end());
}

std::vector<Bits> minimal_neighborhoods(int n, const std::vector<Bits>& opens) {
  std::vector<Bits> min_nbhd;
  min_nbhd.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    Bits m(static_cast<std::size_t>(n));
    m.set();
    for (const Bits& u : opens) {
      if (u.test(static_cast<std::size_t>(x))) {
        m &= u;
      }
    }
    min_nbhd.push_back(std::move(m));
  }
  return min_nbhd;
}

}  // namespace

FinTopology FinTopology::from_opens(int n, std::vector<Bits> opens) {
  if (n < 0) {
    throw Error("BadParams: negative ground-set size");
  }
  for (const Bits& u : opens) {
    if (static_cast<int>(u.size()) != n) {
      throw Error("SubsetOutOfRange: open set over wrong ground size");
    }
  }
  Bits empty(static_cast<std::size_t>(n));
  Bits full(static_cast<std::size_t>(n));
  full.set();
  opens.push_back(empty);
  opens.push_back(full);
  opens = canonicalize(std::move(opens));

  // Topology axioms. Since every open is a union of minimal neighborhoods,
  // closure under union and intersection reduces to closure against the
  // minimal base, which keeps validation near-linear in the family size.
  std::vector<Bits> min_nbhd = minimal_neighborhoods(n, opens);
  for (int x = 0; x < n; ++x) {
    if (!family_contains(opens, min_nbhd[static_cast<std::size_t>(x)])) {
      throw Error("BadParams: family is not a topology (minimal neighborhood of "
                  + std::to_string(x) + " is not open)");
    }
  }
  for (const Bits& u : opens) {
    for (int x = 0; x < n; ++x) {
      if (!family_contains(opens, u | min_nbhd[static_cast<std::size_t>(x)])
          || !family_contains(opens, u & min_nbhd[static_cast<std::size_t>(x)])) {
        throw Error("BadParams: family is not closed under union/intersection");
      }
    }
  }
  return FinTopology(n, std::move(opens), std::move(min_nbhd));
}

FinTopology FinTopology::generate(int n, const std::vector<Bits>& subbase) {
  for (const Bits& s : subbase) {
    if (static_cast<int>(s.size()) != n) {
      throw Error("SubsetOutOfRange: subbase set over wrong ground size");
    }
  }
  Bits full(static_cast<std::size_t>(n));
  full.set();
  std::vector<Bits> base = subbase;
  base.push_back(full);
  base = close_under_intersection(canonicalize(std::move(base)), kDefaultOpensCap);
  Bits empty(static_cast<std::size_t>(n));
  base.push_back(empty);
  std::vector<Bits> opens = close_under_union(canonicalize(std::move(base)), kDefaultOpensCap);
  return from_opens(n, std::move(opens));
}

FinTopology FinTopology::discrete(int n) {
  std::vector<Bits> singletons;
  singletons.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    singletons.push_back(make_bits(static_cast<std::size_t>(n), {x}));
  }
  return generate(n, singletons);
}

FinTopology FinTopology::indiscrete(int n) {
  return generate(n, {});
}

bool FinTopology::is_open(const Bits& a) const {
  return family_contains(opens_, a);
}

bool FinTopology::is_closed(const Bits& a) const {
  return is_open(~a);
}

Bits FinTopology::closure(const Bits& a) const {
  Bits out(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    if (min_nbhd(x).intersects(a)) {
      out.set(static_cast<std::size_t>(x));
    }
  }
  return out;
}

Bits FinTopology::interior(const Bits& a) const {
  Bits out(static_cast<std::size_t>(n_));
  for (const Bits& u : opens_) {
    if (u.is_subset_of(a)) {
      out |= u;
    }
  }
  return out;
}

bool FinTopology::is_dense(const Bits& d) const {
  return closure(d).count() == static_cast<std::size_t>(n_);
}

std::vector<Bits> FinTopology::closed_sets() const {
  std::vector<Bits> out;
  out.reserve(opens_.size());
  for (const Bits& u : opens_) {
    out.push_back(~u);
  }
  return canonicalize(std::move(out));
}

bool FinTopology::is_connected() const {
  for (const Bits& u : opens_) {
    if (u.any() && u.count() < static_cast<std::size_t>(n_) && is_closed(u)) {
      return false;
    }
  }
  return true;
}

bool FinTopology::is_connected_subset(const Bits& a) const {
  if (a.none()) {
    return true;
  }
  std::set<Bits> traces;
  for (const Bits& u : opens_) {
    traces.insert(u & a);
  }
  for (const Bits& p : traces) {
    if (p.any() && p != a && traces.count(a - p) > 0) {
      return false;
    }
  }
  return true;
}

SeparationFlags FinTopology::separation() const {
  SeparationFlags f;
  for (const Bits& u : opens_) {
    if (is_closed(u)) {
      f.clopens.push_back(u);
    }
  }

  f.discrete = true;
  for (int x = 0; x < n_ && f.discrete; ++x) {
    f.discrete = min_nbhd(x).count() == 1;
  }

  f.t0 = true;
  for (int x = 0; x < n_ && f.t0; ++x) {
    for (int y = x + 1; y < n_ && f.t0; ++y) {
      bool separated = false;
      for (const Bits& u : opens_) {
        if (u.test(static_cast<std::size_t>(x)) != u.test(static_cast<std::size_t>(y))) {
          separated = true;
          break;
        }
      }
      f.t0 = separated;
    }
  }

  f.t1 = true;
  for (int x = 0; x < n_ && f.t1; ++x) {
    for (int y = 0; y < n_ && f.t1; ++y) {
      if (x == y) {
        continue;
      }
      // Some open contains x but not y; the minimal one witnesses.
      f.t1 = !min_nbhd(x).test(static_cast<std::size_t>(y));
    }
  }

  f.t2 = true;
  for (int x = 0; x < n_ && f.t2; ++x) {
    for (int y = x + 1; y < n_ && f.t2; ++y) {
      // Disjoint opens exist iff the minimal neighborhoods are disjoint.
      f.t2 = !min_nbhd(x).intersects(min_nbhd(y));
    }
  }

  const std::vector<Bits> closed = closed_sets();

  // Regular: separating x from closed F by disjoint opens succeeds iff the
  // union of all opens missing min_nbhd(x) already covers F.
  f.regular = true;
  for (int x = 0; x < n_ && f.regular; ++x) {
    Bits reach(static_cast<std::size_t>(n_));
    for (const Bits& u : opens_) {
      if (!u.intersects(min_nbhd(x))) {
        reach |= u;
      }
    }
    for (const Bits& c : closed) {
      if (!c.test(static_cast<std::size_t>(x)) && !c.is_subset_of(reach)) {
        f.regular = false;
        break;
      }
    }
  }

  // Completely regular, decided through clopen separation: a continuous map
  // from a finite space to [0,1] has finite image, so a value gap yields a
  // clopen separator, and conversely a clopen indicator is such a map.
  // The smallest clopen containing x decides every pair (x, F).
  f.completely_regular = true;
  {
    std::vector<Bits> quasi(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) {
      Bits q(static_cast<std::size_t>(n_));
      q.set();
      for (const Bits& c : f.clopens) {
        if (c.test(static_cast<std::size_t>(x))) {
          q &= c;
        }
      }
      quasi[static_cast<std::size_t>(x)] = std::move(q);
    }
    for (int x = 0; x < n_ && f.completely_regular; ++x) {
      for (const Bits& c : closed) {
        if (!c.test(static_cast<std::size_t>(x))
            && quasi[static_cast<std::size_t>(x)].intersects(c)) {
          f.completely_regular = false;
          break;
        }
      }
    }
  }

  // Normal: the minimal open around a set A is the union of its members'
  // minimal neighborhoods; two closed sets are separable iff those are
  // disjoint.
  f.normal = true;
  {
    auto hull = [this](const Bits& a) {
      Bits h(static_cast<std::size_t>(n_));
      for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x)) {
        h |= min_nbhd(static_cast<int>(x));
      }
      return h;
    };
    for (std::size_t i = 0; i < closed.size() && f.normal; ++i) {
      for (std::size_t j = i + 1; j < closed.size() && f.normal; ++j) {
        if (!closed[i].intersects(closed[j]) && hull(closed[i]).intersects(hull(closed[j]))) {
          f.normal = false;
        }
      }
    }
  }

  f.connected = is_connected();

  f.locally_connected = true;
  for (int x = 0; x < n_ && f.locally_connected; ++x) {
    f.locally_connected = is_connected_subset(min_nbhd(x));
  }

  return f;
}

FinTopology product_topology(const FinTopology& t1, const FinTopology& t2,
                             std::size_t max_opens) {
  const int n1 = t1.ground_size();
  const int n2 = t2.ground_size();
  const std::size_t n = static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2);
  std::vector<Bits> base;
  base.reserve(n + 1);
  for (int x = 0; x < n1; ++x) {
    for (int y = 0; y < n2; ++y) {
      Bits rect(n);
      const Bits& mx = t1.min_nbhd(x);
      const Bits& my = t2.min_nbhd(y);
      for (auto a = mx.find_first(); a != Bits::npos; a = mx.find_next(a)) {
        for (auto b = my.find_first(); b != Bits::npos; b = my.find_next(b)) {
          rect.set(a * static_cast<std::size_t>(n2) + b);
        }
      }
      base.push_back(std::move(rect));
    }
  }
  base.push_back(Bits(n));
  std::vector<Bits> opens = close_under_union(canonicalize(std::move(base)), max_opens);
  return FinTopology::from_opens(static_cast<int>(n), std::move(opens));
}

FinTopology subspace_topology(const FinTopology& t, const Bits& a) {
  if (static_cast<int>(a.size()) != t.ground_size()) {
    throw Error("SubsetOutOfRange: subspace carrier over wrong ground size");
  }
  const std::vector<int> points = members_of(a);
  std::vector<int> new_index(static_cast<std::size_t>(t.ground_size()), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    new_index[static_cast<std::size_t>(points[i])] = static_cast<int>(i);
  }
  std::vector<Bits> traces;
  for (const Bits& u : t.opens()) {
    Bits trace(points.size());
    for (auto x = u.find_first(); x != Bits::npos; x = u.find_next(x)) {
      if (a.test(x)) {
        trace.set(static_cast<std::size_t>(new_index[x]));
      }
    }
    traces.push_back(std::move(trace));
  }
  return FinTopology::from_opens(static_cast<int>(points.size()), std::move(traces));
}

FinTopology quotient_topology(const FinTopology& t, const Partition& p) {
  if (p.ground_size() != t.ground_size()) {
    throw Error("BadPartition: partition ground set differs from topology");
  }
  const int m = p.block_count();
  std::vector<Bits> opens;
  for (const Bits& u : t.opens()) {
    // Keep the saturated opens (unions of blocks); these are exactly the
    // preimages of quotient opens.
    bool saturated = true;
    Bits image(static_cast<std::size_t>(m));
    for (auto x = u.find_first(); x != Bits::npos && saturated; x = u.find_next(x)) {
      const int b = p.block_of(static_cast<int>(x));
      saturated = p.block_bits(b).is_subset_of(u);
      image.set(static_cast<std::size_t>(b));
    }
    if (saturated) {
      opens.push_back(std::move(image));
    }
  }
  return FinTopology::from_opens(m, std::move(opens));
}

bool is_open_in_product(const FinTopology& t1, const FinTopology& t2, const Bits& pairs) {
  const int n1 = t1.ground_size();
  const int n2 = t2.ground_size();
  const std::size_t n = static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2);
  if (pairs.size() != n) {
    throw Error("SubsetOutOfRange: pair set over wrong ground size");
  }
  if (pairs.none()) {
    return true;
  }
  Bits covered(n);
  for (const Bits& u : t1.opens()) {
    if (u.none()) {
      continue;
    }
    // Columns y whose full strip U x {y} lies inside `pairs`.
    Bits cols(static_cast<std::size_t>(n2));
    cols.set();
    for (auto x = u.find_first(); x != Bits::npos && cols.any(); x = u.find_next(x)) {
      Bits row(static_cast<std::size_t>(n2));
      for (int y = 0; y < n2; ++y) {
        if (pairs.test(x * static_cast<std::size_t>(n2) + static_cast<std::size_t>(y))) {
          row.set(static_cast<std::size_t>(y));
        }
      }
      cols &= row;
    }
    if (cols.none()) {
      continue;
    }
    const Bits inner = t2.interior(cols);
    if (inner.none()) {
      continue;
    }
    for (auto x = u.find_first(); x != Bits::npos; x = u.find_next(x)) {
      for (auto y = inner.find_first(); y != Bits::npos; y = inner.find_next(y)) {
        covered.set(x * static_cast<std::size_t>(n2) + y);
      }
    }
    if (covered == pairs) {
      return true;
    }
  }
  return covered == pairs;
}

}  // namespace semitop
