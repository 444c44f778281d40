#pragma once

#include <cstddef>
#include <vector>

#include "semitop/bits.hpp"
#include "semitop/semigroup.hpp"

namespace semitop {

struct SeparationFlags {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
  bool regular = false;
  bool completely_regular = false;
  bool normal = false;
  bool connected = false;
  bool locally_connected = false;
  bool discrete = false;
  std::vector<Bits> clopens;
};

// A topology on {0..n-1} stored as the explicit family of open sets,
// sorted ascending as bitmasks, plus the minimal neighborhood of each
// point (every finite topology is Alexandrov: minimal neighborhoods are
// themselves open and form the minimal base).
class FinTopology {
 public:
  static FinTopology from_opens(int n, std::vector<Bits> opens);
  static FinTopology generate(int n, const std::vector<Bits>& subbase);
  static FinTopology discrete(int n);
  static FinTopology indiscrete(int n);

  int ground_size() const { return n_; }
  const std::vector<Bits>& opens() const { return opens_; }
  std::size_t open_count() const { return opens_.size(); }
  bool is_open(const Bits& a) const;
  bool is_closed(const Bits& a) const;
  bool is_clopen(const Bits& a) const { return is_open(a) && is_closed(a); }
  const Bits& min_nbhd(int x) const { return min_nbhd_[static_cast<std::size_t>(x)]; }

  Bits closure(const Bits& a) const;
  Bits interior(const Bits& a) const;
  bool is_dense(const Bits& d) const;
  std::vector<Bits> closed_sets() const;

  SeparationFlags separation() const;
  bool is_connected() const;
  // Connectivity of a subset in its subspace topology.
  bool is_connected_subset(const Bits& a) const;

  bool operator==(const FinTopology& other) const {
    return n_ == other.n_ && opens_ == other.opens_;
  }

 private:
  FinTopology(int n, std::vector<Bits> opens, std::vector<Bits> min_nbhd)
      : n_(n), opens_(std::move(opens)), min_nbhd_(std::move(min_nbhd)) {}

  int n_;
  std::vector<Bits> opens_;
  std::vector<Bits> min_nbhd_;
};

// Size guard for constructions whose opens family can blow up.
inline constexpr std::size_t kDefaultOpensCap = std::size_t{1} << 17;

FinTopology product_topology(const FinTopology& t1, const FinTopology& t2,
                             std::size_t max_opens = kDefaultOpensCap);
FinTopology subspace_topology(const FinTopology& t, const Bits& a);
FinTopology quotient_topology(const FinTopology& t, const Partition& p);

// Definitional openness in the product space of t1 and t2: every point of
// `pairs` (encoded x*n2 + y) is covered by a rectangle U x V inside it
// with U, V drawn from the explicit opens families. Independent of the
// minimal-neighborhood shortcut, so it can serve as an oracle for it.
bool is_open_in_product(const FinTopology& t1, const FinTopology& t2, const Bits& pairs);

}  // namespace semitop
