#pragma once

#include <utility>
#include <vector>

#include "semitop/bits.hpp"

namespace semitop {

// A partition of {0..n-1} in canonical form: blocks are listed by their
// minimal member, ascending, and each block is sorted.
class Partition {
 public:
  Partition(int n, const std::vector<int>& class_of);
  static Partition singletons(int n);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& block(int b) const { return blocks_[static_cast<std::size_t>(b)]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const Bits& block_bits(int b) const { return block_bits_[static_cast<std::size_t>(b)]; }
  const std::vector<int>& class_map() const { return class_of_; }

  bool same_block(int x, int y) const { return block_of(x) == block_of(y); }
  bool operator==(const Partition& other) const {
    return n_ == other.n_ && class_of_ == other.class_of_;
  }

  // Common refinement: blocks are the nonempty intersections.
  Partition meet(const Partition& other) const;

 private:
  int n_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> blocks_;
  std::vector<Bits> block_bits_;
};

struct ClassifyFlags {
  bool is_band = false;
  bool is_completely_regular = false;
  bool is_cryptic = false;
  bool is_cryptogroup = false;
};

struct GreenRelations {
  Partition l;
  Partition r;
  Partition h;
};

// The per-H-class group structure of a cryptogroup: each H-class is a
// group; idem_of_class holds its identity and inv the groupwise inverse.
struct HStructure {
  Partition h;
  std::vector<int> idem_of_class;
  std::vector<int> inv;

  int identity_of(int x) const { return idem_of_class[static_cast<std::size_t>(h.block_of(x))]; }
  int inverse_of(int x) const { return inv[static_cast<std::size_t>(x)]; }
  const Bits& h_class_of(int x) const { return h.block_bits(h.block_of(x)); }
};

// A finite semigroup given by its full Cayley table. Construction
// validates entry range and associativity (exhaustively, O(n^3)).
class FinSemigroup {
 public:
  static FinSemigroup from_table(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int product(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_)
                  + static_cast<std::size_t>(b)];
  }
  // a^k for k >= 1.
  int power(int a, int k) const;

  Bits product_set(const Bits& a, const Bits& b) const;
  Bits idempotent_set() const;
  std::vector<int> idempotents() const { return members_of(idempotent_set()); }

  GreenRelations green_relations() const;
  ClassifyFlags classify() const;
  bool is_congruence(const Partition& p) const;

  // Quotient by a congruence; blocks indexed by minimal member ascending.
  // Returns the quotient semigroup and the natural projection.
  std::pair<FinSemigroup, std::vector<int>> quotient(const Partition& p) const;

  const std::vector<int>& raw_table() const { return table_; }
  bool operator==(const FinSemigroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  FinSemigroup(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {}

  int n_;
  std::vector<int> table_;  // row-major, table_[a*n + b] = a*b
};

HStructure h_structure(const FinSemigroup& s);

// Standard generators.
FinSemigroup zn_mul(int n);
FinSemigroup zn_add(int n);
FinSemigroup left_zero(int n);
FinSemigroup right_zero(int n);
FinSemigroup rectangular_band(int rows, int cols);
FinSemigroup direct_product(const FinSemigroup& a, const FinSemigroup& b);

}  // namespace semitop
