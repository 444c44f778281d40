#include "semitop/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "semitop/error.hpp"

namespace semitop {

Partition::Partition(int n, const std::vector<int>& class_of) : n_(n) {
  if (static_cast<int>(class_of.size()) != n) {
    throw Error("BadPartition: class map has wrong length");
  }
  // Renumber blocks by minimal member, ascending.
  std::map<int, std::vector<int>> by_label;
  for (int x = 0; x < n; ++x) {
    by_label[class_of[static_cast<std::size_t>(x)]].push_back(x);
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(by_label.size());
  for (auto& [label, members] : by_label) {
    blocks.push_back(std::move(members));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  class_of_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      class_of_[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
  }
  blocks_ = std::move(blocks);
  block_bits_.reserve(blocks_.size());
  for (const auto& blk : blocks_) {
    block_bits_.push_back(bits_of(static_cast<std::size_t>(n), blk));
  }
}

Partition Partition::singletons(int n) {
  std::vector<int> cls(static_cast<std::size_t>(n));
  std::iota(cls.begin(), cls.end(), 0);
  return Partition(n, cls);
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int label = 0;
  for (const auto& blk : blocks) {
    if (blk.empty()) {
      throw Error("BadPartition: empty block");
    }
    for (int x : blk) {
      if (x < 0 || x >= n) {
        throw Error("BadPartition: element " + std::to_string(x) + " out of range");
      }
      if (cls[static_cast<std::size_t>(x)] != -1) {
        throw Error("BadPartition: element " + std::to_string(x) + " in two blocks");
      }
      cls[static_cast<std::size_t>(x)] = label;
    }
    ++label;
  }
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<std::size_t>(x)] == -1) {
      throw Error("BadPartition: element " + std::to_string(x) + " not covered");
    }
  }
  return Partition(n, cls);
}

Partition Partition::meet(const Partition& other) const {
  if (n_ != other.n_) {
    throw Error("BadPartition: ground sets differ");
  }
  std::vector<int> cls(static_cast<std::size_t>(n_));
  std::map<std::pair<int, int>, int> relabel;
  for (int x = 0; x < n_; ++x) {
    auto key = std::make_pair(block_of(x), other.block_of(x));
    auto [it, inserted] = relabel.emplace(key, static_cast<int>(relabel.size()));
    cls[static_cast<std::size_t>(x)] = it->second;
  }
  return Partition(n_, cls);
}

FinSemigroup FinSemigroup::from_table(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) {
    throw Error("BadParams: empty table");
  }
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[static_cast<std::size_t>(a)].size()) != n) {
      throw Error("BadParams: table row " + std::to_string(a) + " has wrong length");
    }
    for (int b = 0; b < n; ++b) {
      const int v = rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v < 0 || v >= n) {
        throw Error("EntryOutOfRange: table[" + std::to_string(a) + "][" + std::to_string(b)
                    + "] = " + std::to_string(v));
      }
      table.push_back(v);
    }
  }
  FinSemigroup s(n, std::move(table));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = s.product(a, b);
      for (int c = 0; c < n; ++c) {
        if (s.product(ab, c) != s.product(a, s.product(b, c))) {
          throw Error("NotAssociative: witness (a,b,c)=(" + std::to_string(a) + ","
                      + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return s;
}

int FinSemigroup::power(int a, int k) const {
  if (k < 1) {
    throw Error("BadParams: power exponent must be >= 1");
  }
  int acc = a;
  for (int i = 1; i < k; ++i) {
    acc = product(acc, a);
  }
  return acc;
}

Bits FinSemigroup::product_set(const Bits& a, const Bits& b) const {
  Bits out(static_cast<std::size_t>(n_));
  for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x)) {
    for (auto y = b.find_first(); y != Bits::npos; y = b.find_next(y)) {
      out.set(static_cast<std::size_t>(product(static_cast<int>(x), static_cast<int>(y))));
    }
  }
  return out;
}

Bits FinSemigroup::idempotent_set() const {
  Bits e(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    if (product(x, x) == x) {
      e.set(static_cast<std::size_t>(x));
    }
  }
  return e;
}

GreenRelations FinSemigroup::green_relations() const {
  // Principal ideals with identity adjoined: S^1 a = {a} u Sa, a S^1 = {a} u aS.
  std::vector<Bits> left_ideal(static_cast<std::size_t>(n_), Bits(static_cast<std::size_t>(n_)));
  std::vector<Bits> right_ideal(static_cast<std::size_t>(n_), Bits(static_cast<std::size_t>(n_)));
  for (int a = 0; a < n_; ++a) {
    left_ideal[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(a));
    right_ideal[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(a));
    for (int s = 0; s < n_; ++s) {
      left_ideal[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(product(s, a)));
      right_ideal[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(product(a, s)));
    }
  }
  auto group_by = [this](const std::vector<Bits>& key) {
    std::map<Bits, int> labels;
    std::vector<int> cls(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) {
      auto [it, inserted] = labels.emplace(key[static_cast<std::size_t>(x)],
                                           static_cast<int>(labels.size()));
      cls[static_cast<std::size_t>(x)] = it->second;
    }
    return Partition(n_, cls);
  };
  Partition l = group_by(left_ideal);
  Partition r = group_by(right_ideal);
  Partition h = l.meet(r);
  return GreenRelations{std::move(l), std::move(r), std::move(h)};
}

ClassifyFlags FinSemigroup::classify() const {
  ClassifyFlags f;
  f.is_band = true;
  for (int x = 0; x < n_ && f.is_band; ++x) {
    f.is_band = product(x, x) == x;
  }
  f.is_completely_regular = true;
  for (int a = 0; a < n_ && f.is_completely_regular; ++a) {
    bool found = false;
    for (int x = 0; x < n_ && !found; ++x) {
      found = product(product(a, x), a) == a && product(a, x) == product(x, a);
    }
    f.is_completely_regular = found;
  }
  f.is_cryptic = is_congruence(green_relations().h);
  f.is_cryptogroup = f.is_completely_regular && f.is_cryptic;
  return f;
}

bool FinSemigroup::is_congruence(const Partition& p) const {
  if (p.ground_size() != n_) {
    throw Error("BadPartition: partition ground set differs from semigroup");
  }
  for (const auto& blk : p.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) {
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        const int a = blk[i];
        const int b = blk[j];
        for (int c = 0; c < n_; ++c) {
          if (!p.same_block(product(a, c), product(b, c))
              || !p.same_block(product(c, a), product(c, b))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::pair<FinSemigroup, std::vector<int>> FinSemigroup::quotient(const Partition& p) const {
  if (!is_congruence(p)) {
    throw Error("NotACongruence: partition is not compatible with the product");
  }
  const int m = p.block_count();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(m),
                                     std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          p.block_of(product(p.block(i).front(), p.block(j).front()));
    }
  }
  return {FinSemigroup::from_table(rows), p.class_map()};
}

HStructure h_structure(const FinSemigroup& s) {
  if (!s.classify().is_cryptogroup) {
    throw Error("NotCryptogroup: H-structure requires a cryptogroup");
  }
  Partition h = s.green_relations().h;
  std::vector<int> idem(static_cast<std::size_t>(h.block_count()), -1);
  for (int b = 0; b < h.block_count(); ++b) {
    for (int x : h.block(b)) {
      if (s.product(x, x) == x) {
        if (idem[static_cast<std::size_t>(b)] != -1) {
          throw Error("NotCryptogroup: H-class with two idempotents");
        }
        idem[static_cast<std::size_t>(b)] = x;
      }
    }
    if (idem[static_cast<std::size_t>(b)] == -1) {
      throw Error("NotCryptogroup: H-class without idempotent");
    }
  }
  std::vector<int> inv(static_cast<std::size_t>(s.size()), -1);
  for (int x = 0; x < s.size(); ++x) {
    const int e = idem[static_cast<std::size_t>(h.block_of(x))];
    for (int y : h.block(h.block_of(x))) {
      if (s.product(x, y) == e && s.product(y, x) == e) {
        inv[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
    if (inv[static_cast<std::size_t>(x)] == -1) {
      throw Error("NotCryptogroup: element " + std::to_string(x) + " has no inverse in its H-class");
    }
  }
  return HStructure{std::move(h), std::move(idem), std::move(inv)};
}

FinSemigroup zn_mul(int n) {
  if (n < 1) {
    throw Error("BadParams: zn_mul needs n >= 1");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a * b) % n;
    }
  }
  return FinSemigroup::from_table(rows);
}

FinSemigroup zn_add(int n) {
  if (n < 1) {
    throw Error("BadParams: zn_add needs n >= 1");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    }
  }
  return FinSemigroup::from_table(rows);
}

FinSemigroup left_zero(int n) {
  if (n < 1) {
    throw Error("BadParams: left_zero needs n >= 1");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a;
    }
  }
  return FinSemigroup::from_table(rows);
}

FinSemigroup right_zero(int n) {
  if (n < 1) {
    throw Error("BadParams: right_zero needs n >= 1");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = b;
    }
  }
  return FinSemigroup::from_table(rows);
}

FinSemigroup rectangular_band(int rows_count, int cols_count) {
  if (rows_count < 1 || cols_count < 1) {
    throw Error("BadParams: rectangular_band needs positive dimensions");
  }
  // Element (i,l) has index i*cols + l; (i,l)(j,m) = (i,m).
  const int n = rows_count * cols_count;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int i = a / cols_count;
      const int m = b % cols_count;
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = i * cols_count + m;
    }
  }
  return FinSemigroup::from_table(rows);
}

FinSemigroup direct_product(const FinSemigroup& a, const FinSemigroup& b) {
  const int na = a.size();
  const int nb = b.size();
  const int n = na * nb;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int p = a.product(x / nb, y / nb);
      const int q = b.product(x % nb, y % nb);
      rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = p * nb + q;
    }
  }
  return FinSemigroup::from_table(rows);
}

}  // namespace semitop
