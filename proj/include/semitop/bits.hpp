#pragma once

#include <boost/dynamic_bitset.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace semitop {

// Subsets of {0..n-1}. Comparison treats a bitset as the number
// sum 2^i over members, which gives the canonical "bitmask ascending"
// order used everywhere a set family is serialized.
using Bits = boost::dynamic_bitset<>;

inline Bits make_bits(std::size_t n, std::initializer_list<int> members) {
  Bits b(n);
  for (int m : members) {
    b.set(static_cast<std::size_t>(m));
  }
  return b;
}

inline Bits bits_of(std::size_t n, const std::vector<int>& members) {
  Bits b(n);
  for (int m : members) {
    b.set(static_cast<std::size_t>(m));
  }
  return b;
}

inline std::vector<int> members_of(const Bits& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

inline std::string bits_to_string(const Bits& b) {
  std::string s = "{";
  bool first = true;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    if (!first) {
      s += ",";
    }
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace semitop
