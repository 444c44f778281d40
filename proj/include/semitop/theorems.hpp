#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "semitop/bits.hpp"
#include "semitop/subcrypto.hpp"
#include "semitop/topo_semigroup.hpp"

namespace semitop {

struct CheckResult {
  std::string id;
  bool applicable = false;
  bool passed = false;
  std::string note;
};

struct Ledger {
  std::vector<CheckResult> items;

  void add(std::string id, bool applicable, bool passed, std::string note = "") {
    items.push_back({std::move(id), applicable, passed, std::move(note)});
  }
  void skip(std::string id, std::string why) {
    items.push_back({std::move(id), false, true, std::move(why)});
  }
  void merge(const Ledger& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
  bool all_passed() const {
    for (const CheckResult& c : items) {
      if (c.applicable && !c.passed) {
        return false;
      }
    }
    return true;
  }
  std::size_t failure_count() const {
    std::size_t k = 0;
    for (const CheckResult& c : items) {
      if (c.applicable && !c.passed) {
        ++k;
      }
    }
    return k;
  }
};

struct VerifyOptions {
  std::size_t subset_samples = 256;  // sampled subsets / dense sets once 2^n is large
  std::size_t open_samples = 32;     // opens drawn per existential family
  unsigned seed = 0x5eed;
  int enumeration_cap = 20;
};

// Transport of a neighborhood base from x^0 to x: {(xU)* : U in base}.
// Validates that the input is a base at x^0 and that the transported
// family is a base at x.
std::vector<Bits> base_transport(const TopoSemigroup& ts, int x,
                                 const std::vector<Bits>& base_at_idem);

// Star-calculus battery: the defining identities, the dense-set theorem
// and the closure bound.
Ledger verify_star_theorems(const TopoSemigroup& ts, const VerifyOptions& opts = {});

// Neighborhood-base battery at the idempotents, plus base transport.
Ledger verify_base_properties(const TopoSemigroup& ts, const VerifyOptions& opts = {});

// Closure lemmas for subcryptogroups and symmetric sets.
Ledger verify_closure_lemmas(const TopoSemigroup& ts, const VerifyOptions& opts = {});

// Open full subcryptogroups are closed.
Ledger open_full_is_closed(const TopoSemigroup& ts, const VerifyOptions& opts = {});

// Full normal subcryptogroups of S/N are exactly the M/N with M full
// normal above N; checked as a bijection via the projection.
bool check_subcrypto_correspondence(const FinSemigroup& s, const Bits& n);

// The whole assertion suite over one instance. Items carry stable ids;
// inapplicable hypotheses mark items non-applicable instead of failing.
Ledger verify_theorems(const TopoSemigroup& ts, const VerifyOptions& opts = {});

}  // namespace semitop
