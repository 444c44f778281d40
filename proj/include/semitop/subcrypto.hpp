#pragma once

#include <vector>

#include "semitop/bits.hpp"
#include "semitop/semigroup.hpp"
#include "semitop/topo_semigroup.hpp"
#include "semitop/topology.hpp"

namespace semitop {

struct SubcryptoRecord {
  Bits subset;
  bool is_subcryptogroup = false;
  bool is_full = false;
  bool is_normal = false;
  bool is_open = false;
  bool is_closed = false;
  bool is_discrete_subspace = false;
};

SubcryptoRecord subcrypto_flags(const TopoSemigroup& ts, const Bits& k);

// All K with E(S) included and K closed under product and inverse,
// restricted to normal ones on request. Walks the per-H-class subgroup
// lattices and filters by cross-class closure; every full subcryptogroup
// meets each H-class in a subgroup, so the walk is exhaustive.
std::vector<Bits> full_subcryptogroup_subsets(const FinSemigroup& s, bool only_normal,
                                              int cap = 20);
std::vector<SubcryptoRecord> enumerate_full_subcryptogroups(const TopoSemigroup& ts,
                                                            bool only_normal, int cap = 20);

bool is_full_normal_subcryptogroup(const FinSemigroup& s, const HStructure& h, const Bits& k);
bool is_subcryptogroup_subset(const FinSemigroup& s, const HStructure& h, const Bits& k);

// Every subgroup of the group formed by one H-class, as subsets of the
// ambient ground set.
std::vector<Bits> subgroups_of_h_class(const FinSemigroup& s, const HStructure& h, int block);

// The congruence a ~ b iff a^-1 b in N and a^0 = b^0; each class is the
// star set (xN)*.
struct RhoN {
  Bits n;
  Partition partition;
};

RhoN rho_n(const FinSemigroup& s, const Bits& n);

struct QuotientByN {
  TopoSemigroup instance;
  std::vector<int> projection;
  RhoN rho;
};

// Quotient of a band of topological groups by a full normal
// subcryptogroup, with the quotient topology; the result is checked to be
// a band of topological groups again and the projection to map H-classes
// onto H-classes.
QuotientByN quotient_by_n(const TopoSemigroup& ts, const Bits& n);

struct HausdorffTriple {
  bool quotient_hausdorff = false;
  bool rho_closed = false;
  bool n_closed = false;
  bool all_equal() const {
    return quotient_hausdorff == rho_closed && rho_closed == n_closed;
  }
};

// The three conditions of the quotient-Hausdorff equivalence, each
// computed by an independent route: quotient separation scan, rectangle
// cover in the product space, closure computation.
HausdorffTriple hausdorff_equivalence(const TopoSemigroup& ts, const Bits& n);

bool u_disjoint(const TopoSemigroup& ts, const Bits& a, const Bits& u);

// Checks the family {(aV)* : a in A} is discrete, after validating the
// hypotheses U, V open containing E(S), V^4 inside U, V symmetric.
bool discrete_family_check(const TopoSemigroup& ts, const Bits& a, const Bits& u, const Bits& v);

}  // namespace semitop
