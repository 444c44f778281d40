#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semitop/bits.hpp"
#include "semitop/semigroup.hpp"
#include "semitop/topology.hpp"

namespace semitop {

struct TopoFlags {
  bool mult_continuous = false;
  bool inversion_continuous = false;
  bool is_topological_semigroup = false;
  bool is_topological_cryptogroup = false;
  bool is_botg_definitional = false;
  bool is_botg_criterion = false;
};

// A finite semigroup carrying a topology on the same ground set. The
// algebraic classification and (for cryptogroups) the H-structure are
// computed once at construction; everything here is immutable.
class TopoSemigroup {
 public:
  TopoSemigroup(FinSemigroup s, FinTopology t);

  const FinSemigroup& sgp() const { return s_; }
  const FinTopology& top() const { return t_; }
  int size() const { return s_.size(); }
  const ClassifyFlags& algebra() const { return flags_; }
  bool is_cryptogroup() const { return flags_.is_cryptogroup; }

  // H-structure access; only meaningful on cryptogroups.
  const HStructure& h() const;
  int inverse_of(int x) const { return h().inverse_of(x); }
  int identity_of(int x) const { return h().identity_of(x); }
  Bits inverse_set(const Bits& a) const;
  Bits idempotents() const { return s_.idempotent_set(); }

 private:
  FinSemigroup s_;
  FinTopology t_;
  ClassifyFlags flags_;
  std::optional<HStructure> h_;
};

// Multiplication continuity, two routes. The minimal-neighborhood
// criterion is the fast one; the definitional route quantifies over the
// explicit opens family and rectangle covers in the product space.
bool mult_continuous_minnbhd(const TopoSemigroup& ts);
bool mult_continuous_definitional(const TopoSemigroup& ts);
// Runs both routes, demands they agree, returns the definitional answer.
bool check_mult_continuity(const TopoSemigroup& ts);

// Inversion continuity via the definitional preimage check.
bool inversion_continuous(const TopoSemigroup& ts);

TopoFlags classify_topological(const TopoSemigroup& ts);

// Star sets (cryptogroup required; the H-structure resolves x^-1 and x^0).
//   (xU)* = {y : x^-1 y in U, x^0 = y^0}
//   (Ux)* = {y : y x^-1 in U, y^0 = x^0}
//   (UV)* = union over u in U of (uV)*
//   (xUy)* = {s : x^-1 s y^-1 in U, x^0 = s^0 = y^0}
Bits star_xu(const FinSemigroup& s, const HStructure& h, int x, const Bits& u);
Bits star_ux(const FinSemigroup& s, const HStructure& h, const Bits& u, int x);
Bits star_xuy(const FinSemigroup& s, const HStructure& h, int x, const Bits& u, int y);
Bits inverse_set(const HStructure& h, const Bits& a);

Bits star_xu(const TopoSemigroup& ts, int x, const Bits& u);
Bits star_ux(const TopoSemigroup& ts, const Bits& u, int x);
Bits star_uv(const TopoSemigroup& ts, const Bits& u, const Bits& v);
Bits star_xuy(const TopoSemigroup& ts, int x, const Bits& u, int y);

// Abstract neighborhood families at idempotents, the input to the
// band-of-topological-groups construction. Keys must be exactly E(S) and
// every member must contain its idempotent.
struct NeighborhoodSystem {
  std::map<int, std::vector<Bits>> families;
};

NeighborhoodSystem open_filters(const TopoSemigroup& ts);
void validate_neighborhood_system(const FinSemigroup& s, const NeighborhoodSystem& ns);

struct NeighborhoodAxiomReport {
  std::array<bool, 5> axiom_ok{};
  std::array<std::string, 5> witness{};
  bool all_ok() const {
    for (bool b : axiom_ok) {
      if (!b) {
        return false;
      }
    }
    return true;
  }
};

NeighborhoodAxiomReport neighborhood_axiom_check(const FinSemigroup& s,
                                                 const NeighborhoodSystem& ns);

// Builds the topology with base {(Ua)* : U in the system, a in S} and
// checks that the result is a band of topological groups. Throws
// AxiomsViolated if the five axioms do not hold.
FinTopology topology_from_neighborhoods(const FinSemigroup& s, const NeighborhoodSystem& ns,
                                        std::size_t max_opens = kDefaultOpensCap);

// The coarsest band-of-topological-groups topology on a cryptogroup:
// opens are exactly the unions of H-classes.
FinTopology topology_from_h_discrete(const FinSemigroup& s);

struct HomCheckResult {
  bool is_hom = false;
  std::vector<bool> cont_at;
  bool is_continuous = false;
};

HomCheckResult hom_check(const TopoSemigroup& from, const TopoSemigroup& to,
                         const std::vector<int>& f);

struct SpecialSetEntry {
  std::string name;
  Bits set;
  bool closed = false;
};

// Centralizers, S[k] = {x : x^k idempotent}, and E(S), with closedness
// flags. On a Hausdorff (hence discrete) space all of them are closed;
// that degenerate case is still checked rather than assumed.
Bits centralizer(const FinSemigroup& s, int t);
Bits power_pre_idempotents(const FinSemigroup& s, int k);
std::vector<SpecialSetEntry> special_sets(const TopoSemigroup& ts, int max_power = 3);

struct PerHClassSeparation {
  SeparationFlags global;
  std::vector<SeparationFlags> per_class;
  // Global flag equals the conjunction of the per-class flags, per axiom.
  bool t0_match = false;
  bool t1_match = false;
  bool t2_match = false;
  bool regular_match = false;
  bool completely_regular_match = false;
  bool normal_match = false;
  // t0 <=> t1 <=> t2 <=> regular <=> completely regular.
  bool chain_holds = false;
  bool all_match() const {
    return t0_match && t1_match && t2_match && regular_match && completely_regular_match
           && normal_match && chain_holds;
  }
};

PerHClassSeparation separation_per_hclass(const TopoSemigroup& ts);

}  // namespace semitop
