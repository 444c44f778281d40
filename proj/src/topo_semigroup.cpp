#include "semitop/topo_semigroup.hpp"

#include <algorithm>
#include <functional>

#include "semitop/error.hpp"

namespace semitop {

namespace {

// Existential search over a family of sets with a monotone predicate:
// smaller candidates are tried first, and if the family has a member
// contained in every other (an open filter always does) that member alone
// decides the search.
bool exists_member(const std::vector<Bits>& family, const std::function<bool(const Bits&)>& pred) {
  if (family.empty()) {
    return false;
  }
  std::vector<const Bits*> order;
  order.reserve(family.size());
  for (const Bits& b : family) {
    order.push_back(&b);
  }
  std::sort(order.begin(), order.end(), [](const Bits* a, const Bits* b) {
    return a->count() < b->count() || (a->count() == b->count() && *a < *b);
  });
  bool has_minimum = true;
  for (const Bits* b : order) {
    if (!order.front()->is_subset_of(*b)) {
      has_minimum = false;
      break;
    }
  }
  if (has_minimum) {
    return pred(*order.front());
  }
  for (const Bits* b : order) {
    if (pred(*b)) {
      return true;
    }
  }
  return false;
}

}  // namespace

TopoSemigroup::TopoSemigroup(FinSemigroup s, FinTopology t)
    : s_(std::move(s)), t_(std::move(t)) {
  if (s_.size() != t_.ground_size()) {
    throw Error("BadParams: semigroup and topology ground sets differ");
  }
  flags_ = s_.classify();
  if (flags_.is_cryptogroup) {
    h_ = h_structure(s_);
  }
}

const HStructure& TopoSemigroup::h() const {
  if (!h_) {
    throw Error("NotCryptogroup: H-structure requested on a non-cryptogroup");
  }
  return *h_;
}

Bits TopoSemigroup::inverse_set(const Bits& a) const {
  return semitop::inverse_set(h(), a);
}

bool mult_continuous_minnbhd(const TopoSemigroup& ts) {
  const FinSemigroup& s = ts.sgp();
  const FinTopology& t = ts.top();
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y) {
      if (!s.product_set(t.min_nbhd(x), t.min_nbhd(y)).is_subset_of(t.min_nbhd(s.product(x, y)))) {
        return false;
      }
    }
  }
  return true;
}

bool mult_continuous_definitional(const TopoSemigroup& ts) {
  const FinSemigroup& s = ts.sgp();
  const FinTopology& t = ts.top();
  const std::size_t n = static_cast<std::size_t>(s.size());
  for (const Bits& w : t.opens()) {
    Bits preimage(n * n);
    for (int x = 0; x < s.size(); ++x) {
      for (int y = 0; y < s.size(); ++y) {
        if (w.test(static_cast<std::size_t>(s.product(x, y)))) {
          preimage.set(static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y));
        }
      }
    }
    if (!is_open_in_product(t, t, preimage)) {
      return false;
    }
  }
  return true;
}

bool check_mult_continuity(const TopoSemigroup& ts) {
  const bool definitional = mult_continuous_definitional(ts);
  const bool fast = mult_continuous_minnbhd(ts);
  if (definitional != fast) {
    throw Error("OracleMismatch: product-preimage and minimal-neighborhood continuity disagree");
  }
  return definitional;
}

bool inversion_continuous(const TopoSemigroup& ts) {
  const HStructure& h = ts.h();
  const FinTopology& t = ts.top();
  for (const Bits& w : t.opens()) {
    Bits preimage(w.size());
    for (int x = 0; x < ts.size(); ++x) {
      if (w.test(static_cast<std::size_t>(h.inverse_of(x)))) {
        preimage.set(static_cast<std::size_t>(x));
      }
    }
    if (!t.is_open(preimage)) {
      return false;
    }
  }
  return true;
}

namespace {

// Restriction of a cryptogroup to one H-class, re-indexed by the class
// members ascending, paired with the subspace topology.
TopoSemigroup class_subinstance(const TopoSemigroup& ts, int block) {
  const std::vector<int>& members = ts.h().h.block(block);
  const int k = static_cast<int>(members.size());
  std::vector<int> pos(static_cast<std::size_t>(ts.size()), -1);
  for (int i = 0; i < k; ++i) {
    pos[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k),
                                     std::vector<int>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int p = ts.sgp().product(members[static_cast<std::size_t>(i)],
                                     members[static_cast<std::size_t>(j)]);
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pos[static_cast<std::size_t>(p)];
    }
  }
  return TopoSemigroup(FinSemigroup::from_table(rows),
                       subspace_topology(ts.top(), ts.h().h.block_bits(block)));
}

}  // namespace

TopoFlags classify_topological(const TopoSemigroup& ts) {
  TopoFlags f;
  f.mult_continuous = mult_continuous_minnbhd(ts);
  f.is_topological_semigroup = f.mult_continuous;
  if (ts.is_cryptogroup()) {
    f.inversion_continuous = inversion_continuous(ts);
  }
  f.is_topological_cryptogroup =
      f.is_topological_semigroup && ts.is_cryptogroup() && f.inversion_continuous;

  if (ts.is_cryptogroup()) {
    const Partition& h = ts.h().h;

    bool classes_open = true;
    for (int b = 0; b < h.block_count() && classes_open; ++b) {
      classes_open = ts.top().is_open(h.block_bits(b));
    }
    f.is_botg_criterion = f.is_topological_cryptogroup && classes_open;

    // Definitional route: H is the band congruence, each class with its
    // subspace topology must be a topological group, and the class
    // topologies must jointly form a base, i.e. every open trace on a
    // class is itself open.
    bool definitional = f.mult_continuous;
    for (int b = 0; b < h.block_count() && definitional; ++b) {
      TopoSemigroup sub = class_subinstance(ts, b);
      definitional = mult_continuous_minnbhd(sub) && inversion_continuous(sub);
    }
    if (definitional) {
      for (const Bits& w : ts.top().opens()) {
        for (int b = 0; b < h.block_count() && definitional; ++b) {
          definitional = ts.top().is_open(w & h.block_bits(b));
        }
        if (!definitional) {
          break;
        }
      }
    }
    f.is_botg_definitional = definitional;

    if (f.is_botg_definitional != f.is_botg_criterion) {
      throw Error("OracleMismatch: two band-of-topological-groups routes disagree");
    }
  }
  return f;
}

Bits star_xu(const FinSemigroup& s, const HStructure& h, int x, const Bits& u) {
  Bits out(static_cast<std::size_t>(s.size()));
  const int xi = h.inverse_of(x);
  for (int y : h.h.block(h.h.block_of(x))) {
    if (u.test(static_cast<std::size_t>(s.product(xi, y)))) {
      out.set(static_cast<std::size_t>(y));
    }
  }
  return out;
}

Bits star_ux(const FinSemigroup& s, const HStructure& h, const Bits& u, int x) {
  Bits out(static_cast<std::size_t>(s.size()));
  const int xi = h.inverse_of(x);
  for (int y : h.h.block(h.h.block_of(x))) {
    if (u.test(static_cast<std::size_t>(s.product(y, xi)))) {
      out.set(static_cast<std::size_t>(y));
    }
  }
  return out;
}

Bits star_xuy(const FinSemigroup& s, const HStructure& h, int x, const Bits& u, int y) {
  Bits out(static_cast<std::size_t>(s.size()));
  if (h.h.block_of(x) != h.h.block_of(y)) {
    return out;
  }
  const int xi = h.inverse_of(x);
  const int yi = h.inverse_of(y);
  for (int c : h.h.block(h.h.block_of(x))) {
    if (u.test(static_cast<std::size_t>(s.product(s.product(xi, c), yi)))) {
      out.set(static_cast<std::size_t>(c));
    }
  }
  return out;
}

Bits inverse_set(const HStructure& h, const Bits& a) {
  Bits out(a.size());
  for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x)) {
    out.set(static_cast<std::size_t>(h.inverse_of(static_cast<int>(x))));
  }
  return out;
}

Bits star_xu(const TopoSemigroup& ts, int x, const Bits& u) {
  return star_xu(ts.sgp(), ts.h(), x, u);
}

Bits star_ux(const TopoSemigroup& ts, const Bits& u, int x) {
  return star_ux(ts.sgp(), ts.h(), u, x);
}

Bits star_uv(const TopoSemigroup& ts, const Bits& u, const Bits& v) {
  Bits out(static_cast<std::size_t>(ts.size()));
  for (auto a = u.find_first(); a != Bits::npos; a = u.find_next(a)) {
    out |= star_xu(ts, static_cast<int>(a), v);
  }
  return out;
}

Bits star_xuy(const TopoSemigroup& ts, int x, const Bits& u, int y) {
  return star_xuy(ts.sgp(), ts.h(), x, u, y);
}

NeighborhoodSystem open_filters(const TopoSemigroup& ts) {
  NeighborhoodSystem ns;
  const Bits e = ts.idempotents();
  for (auto i = e.find_first(); i != Bits::npos; i = e.find_next(i)) {
    std::vector<Bits> family;
    for (const Bits& u : ts.top().opens()) {
      if (u.test(i)) {
        family.push_back(u);
      }
    }
    ns.families[static_cast<int>(i)] = std::move(family);
  }
  return ns;
}

void validate_neighborhood_system(const FinSemigroup& s, const NeighborhoodSystem& ns) {
  const Bits e = s.idempotent_set();
  for (auto i = e.find_first(); i != Bits::npos; i = e.find_next(i)) {
    if (ns.families.find(static_cast<int>(i)) == ns.families.end()) {
      throw Error("MissingIdempotentFamily: no family at idempotent " + std::to_string(i));
    }
  }
  for (const auto& [key, family] : ns.families) {
    if (key < 0 || key >= s.size() || !e.test(static_cast<std::size_t>(key))) {
      throw Error("MissingIdempotentFamily: key " + std::to_string(key)
                  + " is not an idempotent");
    }
    if (family.empty()) {
      throw Error("MissingIdempotentFamily: empty family at idempotent " + std::to_string(key));
    }
    for (const Bits& u : family) {
      if (static_cast<int>(u.size()) != s.size()) {
        throw Error("SubsetOutOfRange: neighborhood over wrong ground size");
      }
      if (!u.test(static_cast<std::size_t>(key))) {
        // The base construction needs e inside each of its own
        // neighborhoods; accepted as a validation rule.
        throw Error("InvalidNeighborhoodFamily: member at idempotent " + std::to_string(key)
                    + " does not contain it");
      }
    }
  }
}

NeighborhoodAxiomReport neighborhood_axiom_check(const FinSemigroup& s,
                                                 const NeighborhoodSystem& ns) {
  validate_neighborhood_system(s, ns);
  const HStructure h = h_structure(s);
  NeighborhoodAxiomReport report;
  report.axiom_ok.fill(true);

  auto family_at = [&ns](int e) -> const std::vector<Bits>& {
    return ns.families.at(e);
  };
  auto note_failure = [&report](int axiom, const std::string& text) {
    if (report.axiom_ok[static_cast<std::size_t>(axiom)]) {
      report.axiom_ok[static_cast<std::size_t>(axiom)] = false;
      report.witness[static_cast<std::size_t>(axiom)] = text;
    }
  };

  // (1) every U has a V with V^-1 inside U.
  for (const auto& [e, family] : ns.families) {
    for (const Bits& u : family) {
      if (!exists_member(family, [&](const Bits& v) { return inverse_set(h, v).is_subset_of(u); })) {
        note_failure(0, "e=" + std::to_string(e) + " U=" + bits_to_string(u)
                            + " has no V with V^-1 inside U");
      }
    }
  }

  // (2) every U and y in U admit V at y^0 with (Vy)* inside U.
  for (const auto& [e, family] : ns.families) {
    for (const Bits& u : family) {
      for (auto y = u.find_first(); y != Bits::npos; y = u.find_next(y)) {
        const auto& vf = family_at(h.identity_of(static_cast<int>(y)));
        if (!exists_member(vf, [&](const Bits& v) {
              return star_ux(s, h, v, static_cast<int>(y)).is_subset_of(u);
            })) {
          note_failure(1, "e=" + std::to_string(e) + " U=" + bits_to_string(u) + " y="
                              + std::to_string(y) + " has no V with (Vy)* inside U");
        }
      }
    }
  }

  // (3) x^-1 y in U yields V at y^0 with x^-1 V y inside U.
  for (const auto& [e, family] : ns.families) {
    for (const Bits& u : family) {
      for (int x = 0; x < s.size(); ++x) {
        const int xi = h.inverse_of(x);
        for (int y = 0; y < s.size(); ++y) {
          if (!u.test(static_cast<std::size_t>(s.product(xi, y)))) {
            continue;
          }
          const auto& vf = family_at(h.identity_of(y));
          if (!exists_member(vf, [&](const Bits& v) {
                for (auto m = v.find_first(); m != Bits::npos; m = v.find_next(m)) {
                  const int prod = s.product(s.product(xi, static_cast<int>(m)), y);
                  if (!u.test(static_cast<std::size_t>(prod))) {
                    return false;
                  }
                }
                return true;
              })) {
            note_failure(2, "e=" + std::to_string(e) + " U=" + bits_to_string(u) + " x="
                                + std::to_string(x) + " y=" + std::to_string(y)
                                + " has no V with x^-1 V y inside U");
          }
        }
      }
    }
  }

  // (4) for a, b and W at (ab)^0 there are U at a^0, V at b^0 with
  //     U a V b (ab)^-1 inside W.
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      const int ab = s.product(a, b);
      const int abi = h.inverse_of(ab);
      const auto& wf = family_at(h.identity_of(ab));
      const auto& uf = family_at(h.identity_of(a));
      const auto& vf = family_at(h.identity_of(b));
      for (const Bits& w : wf) {
        auto pair_works = [&](const Bits& u, const Bits& v) {
          for (auto p = u.find_first(); p != Bits::npos; p = u.find_next(p)) {
            const int pa = s.product(static_cast<int>(p), a);
            for (auto q = v.find_first(); q != Bits::npos; q = v.find_next(q)) {
              const int t = s.product(s.product(pa, s.product(static_cast<int>(q), b)), abi);
              if (!w.test(static_cast<std::size_t>(t))) {
                return false;
              }
            }
          }
          return true;
        };
        if (!exists_member(uf, [&](const Bits& u) {
              return exists_member(vf, [&](const Bits& v) { return pair_works(u, v); });
            })) {
          note_failure(3, "a=" + std::to_string(a) + " b=" + std::to_string(b) + " W="
                              + bits_to_string(w) + " has no (U,V) with UaVb(ab)^-1 inside W");
        }
      }
    }
  }

  // (5) directedness under intersection.
  for (const auto& [e, family] : ns.families) {
    for (const Bits& u : family) {
      for (const Bits& v : family) {
        const Bits target = u & v;
        if (!exists_member(family, [&](const Bits& w) { return w.is_subset_of(target); })) {
          note_failure(4, "e=" + std::to_string(e) + " U=" + bits_to_string(u) + " V="
                              + bits_to_string(v) + " admit no W inside their intersection");
        }
      }
    }
  }

  return report;
}

FinTopology topology_from_neighborhoods(const FinSemigroup& s, const NeighborhoodSystem& ns,
                                        std::size_t max_opens) {
  NeighborhoodAxiomReport report = neighborhood_axiom_check(s, ns);
  if (!report.all_ok()) {
    std::string msg = "AxiomsViolated:";
    for (std::size_t i = 0; i < report.axiom_ok.size(); ++i) {
      if (!report.axiom_ok[i]) {
        msg += " (" + std::to_string(i + 1) + ") " + report.witness[i] + ";";
      }
    }
    throw Error(msg);
  }
  const HStructure h = h_structure(s);
  std::vector<Bits> base;
  for (const auto& [e, family] : ns.families) {
    for (const Bits& u : family) {
      for (int a = 0; a < s.size(); ++a) {
        base.push_back(star_ux(s, h, u, a));
      }
    }
  }
  FinTopology result = FinTopology::generate(s.size(), base);
  if (result.open_count() > max_opens) {
    throw Error("TooLarge: constructed topology exceeds cap");
  }
  TopoFlags flags = classify_topological(TopoSemigroup(s, result));
  if (!flags.is_botg_definitional) {
    throw Error("OracleMismatch: constructed topology is not a band of topological groups");
  }
  return result;
}

FinTopology topology_from_h_discrete(const FinSemigroup& s) {
  const HStructure h = h_structure(s);
  std::vector<Bits> base;
  base.reserve(static_cast<std::size_t>(h.h.block_count()));
  for (int b = 0; b < h.h.block_count(); ++b) {
    base.push_back(h.h.block_bits(b));
  }
  return FinTopology::generate(s.size(), base);
}

HomCheckResult hom_check(const TopoSemigroup& from, const TopoSemigroup& to,
                         const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != from.size()) {
    throw Error("BadParams: map has wrong domain size");
  }
  for (int v : f) {
    if (v < 0 || v >= to.size()) {
      throw Error("BadParams: map value out of range");
    }
  }
  HomCheckResult result;
  result.is_hom = true;
  for (int x = 0; x < from.size() && result.is_hom; ++x) {
    for (int y = 0; y < from.size() && result.is_hom; ++y) {
      result.is_hom = f[static_cast<std::size_t>(from.sgp().product(x, y))]
                      == to.sgp().product(f[static_cast<std::size_t>(x)],
                                          f[static_cast<std::size_t>(y)]);
    }
  }
  result.cont_at.assign(static_cast<std::size_t>(from.size()), false);
  for (int x = 0; x < from.size(); ++x) {
    // Continuity at x reduces to the minimal neighborhoods: the image of
    // min_nbhd(x) must land inside min_nbhd(f(x)).
    Bits image(static_cast<std::size_t>(to.size()));
    const Bits& m = from.top().min_nbhd(x);
    for (auto p = m.find_first(); p != Bits::npos; p = m.find_next(p)) {
      image.set(static_cast<std::size_t>(f[p]));
    }
    result.cont_at[static_cast<std::size_t>(x)] =
        image.is_subset_of(to.top().min_nbhd(f[static_cast<std::size_t>(x)]));
  }
  result.is_continuous = true;
  for (const Bits& w : to.top().opens()) {
    Bits preimage(static_cast<std::size_t>(from.size()));
    for (int x = 0; x < from.size(); ++x) {
      if (w.test(static_cast<std::size_t>(f[static_cast<std::size_t>(x)]))) {
        preimage.set(static_cast<std::size_t>(x));
      }
    }
    if (!from.top().is_open(preimage)) {
      result.is_continuous = false;
      break;
    }
  }

  // Continuity propagates from the idempotents for homomorphisms of bands
  // of topological groups.
  if (result.is_hom && from.is_cryptogroup() && to.is_cryptogroup()
      && classify_topological(from).is_botg_criterion
      && classify_topological(to).is_botg_criterion) {
    bool cont_at_idems = true;
    const Bits e = from.idempotents();
    for (auto i = e.find_first(); i != Bits::npos && cont_at_idems; i = e.find_next(i)) {
      cont_at_idems = result.cont_at[i];
    }
    if (cont_at_idems && !result.is_continuous) {
      throw Error("OracleMismatch: continuity at idempotents did not propagate");
    }
  }
  return result;
}

Bits centralizer(const FinSemigroup& s, int t) {
  Bits out(static_cast<std::size_t>(s.size()));
  for (int x = 0; x < s.size(); ++x) {
    if (s.product(x, t) == s.product(t, x)) {
      out.set(static_cast<std::size_t>(x));
    }
  }
  return out;
}

Bits power_pre_idempotents(const FinSemigroup& s, int k) {
  const Bits e = s.idempotent_set();
  Bits out(static_cast<std::size_t>(s.size()));
  for (int x = 0; x < s.size(); ++x) {
    if (e.test(static_cast<std::size_t>(s.power(x, k)))) {
      out.set(static_cast<std::size_t>(x));
    }
  }
  return out;
}

std::vector<SpecialSetEntry> special_sets(const TopoSemigroup& ts, int max_power) {
  std::vector<SpecialSetEntry> entries;
  const FinSemigroup& s = ts.sgp();
  const FinTopology& t = ts.top();
  for (int c = 0; c < s.size(); ++c) {
    Bits set = centralizer(s, c);
    entries.push_back({"centralizer(" + std::to_string(c) + ")", set, t.is_closed(set)});
  }
  for (int k = 1; k <= max_power; ++k) {
    Bits set = power_pre_idempotents(s, k);
    entries.push_back({"S[" + std::to_string(k) + "]", set, t.is_closed(set)});
  }
  Bits e = s.idempotent_set();
  entries.push_back({"E(S)", e, t.is_closed(e)});

  if (t.separation().t2) {
    for (const SpecialSetEntry& entry : entries) {
      if (!entry.closed) {
        throw Error("OracleMismatch: " + entry.name + " not closed in a Hausdorff space");
      }
    }
  }
  return entries;
}

PerHClassSeparation separation_per_hclass(const TopoSemigroup& ts) {
  if (!classify_topological(ts).is_botg_criterion) {
    throw Error("NotBotg: per-class separation report requires a band of topological groups");
  }
  PerHClassSeparation out;
  out.global = ts.top().separation();
  const Partition& h = ts.h().h;
  bool all0 = true;
  bool all1 = true;
  bool all2 = true;
  bool allr = true;
  bool allc = true;
  bool alln = true;
  for (int b = 0; b < h.block_count(); ++b) {
    SeparationFlags f = subspace_topology(ts.top(), h.block_bits(b)).separation();
    all0 = all0 && f.t0;
    all1 = all1 && f.t1;
    all2 = all2 && f.t2;
    allr = allr && f.regular;
    allc = allc && f.completely_regular;
    alln = alln && f.normal;
    out.per_class.push_back(std::move(f));
  }
  out.t0_match = out.global.t0 == all0;
  out.t1_match = out.global.t1 == all1;
  out.t2_match = out.global.t2 == all2;
  out.regular_match = out.global.regular == allr;
  out.completely_regular_match = out.global.completely_regular == allc;
  out.normal_match = out.global.normal == alln;
  out.chain_holds = out.global.t0 == out.global.t1 && out.global.t1 == out.global.t2
                    && out.global.t2 == out.global.regular
                    && out.global.regular == out.global.completely_regular;
  return out;
}

}  // namespace semitop
