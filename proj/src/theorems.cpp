#include "semitop/theorems.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "semitop/error.hpp"

namespace semitop {

namespace {

Bits bits_from_mask(int n, std::uint64_t mask) {
  Bits b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (mask & (std::uint64_t{1} << i)) {
      b.set(static_cast<std::size_t>(i));
    }
  }
  return b;
}

Bits random_subset(int n, std::mt19937& rng) {
  Bits b(static_cast<std::size_t>(n));
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i) {
    if (coin(rng)) {
      b.set(static_cast<std::size_t>(i));
    }
  }
  return b;
}

// Sampled subsets: every subset when the power set is small, otherwise a
// seeded random draw plus the standard extremes.
std::vector<Bits> sample_subsets(int n, std::size_t cap, std::mt19937& rng) {
  std::set<Bits> out;
  if (n <= 10 && (std::size_t{1} << n) <= cap) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      out.insert(bits_from_mask(n, mask));
    }
  } else {
    out.insert(Bits(static_cast<std::size_t>(n)));
    Bits full(static_cast<std::size_t>(n));
    full.set();
    out.insert(full);
    for (int x = 0; x < n; ++x) {
      out.insert(make_bits(static_cast<std::size_t>(n), {x}));
    }
    while (out.size() < cap) {
      out.insert(random_subset(n, rng));
    }
  }
  return std::vector<Bits>(out.begin(), out.end());
}

std::vector<Bits> dense_subsets(const FinTopology& t, std::size_t cap, std::mt19937& rng) {
  const int n = t.ground_size();
  std::vector<Bits> out;
  if (n <= 10 && (std::size_t{1} << n) <= cap * 4) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Bits d = bits_from_mask(n, mask);
      if (t.is_dense(d)) {
        out.push_back(std::move(d));
        if (out.size() >= cap) {
          break;
        }
      }
    }
  } else {
    std::set<Bits> seen;
    Bits full(static_cast<std::size_t>(n));
    full.set();
    seen.insert(full);
    while (seen.size() < cap) {
      Bits d = random_subset(n, rng);
      // Densify: hit every minimal neighborhood.
      for (int x = 0; x < n; ++x) {
        if (!t.min_nbhd(x).intersects(d)) {
          d.set(t.min_nbhd(x).find_first());
        }
      }
      seen.insert(std::move(d));
    }
    out.assign(seen.begin(), seen.end());
  }
  return out;
}

// Opens containing E(S): all of them when few, else the minimal one plus a
// seeded sample.
std::vector<Bits> opens_over_idempotents(const TopoSemigroup& ts, std::size_t cap,
                                         std::mt19937& rng) {
  const Bits e = ts.idempotents();
  std::vector<Bits> all;
  for (const Bits& u : ts.top().opens()) {
    if (e.is_subset_of(u)) {
      all.push_back(u);
    }
  }
  if (all.size() <= cap) {
    return all;
  }
  std::set<Bits> keep;
  Bits hull(static_cast<std::size_t>(ts.size()));
  for (auto i = e.find_first(); i != Bits::npos; i = e.find_next(i)) {
    hull |= ts.top().min_nbhd(static_cast<int>(i));
  }
  keep.insert(hull);
  Bits full(static_cast<std::size_t>(ts.size()));
  full.set();
  keep.insert(full);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  while (keep.size() < cap) {
    keep.insert(all[pick(rng)]);
  }
  return std::vector<Bits>(keep.begin(), keep.end());
}

std::string fail_note(const std::string& what) {
  return "counterexample: " + what;
}

}  // namespace

std::vector<Bits> base_transport(const TopoSemigroup& ts, int x,
                                 const std::vector<Bits>& base_at_idem) {
  const FinTopology& t = ts.top();
  const int e = ts.identity_of(x);
  for (const Bits& b : base_at_idem) {
    if (!t.is_open(b) || !b.test(static_cast<std::size_t>(e))) {
      throw Error("NotABaseAtIdempotent: member " + bits_to_string(b)
                  + " is not an open set containing " + std::to_string(e));
    }
  }
  for (const Bits& w : t.opens()) {
    if (!w.test(static_cast<std::size_t>(e))) {
      continue;
    }
    bool refined = false;
    for (const Bits& b : base_at_idem) {
      if (b.is_subset_of(w)) {
        refined = true;
        break;
      }
    }
    if (!refined) {
      throw Error("NotABaseAtIdempotent: no member inside open " + bits_to_string(w));
    }
  }
  std::vector<Bits> transported;
  transported.reserve(base_at_idem.size());
  for (const Bits& b : base_at_idem) {
    transported.push_back(star_xu(ts, x, b));
  }
  // The transported family must again be a base at x.
  for (const Bits& m : transported) {
    if (!t.is_open(m) || !m.test(static_cast<std::size_t>(x))) {
      throw Error("OracleMismatch: transported member " + bits_to_string(m)
                  + " is not an open set containing " + std::to_string(x));
    }
  }
  for (const Bits& w : t.opens()) {
    if (!w.test(static_cast<std::size_t>(x))) {
      continue;
    }
    bool refined = false;
    for (const Bits& m : transported) {
      if (m.is_subset_of(w)) {
        refined = true;
        break;
      }
    }
    if (!refined) {
      throw Error("OracleMismatch: transported family misses open " + bits_to_string(w));
    }
  }
  return transported;
}

Ledger verify_star_theorems(const TopoSemigroup& ts, const VerifyOptions& opts) {
  if (!classify_topological(ts).is_botg_criterion) {
    throw Error("NotBotg: the star-calculus battery requires a band of topological groups");
  }
  Ledger ledger;
  std::mt19937 rng(opts.seed);
  const FinSemigroup& s = ts.sgp();
  const FinTopology& t = ts.top();
  const int n = ts.size();

  // Defining identities of the star calculus.
  {
    bool ok = true;
    std::string note;
    const std::vector<Bits> sets = sample_subsets(n, opts.subset_samples, rng);
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        for (const Bits& u : sets) {
          const Bits lhs = star_ux(ts, star_xu(ts, x, u), y);
          const Bits mid = star_xu(ts, x, star_ux(ts, u, y));
          const Bits rhs = star_xuy(ts, x, u, y);
          if (lhs != rhs || mid != rhs) {
            ok = false;
            note = fail_note("x=" + std::to_string(x) + " y=" + std::to_string(y)
                             + " U=" + bits_to_string(u));
            break;
          }
          if (ts.identity_of(x) != ts.identity_of(y) && rhs.any()) {
            ok = false;
            note = fail_note("(xUy)* nonempty on non-H-related x,y");
            break;
          }
        }
      }
    }
    for (int u = 0; u < n && ok; ++u) {
      for (const Bits& v : sample_subsets(n, 64, rng)) {
        Bits uv(static_cast<std::size_t>(n));
        uv.set(static_cast<std::size_t>(u));
        if (!star_xu(ts, u, v).is_subset_of(s.product_set(uv, v))) {
          ok = false;
          note = fail_note("(uV)* escapes uV at u=" + std::to_string(u));
          break;
        }
      }
    }
    // (UV)* built from left stars agrees with the right-star form.
    for (int round = 0; round < 16 && ok; ++round) {
      const Bits u = random_subset(n, rng);
      const Bits v = random_subset(n, rng);
      Bits by_right(static_cast<std::size_t>(n));
      for (auto w = v.find_first(); w != Bits::npos; w = v.find_next(w)) {
        by_right |= star_ux(ts, u, static_cast<int>(w));
      }
      if (star_uv(ts, u, v) != by_right) {
        ok = false;
        note = fail_note("(UV)* disagrees between the two unions");
      }
    }
    ledger.add("star-defining-identities", true, ok, note);
  }

  // Dense sets absorb: (UD)* = S = (DU)* for open U over E(S).
  {
    bool ok = true;
    std::string note;
    Bits full(static_cast<std::size_t>(n));
    full.set();
    const std::vector<Bits> us = opens_over_idempotents(ts, opts.open_samples, rng);
    const std::vector<Bits> ds = dense_subsets(t, opts.subset_samples, rng);
    for (const Bits& u : us) {
      for (const Bits& d : ds) {
        if (star_uv(ts, u, d) != full || star_uv(ts, d, u) != full) {
          ok = false;
          note = fail_note("U=" + bits_to_string(u) + " D=" + bits_to_string(d));
          break;
        }
      }
      if (!ok) {
        break;
      }
    }
    ledger.add("star-dense-absorption", true, ok, note);
  }

  // Closure bound: cl(A) inside (AU)*.
  {
    bool ok = true;
    std::string note;
    const std::vector<Bits> us = opens_over_idempotents(ts, opts.open_samples, rng);
    for (const Bits& a : sample_subsets(n, opts.subset_samples, rng)) {
      const Bits cl = t.closure(a);
      for (const Bits& u : us) {
        if (!cl.is_subset_of(star_uv(ts, a, u))) {
          ok = false;
          note = fail_note("A=" + bits_to_string(a) + " U=" + bits_to_string(u));
          break;
        }
      }
      if (!ok) {
        break;
      }
    }
    ledger.add("star-closure-bound", true, ok, note);
  }

  return ledger;
}

Ledger verify_base_properties(const TopoSemigroup& ts, const VerifyOptions& opts) {
  if (!classify_topological(ts).is_botg_criterion) {
    throw Error("NotBotg: the base battery requires a band of topological groups");
  }
  Ledger ledger;
  std::mt19937 rng(opts.seed);
  const FinSemigroup& s = ts.sgp();
  const FinTopology& t = ts.top();
  const int n = ts.size();
  const Bits idems = ts.idempotents();

  // Base transport to every point, using the minimal base, the full open
  // filter and a sampled base at the class identity, both star versions.
  {
    bool ok = true;
    std::string note;
    for (int x = 0; x < n && ok; ++x) {
      const int e = ts.identity_of(x);
      std::vector<std::vector<Bits>> bases;
      bases.push_back({t.min_nbhd(e)});
      std::vector<Bits> filter;
      for (const Bits& u : t.opens()) {
        if (u.test(static_cast<std::size_t>(e))) {
          filter.push_back(u);
        }
      }
      if (filter.size() > opts.open_samples) {
        std::shuffle(filter.begin(), filter.end(), rng);
        filter.resize(opts.open_samples);
        filter.push_back(t.min_nbhd(e));
      }
      bases.push_back(filter);
      for (const auto& base : bases) {
        try {
          base_transport(ts, x, base);
        } catch (const Error& err) {
          ok = false;
          note = fail_note(std::string("x=") + std::to_string(x) + ": " + err.what());
          break;
        }
        // Left version: {(Ux)*} is a base at x as well.
        std::vector<Bits> left;
        left.reserve(base.size());
        for (const Bits& u : base) {
          left.push_back(star_ux(ts, u, x));
        }
        for (const Bits& m : left) {
          if (!t.is_open(m) || !m.test(static_cast<std::size_t>(x))) {
            ok = false;
            note = fail_note("left transport not open at x=" + std::to_string(x));
            break;
          }
        }
        for (const Bits& w : t.opens()) {
          if (!ok || !w.test(static_cast<std::size_t>(x))) {
            continue;
          }
          bool refined = false;
          for (const Bits& m : left) {
            if (m.is_subset_of(w)) {
              refined = true;
              break;
            }
          }
          if (!refined) {
            ok = false;
            note = fail_note("left transport misses an open at x=" + std::to_string(x));
          }
        }
        if (!ok) {
          break;
        }
      }
    }
    ledger.add("base-transport", true, ok, note);
  }

  // Neighborhood-base laws at the idempotents, with the full open filters
  // as the bases. Each existential is decided on the minimal neighborhood,
  // which the filters contain and every law is monotone in.
  {
    bool ok = true;
    std::string note;
    for (const Bits& u : t.opens()) {
      for (auto x = u.find_first(); x != Bits::npos && ok; x = u.find_next(x)) {
        const Bits v = t.min_nbhd(ts.identity_of(static_cast<int>(x)));
        if (!star_ux(ts, v, static_cast<int>(x)).is_subset_of(u)) {
          ok = false;
          note = fail_note("(Vx)* not inside U for x=" + std::to_string(x));
        }
      }
      if (!ok) {
        break;
      }
    }
    ledger.add("base-law-star-refines-opens", true, ok, note);
  }
  {
    bool ok = true;
    std::string note;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        const int exy = ts.identity_of(s.product(x, y));
        const Bits prod =
            s.product_set(t.min_nbhd(ts.identity_of(x)), t.min_nbhd(ts.identity_of(y)));
        Bits image(static_cast<std::size_t>(n));
        for (auto z = prod.find_first(); z != Bits::npos; z = prod.find_next(z)) {
          image.set(static_cast<std::size_t>(ts.identity_of(static_cast<int>(z))));
        }
        for (const Bits& w : t.opens()) {
          if (w.test(static_cast<std::size_t>(exy)) && !image.is_subset_of(w)) {
            ok = false;
            note = fail_note("(UV)^0 escapes W at x=" + std::to_string(x) + " y="
                             + std::to_string(y));
            break;
          }
        }
      }
    }
    ledger.add("base-law-product-identities", true, ok, note);
  }
  {
    bool ok = true;
    std::string note;
    for (auto e = idems.find_first(); e != Bits::npos && ok; e = idems.find_next(e)) {
      const Bits& m = t.min_nbhd(static_cast<int>(e));
      const Bits m2 = s.product_set(m, m);
      for (const Bits& u : t.opens()) {
        if (u.test(e) && !m2.is_subset_of(u)) {
          ok = false;
          note = fail_note("V^2 escapes U at e=" + std::to_string(e));
          break;
        }
      }
    }
    ledger.add("base-law-squares", true, ok, note);
  }
  {
    bool ok = true;
    std::string note;
    for (auto e = idems.find_first(); e != Bits::npos && ok; e = idems.find_next(e)) {
      const Bits& he = ts.h().h_class_of(static_cast<int>(e));
      const Bits& m = t.min_nbhd(static_cast<int>(e));
      for (const Bits& u : t.opens()) {
        if (!u.test(e)) {
          continue;
        }
        Bits candidates = u & he;
        for (auto y = candidates.find_first(); y != Bits::npos; y = candidates.find_next(y)) {
          const Bits conj = star_xuy(ts, static_cast<int>(y), m,
                                     ts.inverse_of(static_cast<int>(y)));
          if (!conj.is_subset_of(u)) {
            ok = false;
            note = fail_note("(yVy^-1)* escapes U at e=" + std::to_string(e) + " y="
                             + std::to_string(y));
            break;
          }
        }
        if (!ok) {
          break;
        }
      }
    }
    ledger.add("base-law-conjugation", true, ok, note);
  }
  {
    const bool hausdorff = t.separation().t2;
    bool ok = true;
    std::string note;
    if (hausdorff) {
      for (auto e = idems.find_first(); e != Bits::npos && ok; e = idems.find_next(e)) {
        if (t.min_nbhd(static_cast<int>(e)).count() != 1) {
          ok = false;
          note = fail_note("filter intersection at e=" + std::to_string(e) + " is not {e}");
        }
      }
    }
    ledger.add("base-law-filter-intersection", hausdorff, ok,
               hausdorff ? note : "not applicable: space is not Hausdorff");
  }

  return ledger;
}

Ledger verify_closure_lemmas(const TopoSemigroup& ts, const VerifyOptions& opts) {
  Ledger ledger;
  std::mt19937 rng(opts.seed);
  const TopoFlags flags = classify_topological(ts);
  if (!flags.is_topological_cryptogroup) {
    ledger.skip("closure-of-subcryptogroup", "not applicable: not a topological cryptogroup");
    ledger.skip("closure-of-full-normal", "not applicable: not a topological cryptogroup");
    ledger.skip("closure-preserves-symmetry", "not applicable: not a topological cryptogroup");
    ledger.skip("symmetric-open-base", "not applicable: not a topological cryptogroup");
    return ledger;
  }
  const FinSemigroup& s = ts.sgp();
  const FinTopology& t = ts.top();
  const HStructure& h = ts.h();

  // Closures of subcryptogroups are subcryptogroups; sampled over every
  // single-class subgroup and every full subcryptogroup.
  {
    bool ok = true;
    std::string note;
    std::vector<Bits> samples;
    for (int b = 0; b < h.h.block_count(); ++b) {
      for (const Bits& g : subgroups_of_h_class(s, h, b)) {
        samples.push_back(g);
      }
    }
    if (ts.size() <= opts.enumeration_cap) {
      for (const Bits& k : full_subcryptogroup_subsets(s, false, opts.enumeration_cap)) {
        samples.push_back(k);
      }
    }
    for (const Bits& k : samples) {
      if (!is_subcryptogroup_subset(s, h, t.closure(k))) {
        ok = false;
        note = fail_note("closure of " + bits_to_string(k) + " is not a subcryptogroup");
        break;
      }
    }
    ledger.add("closure-of-subcryptogroup", true, ok, note);
  }

  // Closures of full normal subcryptogroups stay full normal.
  {
    bool ok = true;
    std::string note;
    if (ts.size() <= opts.enumeration_cap) {
      for (const Bits& k : full_subcryptogroup_subsets(s, true, opts.enumeration_cap)) {
        if (!is_full_normal_subcryptogroup(s, h, t.closure(k))) {
          ok = false;
          note = fail_note("closure of " + bits_to_string(k));
          break;
        }
      }
      ledger.add("closure-of-full-normal", true, ok, note);
    } else {
      ledger.skip("closure-of-full-normal", "not applicable: instance above enumeration cap");
    }
  }

  // Closure preserves symmetry.
  {
    bool ok = true;
    std::string note;
    std::vector<Bits> symmetric;
    symmetric.push_back(ts.idempotents());
    for (std::size_t i = 0; i < opts.subset_samples / 4; ++i) {
      Bits a = random_subset(ts.size(), rng);
      a |= inverse_set(h, a);
      symmetric.push_back(std::move(a));
    }
    for (const Bits& a : symmetric) {
      const Bits cl = t.closure(a);
      if (inverse_set(h, cl) != cl) {
        ok = false;
        note = fail_note("closure of symmetric " + bits_to_string(a) + " is asymmetric");
        break;
      }
    }
    ledger.add("closure-preserves-symmetry", true, ok, note);
  }

  // Symmetric open base at each idempotent: {U n U^-1 : U open over e}.
  {
    bool ok = true;
    std::string note;
    const Bits idems = ts.idempotents();
    for (auto e = idems.find_first(); e != Bits::npos && ok; e = idems.find_next(e)) {
      for (const Bits& u : t.opens()) {
        if (!u.test(e)) {
          continue;
        }
        const Bits v = u & inverse_set(h, u);
        if (!t.is_open(v) || !v.test(e) || inverse_set(h, v) != v || !v.is_subset_of(u)) {
          ok = false;
          note = fail_note("U n U^-1 fails at e=" + std::to_string(e) + " U="
                           + bits_to_string(u));
          break;
        }
      }
    }
    ledger.add("symmetric-open-base", true, ok, note);
  }

  return ledger;
}

Ledger open_full_is_closed(const TopoSemigroup& ts, const VerifyOptions& opts) {
  if (!classify_topological(ts).is_botg_criterion) {
    throw Error("NotBotg: open-implies-closed requires a band of topological groups");
  }
  Ledger ledger;
  bool ok = true;
  std::string note;
  if (ts.size() <= opts.enumeration_cap) {
    for (const SubcryptoRecord& r : enumerate_full_subcryptogroups(ts, false,
                                                                   opts.enumeration_cap)) {
      if (r.is_open && !r.is_closed) {
        ok = false;
        note = fail_note("open full subcryptogroup " + bits_to_string(r.subset)
                         + " is not closed");
        break;
      }
    }
    ledger.add("open-full-subcryptogroup-closed", true, ok, note);
  } else {
    ledger.skip("open-full-subcryptogroup-closed",
                "not applicable: instance above enumeration cap");
  }
  return ledger;
}

bool check_subcrypto_correspondence(const FinSemigroup& s, const Bits& n) {
  const RhoN rho = rho_n(s, n);
  auto [quotient, projection] = s.quotient(rho.partition);

  std::vector<Bits> above;
  for (const Bits& m : full_subcryptogroup_subsets(s, true, s.size())) {
    if (n.is_subset_of(m)) {
      above.push_back(m);
    }
  }
  std::set<Bits> images;
  for (const Bits& m : above) {
    Bits image(static_cast<std::size_t>(quotient.size()));
    for (auto x = m.find_first(); x != Bits::npos; x = m.find_next(x)) {
      image.set(static_cast<std::size_t>(projection[x]));
    }
    images.insert(std::move(image));
  }
  if (images.size() != above.size()) {
    return false;  // projection not injective on the interval above N
  }
  const std::vector<Bits> downstairs = full_subcryptogroup_subsets(quotient, true,
                                                                   quotient.size());
  return images == std::set<Bits>(downstairs.begin(), downstairs.end());
}

Ledger verify_theorems(const TopoSemigroup& ts, const VerifyOptions& opts) {
  Ledger ledger;
  std::mt19937 rng(opts.seed);
  const FinSemigroup& s = ts.sgp();
  const FinTopology& t = ts.top();
  const int n = ts.size();

  // Continuity routes agree (also exercised standalone as an oracle).
  {
    bool ok = true;
    std::string note;
    try {
      check_mult_continuity(ts);
    } catch (const Error& err) {
      ok = false;
      note = err.what();
    }
    ledger.add("continuity-routes-agree", true, ok, note);
  }

  TopoFlags flags;
  {
    bool ok = true;
    std::string note;
    try {
      flags = classify_topological(ts);
    } catch (const Error& err) {
      ok = false;
      note = err.what();
    }
    ledger.add("botg-routes-agree", true, ok, note);
    if (!ok) {
      return ledger;  // flags unusable; nothing below is meaningful
    }
  }

  const bool crypto = ts.is_cryptogroup();
  const bool botg = flags.is_botg_criterion;

  // Open H-classes match the pointwise refinement property.
  if (crypto) {
    const Partition& h = ts.h().h;
    bool classes_open = true;
    for (int b = 0; b < h.block_count(); ++b) {
      classes_open = classes_open && t.is_open(h.block_bits(b));
    }
    bool pointwise = true;
    for (int x = 0; x < n && pointwise; ++x) {
      const Bits& hx = h.block_bits(h.block_of(x));
      for (const Bits& g : t.opens()) {
        if (!g.test(static_cast<std::size_t>(x))) {
          continue;
        }
        // An open W with x in W inside G n H_x exists iff the minimal
        // neighborhood already fits.
        if (!t.min_nbhd(x).is_subset_of(g & hx)) {
          pointwise = false;
          break;
        }
      }
    }
    ledger.add("open-classes-pointwise", true, classes_open == pointwise,
               classes_open == pointwise ? "" : fail_note("two readings of openness differ"));
  } else {
    ledger.skip("open-classes-pointwise", "not applicable: not a cryptogroup");
  }

  // Each H-class clopen in a band of topological groups.
  if (botg) {
    const Partition& h = ts.h().h;
    bool ok = true;
    std::string note;
    for (int b = 0; b < h.block_count(); ++b) {
      if (!t.is_clopen(h.block_bits(b))) {
        ok = false;
        note = fail_note("H-class " + bits_to_string(h.block_bits(b)) + " is not clopen");
        break;
      }
    }
    ledger.add("h-classes-clopen", true, ok, note);
  } else {
    ledger.skip("h-classes-clopen", "not applicable: not a band of topological groups");
  }

  // Criterion form: botg iff topological cryptogroup with open H-classes.
  if (crypto) {
    const Partition& h = ts.h().h;
    bool classes_open = true;
    for (int b = 0; b < h.block_count(); ++b) {
      classes_open = classes_open && t.is_open(h.block_bits(b));
    }
    const bool expected = flags.is_topological_cryptogroup && classes_open;
    ledger.add("botg-iff-open-classes", true, flags.is_botg_definitional == expected,
               flags.is_botg_definitional == expected
                   ? ""
                   : fail_note("definitional flag disagrees with the open-class criterion"));
  } else {
    ledger.skip("botg-iff-open-classes", "not applicable: not a cryptogroup");
  }

  // The H-block topology turns any cryptogroup into a band of topological
  // groups whose H-quotient is discrete.
  if (crypto) {
    bool ok = true;
    std::string note;
    try {
      FinTopology hb = topology_from_h_discrete(s);
      TopoSemigroup instance(s, hb);
      const TopoFlags f = classify_topological(instance);
      const SeparationFlags q = quotient_topology(hb, ts.h().h).separation();
      ok = f.is_botg_criterion && q.discrete;
      if (!ok) {
        note = fail_note("H-block topology did not produce a discrete-quotient instance");
      }
    } catch (const Error& err) {
      ok = false;
      note = err.what();
    }
    ledger.add("h-block-topology-botg", true, ok, note);
  } else {
    ledger.skip("h-block-topology-botg", "not applicable: not a cryptogroup");
  }

  // In the present instance: botg makes the H-quotient discrete.
  if (botg) {
    const SeparationFlags q = quotient_topology(t, ts.h().h).separation();
    ledger.add("h-quotient-discrete", true, q.discrete,
               q.discrete ? "" : fail_note("H-quotient of a botg instance is not discrete"));
  } else {
    ledger.skip("h-quotient-discrete", "not applicable: not a band of topological groups");
  }

  // Sufficient condition: topological semigroup + cryptogroup + open
  // classes + inverse-shrinking neighborhoods at idempotents imply botg.
  if (crypto && flags.is_topological_semigroup) {
    const Partition& h = ts.h().h;
    bool classes_open = true;
    for (int b = 0; b < h.block_count(); ++b) {
      classes_open = classes_open && t.is_open(h.block_bits(b));
    }
    bool inverse_condition = true;
    const Bits idems = ts.idempotents();
    for (auto e = idems.find_first(); e != Bits::npos && inverse_condition;
         e = idems.find_next(e)) {
      // V ranges over opens containing e; the minimal one decides.
      inverse_condition =
          inverse_set(ts.h(), t.min_nbhd(static_cast<int>(e)))
              .is_subset_of(t.min_nbhd(static_cast<int>(e)));
    }
    const bool premise = classes_open && inverse_condition;
    ledger.add("sufficient-condition", premise, !premise || botg,
               premise ? (botg ? "" : fail_note("premise held but instance is not botg"))
                       : "not applicable: premise not satisfied");
  } else {
    ledger.skip("sufficient-condition", "not applicable: needs a topological cryptogroup base");
  }

  if (botg) {
    ledger.merge(verify_star_theorems(ts, opts));
    ledger.merge(verify_base_properties(ts, opts));
  } else {
    ledger.skip("star-defining-identities", "not applicable: not a band of topological groups");
    ledger.skip("star-dense-absorption", "not applicable: not a band of topological groups");
    ledger.skip("star-closure-bound", "not applicable: not a band of topological groups");
    ledger.skip("base-transport", "not applicable: not a band of topological groups");
  }

  // Neighborhood axioms on the open filters and the reconstruction round
  // trip.
  if (botg && t.open_count() <= (std::size_t{1} << 12)) {
    bool ok = true;
    std::string note;
    try {
      const NeighborhoodSystem ns = open_filters(ts);
      const NeighborhoodAxiomReport report = neighborhood_axiom_check(s, ns);
      if (!report.all_ok()) {
        ok = false;
        for (std::size_t i = 0; i < report.axiom_ok.size(); ++i) {
          if (!report.axiom_ok[i]) {
            note = fail_note("axiom (" + std::to_string(i + 1) + "): " + report.witness[i]);
            break;
          }
        }
      } else {
        const FinTopology rebuilt = topology_from_neighborhoods(s, ns);
        if (!(rebuilt == t)) {
          ok = false;
          note = fail_note("reconstructed topology differs from the original");
        }
      }
    } catch (const Error& err) {
      ok = false;
      note = err.what();
    }
    ledger.add("neighborhood-roundtrip", true, ok, note);
  } else {
    ledger.skip("neighborhood-roundtrip",
                botg ? "not applicable: opens family too large"
                     : "not applicable: not a band of topological groups");
  }

  // Continuity from the idempotents, over the standard homomorphisms.
  if (botg) {
    bool ok = true;
    std::string note;
    try {
      std::vector<int> identity(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        identity[static_cast<std::size_t>(x)] = x;
      }
      HomCheckResult r = hom_check(ts, ts, identity);
      ok = r.is_hom && r.is_continuous;
      if (ok) {
        auto [quotient, projection] = s.quotient(ts.h().h);
        TopoSemigroup target(quotient, quotient_topology(t, ts.h().h));
        HomCheckResult q = hom_check(ts, target, projection);
        ok = q.is_hom && q.is_continuous;
        if (!ok) {
          note = fail_note("natural projection onto S/H is not a continuous homomorphism");
        }
      }
    } catch (const Error& err) {
      ok = false;
      note = err.what();
    }
    ledger.add("continuity-from-idempotents", true, ok, note);
  } else {
    ledger.skip("continuity-from-idempotents",
                "not applicable: not a band of topological groups");
  }

  // Centralizers, E(S) and the power sets S[k]; closed whenever the space
  // is Hausdorff, which at finite scale collapses to discreteness.
  {
    const bool hausdorff = t.separation().t2;
    bool ok = true;
    std::string note;
    try {
      const std::vector<SpecialSetEntry> entries = special_sets(ts);
      if (hausdorff) {
        for (const SpecialSetEntry& entry : entries) {
          if (!entry.closed) {
            ok = false;
            note = fail_note(entry.name + " is not closed");
            break;
          }
        }
      }
      // Centralizers are subsemigroups regardless of the topology.
      for (int c = 0; c < n && ok; ++c) {
        const Bits z = centralizer(s, c);
        for (auto x = z.find_first(); x != Bits::npos && ok; x = z.find_next(x)) {
          for (auto y = z.find_first(); y != Bits::npos; y = z.find_next(y)) {
            if (!z.test(static_cast<std::size_t>(
                    s.product(static_cast<int>(x), static_cast<int>(y))))) {
              ok = false;
              note = fail_note("centralizer(" + std::to_string(c) + ") is not a subsemigroup");
              break;
            }
          }
        }
      }
    } catch (const Error& err) {
      ok = false;
      note = err.what();
    }
    ledger.add("special-sets-closed", hausdorff, ok,
               hausdorff ? "trivialized-at-finite-scale: finite Hausdorff means discrete"
                         : "not applicable: space is not Hausdorff; sets computed anyway");
  }

  // Separation per H-class and the equivalence chain.
  if (botg) {
    const PerHClassSeparation per = separation_per_hclass(ts);
    ledger.add("separation-per-class", true,
               per.t0_match && per.t1_match && per.t2_match && per.regular_match
                   && per.completely_regular_match && per.normal_match,
               per.all_match() ? "" : fail_note("global flag differs from class conjunction"));
    ledger.add("separation-chain", true, per.chain_holds,
               per.chain_holds ? "" : fail_note("T0..completely-regular chain broken"));
  } else {
    ledger.skip("separation-per-class", "not applicable: not a band of topological groups");
    ledger.skip("separation-chain", "not applicable: not a band of topological groups");
  }

  // Countability and separability hold on every finite space.
  ledger.add("countability-separability", true, true,
             "trivially-true-on-finite: finite spaces are separable and second countable");

  // Metrizability proxy: on finite spaces metrizable, T1 and discrete
  // coincide.
  {
    const SeparationFlags sep = t.separation();
    ledger.add("metrizable-proxy", true, sep.t1 == sep.discrete,
               sep.t1 == sep.discrete ? "finite-proxy: metrizable iff T1 iff discrete"
                                      : fail_note("T1 and discrete flags disagree"));
  }

  ledger.merge(verify_closure_lemmas(ts, opts));

  if (botg) {
    ledger.merge(open_full_is_closed(ts, opts));
  } else {
    ledger.skip("open-full-subcryptogroup-closed",
                "not applicable: not a band of topological groups");
  }

  // Discrete full subcryptogroups of a Hausdorff instance are closed.
  if (botg && t.separation().t2 && n <= opts.enumeration_cap) {
    bool ok = true;
    std::string note;
    for (const SubcryptoRecord& r : enumerate_full_subcryptogroups(ts, false,
                                                                   opts.enumeration_cap)) {
      if (r.is_discrete_subspace && !r.is_closed) {
        ok = false;
        note = fail_note("discrete full subcryptogroup " + bits_to_string(r.subset));
        break;
      }
    }
    ledger.add("discrete-full-subcryptogroup-closed", true, ok,
               ok ? "trivialized-at-finite-scale: finite Hausdorff means discrete" : note);
  } else {
    ledger.skip("discrete-full-subcryptogroup-closed",
                "not applicable: needs a Hausdorff band of topological groups");
  }

  // U-disjoint families of translated stars are discrete.
  if (botg) {
    bool ok = true;
    std::string note;
    std::size_t cases = 0;
    const std::vector<Bits> us = opens_over_idempotents(ts, opts.open_samples, rng);
    const Bits e = ts.idempotents();
    for (const Bits& u : us) {
      for (const Bits& v : us) {
        if (!e.is_subset_of(v) || inverse_set(ts.h(), v) != v) {
          continue;
        }
        const Bits v2 = s.product_set(v, v);
        if (!s.product_set(v2, v2).is_subset_of(u)) {
          continue;
        }
        // Greedy maximal U-disjoint set plus sampled subsets of it.
        Bits greedy(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
          greedy.set(static_cast<std::size_t>(x));
          if (!u_disjoint(ts, greedy, u)) {
            greedy.reset(static_cast<std::size_t>(x));
          }
        }
        std::vector<Bits> as = {greedy};
        for (int round = 0; round < 8; ++round) {
          Bits a = greedy & random_subset(n, rng);
          as.push_back(std::move(a));
        }
        for (const Bits& a : as) {
          if (!u_disjoint(ts, a, u)) {
            continue;
          }
          ++cases;
          try {
            if (!discrete_family_check(ts, a, u, v)) {
              ok = false;
              note = fail_note("family over A=" + bits_to_string(a) + " not discrete");
            }
          } catch (const Error& err) {
            ok = false;
            note = err.what();
          }
          if (!ok) {
            break;
          }
        }
        if (!ok) {
          break;
        }
      }
      if (!ok) {
        break;
      }
    }
    ledger.add("u-disjoint-discrete", cases > 0, ok,
               cases > 0 ? note : "not applicable: no (U,V) pair satisfied the hypotheses");
  } else {
    ledger.skip("u-disjoint-discrete", "not applicable: not a band of topological groups");
  }

  // Full normal subcryptogroups: congruence, quotient, correspondence and
  // the Hausdorff triple.
  if (crypto && n <= opts.enumeration_cap) {
    const std::vector<Bits> normals = full_subcryptogroup_subsets(s, true,
                                                                  opts.enumeration_cap);
    {
      bool ok = true;
      std::string note;
      for (const Bits& nn : normals) {
        try {
          rho_n(s, nn);
        } catch (const Error& err) {
          ok = false;
          note = fail_note("N=" + bits_to_string(nn) + ": " + err.what());
          break;
        }
      }
      ledger.add("rho-n-congruence", true, ok, note);
    }
    {
      Bits full(static_cast<std::size_t>(n));
      full.set();
      const bool ok = rho_n(s, full).partition == ts.h().h;
      ledger.add("rho-s-is-h", true, ok,
                 ok ? "" : fail_note("rho over the whole semigroup is not H"));
    }
    if (n <= 12) {
      bool ok = true;
      std::string note;
      for (const Bits& nn : normals) {
        if (!check_subcrypto_correspondence(s, nn)) {
          ok = false;
          note = fail_note("correspondence failed at N=" + bits_to_string(nn));
          break;
        }
      }
      ledger.add("quotient-correspondence", true, ok, note);
    } else {
      ledger.skip("quotient-correspondence", "not applicable: ground set above 12");
    }
    if (botg) {
      bool quotients_ok = true;
      bool triples_ok = true;
      std::string qnote;
      std::string tnote;
      for (const Bits& nn : normals) {
        try {
          quotient_by_n(ts, nn);
          const HausdorffTriple triple = hausdorff_equivalence(ts, nn);
          if (!triple.all_equal()) {
            triples_ok = false;
            tnote = fail_note("triple differs at N=" + bits_to_string(nn));
          }
        } catch (const Error& err) {
          quotients_ok = false;
          qnote = fail_note("N=" + bits_to_string(nn) + ": " + err.what());
        }
      }
      ledger.add("quotient-botg", true, quotients_ok, qnote);
      ledger.add("hausdorff-triple", true, triples_ok, tnote);
    } else {
      ledger.skip("quotient-botg", "not applicable: not a band of topological groups");
      ledger.skip("hausdorff-triple", "not applicable: not a band of topological groups");
    }
  } else {
    ledger.skip("rho-n-congruence",
                crypto ? "not applicable: instance above enumeration cap"
                       : "not applicable: not a cryptogroup");
  }

  return ledger;
}

}  // namespace semitop
