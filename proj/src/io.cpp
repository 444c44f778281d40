#include "semitop/io.hpp"

#include <fstream>
#include <sstream>

#include "semitop/error.hpp"
#include "semitop/subcrypto.hpp"

namespace semitop {

namespace {

using nlohmann::ordered_json;

std::vector<int> int_list(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) {
    throw Error("ParseError: " + where + " must be an array");
  }
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw Error("ParseError: " + where + " must hold integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> set_list(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) {
    throw Error("ParseError: " + where + " must be an array of sets");
  }
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  std::size_t i = 0;
  for (const auto& v : j) {
    out.push_back(int_list(v, where + "[" + std::to_string(i++) + "]"));
  }
  return out;
}

std::vector<Bits> to_bits_family(int n, const std::vector<std::vector<int>>& sets,
                                 const std::string& where) {
  std::vector<Bits> out;
  out.reserve(sets.size());
  for (const auto& set : sets) {
    for (int x : set) {
      if (x < 0 || x >= n) {
        throw Error("SubsetOutOfRange: " + where + " has element " + std::to_string(x));
      }
    }
    out.push_back(bits_of(static_cast<std::size_t>(n), set));
  }
  return out;
}

ordered_json flags_json(const SeparationFlags& f) {
  ordered_json j;
  j["t0"] = f.t0;
  j["t1"] = f.t1;
  j["t2"] = f.t2;
  j["regular"] = f.regular;
  j["completely_regular"] = f.completely_regular;
  j["normal"] = f.normal;
  j["connected"] = f.connected;
  j["locally_connected"] = f.locally_connected;
  j["discrete"] = f.discrete;
  return j;
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("ParseError: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error("ParseError: document must be an object");
  }
  InstanceDocument doc;
  doc.name = j.value("name", std::string("instance"));
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw Error("ParseError: missing integer field n");
  }
  doc.n = j["n"].get<int>();
  if (doc.n < 1) {
    throw Error("ParseError: n must be positive");
  }
  if (!j.contains("table")) {
    throw Error("ParseError: missing table");
  }
  doc.table = set_list(j["table"], "table");
  if (!j.contains("topology") || !j["topology"].is_object()) {
    throw Error("ParseError: missing topology object");
  }
  const auto& topo = j["topology"];
  if (topo.contains("opens")) {
    doc.opens = set_list(topo["opens"], "topology.opens");
  } else if (topo.contains("subbase")) {
    doc.subbase = set_list(topo["subbase"], "topology.subbase");
  } else {
    throw Error("ParseError: topology needs opens or subbase");
  }
  if (j.contains("subsets")) {
    if (!j["subsets"].is_object()) {
      throw Error("ParseError: subsets must be an object");
    }
    for (const auto& [key, value] : j["subsets"].items()) {
      doc.subsets[key] = int_list(value, "subsets." + key);
    }
  }
  if (j.contains("neighborhoods")) {
    if (!j["neighborhoods"].is_object()) {
      throw Error("ParseError: neighborhoods must be an object");
    }
    for (const auto& [key, value] : j["neighborhoods"].items()) {
      int e = 0;
      try {
        e = std::stoi(key);
      } catch (...) {
        throw Error("ParseError: neighborhoods keys must be idempotent indices");
      }
      doc.neighborhoods[e] = set_list(value, "neighborhoods." + key);
    }
  }
  return doc;
}

InstanceDocument load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("ParseError: cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

FinTopology topology_of(const InstanceDocument& doc) {
  if (doc.opens) {
    std::vector<Bits> family = to_bits_family(doc.n, *doc.opens, "topology.opens");
    return FinTopology::from_opens(doc.n, std::move(family));
  }
  if (doc.subbase) {
    return FinTopology::generate(doc.n, to_bits_family(doc.n, *doc.subbase, "topology.subbase"));
  }
  throw Error("ParseError: document carries no topology");
}

TopoSemigroup to_instance(const InstanceDocument& doc) {
  FinSemigroup s = FinSemigroup::from_table(doc.table);
  return TopoSemigroup(std::move(s), topology_of(doc));
}

NeighborhoodSystem neighborhoods_of(const InstanceDocument& doc) {
  NeighborhoodSystem ns;
  for (const auto& [e, sets] : doc.neighborhoods) {
    ns.families[e] = to_bits_family(doc.n, sets, "neighborhoods");
  }
  return ns;
}

InstanceDocument document_of(const std::string& name, const TopoSemigroup& ts) {
  InstanceDocument doc;
  doc.name = name;
  doc.n = ts.size();
  doc.table.assign(static_cast<std::size_t>(ts.size()),
                   std::vector<int>(static_cast<std::size_t>(ts.size())));
  for (int a = 0; a < ts.size(); ++a) {
    for (int b = 0; b < ts.size(); ++b) {
      doc.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          ts.sgp().product(a, b);
    }
  }
  std::vector<std::vector<int>> opens;
  opens.reserve(ts.top().open_count());
  for (const Bits& u : ts.top().opens()) {
    opens.push_back(members_of(u));
  }
  doc.opens = std::move(opens);
  return doc;
}

std::string emit_instance(const InstanceDocument& doc) {
  InstanceDocument canonical = doc;
  if (!canonical.opens) {
    FinTopology t = topology_of(doc);
    std::vector<std::vector<int>> opens;
    opens.reserve(t.open_count());
    for (const Bits& u : t.opens()) {
      opens.push_back(members_of(u));
    }
    canonical.opens = std::move(opens);
  }
  ordered_json j;
  j["name"] = canonical.name;
  j["n"] = canonical.n;
  j["table"] = canonical.table;
  j["topology"] = ordered_json{{"opens", *canonical.opens}};
  if (!canonical.subsets.empty()) {
    ordered_json subsets;
    for (const auto& [key, value] : canonical.subsets) {
      subsets[key] = value;
    }
    j["subsets"] = subsets;
  }
  if (!canonical.neighborhoods.empty()) {
    ordered_json nbhd;
    for (const auto& [key, value] : canonical.neighborhoods) {
      nbhd[std::to_string(key)] = value;
    }
    j["neighborhoods"] = nbhd;
  }
  return j.dump(2) + "\n";
}

Bits subset_of(const InstanceDocument& doc, const std::string& name_or_csv) {
  auto it = doc.subsets.find(name_or_csv);
  if (it != doc.subsets.end()) {
    for (int x : it->second) {
      if (x < 0 || x >= doc.n) {
        throw Error("SubsetOutOfRange: named subset " + name_or_csv);
      }
    }
    return bits_of(static_cast<std::size_t>(doc.n), it->second);
  }
  Bits out(static_cast<std::size_t>(doc.n));
  std::stringstream ss(name_or_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) {
      continue;
    }
    int x = 0;
    try {
      x = std::stoi(tok);
    } catch (...) {
      throw Error("ParseError: subset token '" + tok + "' is neither a name nor an index");
    }
    if (x < 0 || x >= doc.n) {
      throw Error("SubsetOutOfRange: index " + std::to_string(x));
    }
    out.set(static_cast<std::size_t>(x));
  }
  return out;
}

nlohmann::ordered_json analysis_json(const std::string& name, const TopoSemigroup& ts,
                                     const VerifyOptions& opts) {
  ordered_json j;
  j["name"] = name;
  j["n"] = ts.size();

  const ClassifyFlags& cf = ts.algebra();
  j["algebra"] = ordered_json{{"band", cf.is_band},
                              {"completely_regular", cf.is_completely_regular},
                              {"cryptic", cf.is_cryptic},
                              {"cryptogroup", cf.is_cryptogroup}};

  const TopoFlags tf = classify_topological(ts);
  j["topology"] = ordered_json{{"mult_continuous", tf.mult_continuous},
                               {"inversion_continuous", tf.inversion_continuous},
                               {"topological_semigroup", tf.is_topological_semigroup},
                               {"topological_cryptogroup", tf.is_topological_cryptogroup},
                               {"band_of_topological_groups", tf.is_botg_criterion},
                               {"open_sets", ts.top().open_count()}};

  const SeparationFlags sep = ts.top().separation();
  ordered_json sj = flags_json(sep);
  sj["metrizable"] = sep.t1;
  sj["metrizable_annotation"] = "finite-proxy: metrizable iff T1 iff discrete";
  sj["separable"] = true;
  sj["first_countable"] = true;
  sj["second_countable"] = true;
  sj["countability_annotation"] = "trivially-true-on-finite";
  j["separation"] = sj;

  if (ts.is_cryptogroup()) {
    const HStructure& h = ts.h();
    ordered_json classes = ordered_json::array();
    for (int b = 0; b < h.h.block_count(); ++b) {
      ordered_json c;
      c["members"] = h.h.block(b);
      c["identity"] = h.idem_of_class[static_cast<std::size_t>(b)];
      classes.push_back(c);
    }
    ordered_json hj;
    hj["classes"] = classes;
    hj["inverse"] = h.inv;
    j["h_structure"] = hj;

    if (tf.is_botg_criterion) {
      const PerHClassSeparation per = separation_per_hclass(ts);
      ordered_json pj = ordered_json::array();
      for (const SeparationFlags& f : per.per_class) {
        pj.push_back(flags_json(f));
      }
      j["separation_per_class"] = pj;
    }

    if (ts.size() <= opts.enumeration_cap) {
      ordered_json subs = ordered_json::array();
      for (const SubcryptoRecord& r :
           enumerate_full_subcryptogroups(ts, true, opts.enumeration_cap)) {
        ordered_json rj;
        rj["subset"] = members_of(r.subset);
        rj["open"] = r.is_open;
        rj["closed"] = r.is_closed;
        rj["discrete_subspace"] = r.is_discrete_subspace;
        if (tf.is_botg_criterion) {
          const HausdorffTriple triple = hausdorff_equivalence(ts, r.subset);
          rj["quotient_hausdorff"] = triple.quotient_hausdorff;
          rj["rho_closed"] = triple.rho_closed;
          rj["n_closed"] = triple.n_closed;
        }
        subs.push_back(rj);
      }
      j["full_normal_subcryptogroups"] = subs;
    }
  }

  const Ledger ledger = verify_theorems(ts, opts);
  ordered_json lj = ordered_json::array();
  for (const CheckResult& c : ledger.items) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["applicable"] = c.applicable;
    cj["passed"] = c.passed;
    if (!c.note.empty()) {
      cj["note"] = c.note;
    }
    lj.push_back(cj);
  }
  j["theorems"] = lj;
  j["all_theorems_passed"] = ledger.all_passed();
  return j;
}

std::string analysis_text(const std::string& name, const TopoSemigroup& ts,
                          const VerifyOptions& opts) {
  const ordered_json j = analysis_json(name, ts, opts);
  std::ostringstream out;
  out << "instance " << j["name"].get<std::string>() << " (n=" << j["n"].get<int>() << ")\n";
  out << "  algebra:";
  for (const auto& [key, value] : j["algebra"].items()) {
    out << " " << key << "=" << (value.get<bool>() ? "yes" : "no");
  }
  out << "\n  topology:";
  for (const auto& [key, value] : j["topology"].items()) {
    if (value.is_boolean()) {
      out << " " << key << "=" << (value.get<bool>() ? "yes" : "no");
    } else {
      out << " " << key << "=" << value.dump();
    }
  }
  out << "\n  separation:";
  for (const auto& [key, value] : j["separation"].items()) {
    if (value.is_boolean()) {
      out << " " << key << "=" << (value.get<bool>() ? "yes" : "no");
    }
  }
  out << "\n";
  if (j.contains("h_structure")) {
    out << "  H-classes:";
    for (const auto& c : j["h_structure"]["classes"]) {
      out << " {";
      bool first = true;
      for (const auto& m : c["members"]) {
        out << (first ? "" : ",") << m.get<int>();
        first = false;
      }
      out << "}@" << c["identity"].get<int>();
    }
    out << "\n";
  }
  if (j.contains("full_normal_subcryptogroups")) {
    out << "  full normal subcryptogroups:\n";
    for (const auto& r : j["full_normal_subcryptogroups"]) {
      out << "    {";
      bool first = true;
      for (const auto& m : r["subset"]) {
        out << (first ? "" : ",") << m.get<int>();
        first = false;
      }
      out << "} open=" << (r["open"].get<bool>() ? "yes" : "no")
          << " closed=" << (r["closed"].get<bool>() ? "yes" : "no");
      if (r.contains("quotient_hausdorff")) {
        out << " triple=(" << (r["quotient_hausdorff"].get<bool>() ? "T" : "F") << ","
            << (r["rho_closed"].get<bool>() ? "T" : "F") << ","
            << (r["n_closed"].get<bool>() ? "T" : "F") << ")";
      }
      out << "\n";
    }
  }
  out << "  theorems:\n";
  for (const auto& c : j["theorems"]) {
    const bool applicable = c["applicable"].get<bool>();
    const bool passed = c["passed"].get<bool>();
    out << "    " << (applicable ? (passed ? "PASS" : "FAIL") : "SKIP") << " "
        << c["id"].get<std::string>();
    if (c.contains("note")) {
      out << " (" << c["note"].get<std::string>() << ")";
    }
    out << "\n";
  }
  out << (j["all_theorems_passed"].get<bool>() ? "  all applicable theorems passed\n"
                                               : "  THEOREM FAILURES PRESENT\n");
  return out.str();
}

}  // namespace semitop
