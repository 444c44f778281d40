#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semitop/error.hpp"
#include "semitop/io.hpp"
#include "semitop/subcrypto.hpp"
#include "semitop/theorems.hpp"
#include "semitop/topo_semigroup.hpp"

namespace {

using namespace semitop;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw Error("ParseError: cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string csv(const Bits& b) {
  std::string out;
  bool first = true;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    if (!first) {
      out += ",";
    }
    out += std::to_string(i);
    first = false;
  }
  return out;
}

FinSemigroup gen_kind(const std::string& kind, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw Error("BadParams: " + kind + " expects " + std::to_string(k) + " parameter(s)");
    }
  };
  if (kind == "zn_mul") {
    need(1);
    return zn_mul(params[0]);
  }
  if (kind == "zn_add") {
    need(1);
    return zn_add(params[0]);
  }
  if (kind == "left_zero") {
    need(1);
    return left_zero(params[0]);
  }
  if (kind == "right_zero") {
    need(1);
    return right_zero(params[0]);
  }
  if (kind == "rectangular_band") {
    need(2);
    return rectangular_band(params[0], params[1]);
  }
  throw Error("BadParams: unknown generator kind " + kind);
}

// "kind:3" or "kind:2:4" for the factors of a direct product.
FinSemigroup gen_token(const std::string& token) {
  std::stringstream ss(token);
  std::string kind;
  if (!std::getline(ss, kind, ':')) {
    throw Error("BadParams: empty generator token");
  }
  std::vector<int> params;
  std::string part;
  while (std::getline(ss, part, ':')) {
    params.push_back(std::stoi(part));
  }
  return gen_kind(kind, params);
}

FinTopology topology_for(const FinSemigroup& s, const std::string& spec) {
  if (spec == "discrete") {
    return FinTopology::discrete(s.size());
  }
  if (spec == "indiscrete") {
    return FinTopology::indiscrete(s.size());
  }
  if (spec == "h-block") {
    return topology_from_h_discrete(s);
  }
  if (spec.rfind("subbase=", 0) == 0) {
    std::vector<Bits> subbase;
    std::stringstream sets(spec.substr(8));
    std::string one;
    while (std::getline(sets, one, ';')) {
      Bits b(static_cast<std::size_t>(s.size()));
      std::stringstream elems(one);
      std::string tok;
      while (std::getline(elems, tok, ',')) {
        if (tok.empty()) {
          continue;
        }
        const int x = std::stoi(tok);
        if (x < 0 || x >= s.size()) {
          throw Error("SubsetOutOfRange: subbase element " + tok);
        }
        b.set(static_cast<std::size_t>(x));
      }
      subbase.push_back(std::move(b));
    }
    return FinTopology::generate(s.size(), subbase);
  }
  throw Error("BadParams: unknown topology spec " + spec);
}

int run_check(const std::string& property, const TopoSemigroup& ts) {
  bool value = false;
  if (property == "topological-semigroup") {
    value = classify_topological(ts).is_topological_semigroup;
  } else if (property == "topological-cryptogroup") {
    value = classify_topological(ts).is_topological_cryptogroup;
  } else if (property == "botg") {
    value = classify_topological(ts).is_botg_criterion;
  } else if (property == "hausdorff") {
    value = ts.top().separation().t2;
  } else if (property == "t0") {
    value = ts.top().separation().t0;
  } else if (property == "t1") {
    value = ts.top().separation().t1;
  } else if (property == "regular") {
    value = ts.top().separation().regular;
  } else if (property == "completely-regular") {
    value = ts.top().separation().completely_regular;
  } else if (property == "normal") {
    value = ts.top().separation().normal;
  } else if (property == "connected") {
    value = ts.top().separation().connected;
  } else {
    throw Error("BadParams: unknown property " + property);
  }
  return value ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite topological semigroups: cryptogroups, bands of topological groups, "
               "star sets and quotients"};
  app.require_subcommand(1);

  std::string file;
  std::string property;
  std::string kind;
  std::vector<std::string> gen_params;
  std::string topology_spec = "discrete";
  std::string by_n;
  std::string star_kind;
  std::string set1;
  std::string set2;
  std::string out_name;
  int star_x = -1;
  int star_y = -1;
  int cap = 20;
  bool as_json = false;
  bool as_text = false;
  bool only_normal = false;
  bool by_h = false;

  auto* analyze = app.add_subcommand("analyze", "full report for an instance");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--json", as_json, "machine-readable report");
  analyze->add_flag("--text", as_text, "plain-text report (default)");

  auto* check = app.add_subcommand("check", "test one property; exit 0 on true, 1 on false");
  check->add_option("property", property)->required();
  check->add_option("file", file)->required();

  auto* subs = app.add_subcommand("subcryptogroups", "enumerate full subcryptogroups");
  subs->add_option("file", file)->required();
  subs->add_flag("--normal", only_normal, "normal ones only");
  subs->add_option("--cap", cap, "enumeration size cap");

  auto* quot = app.add_subcommand("quotient", "emit a quotient instance document");
  quot->add_option("file", file)->required();
  quot->add_option("--by-n", by_n, "full normal subcryptogroup: subset name or csv");
  quot->add_flag("--by-h", by_h, "quotient by the H congruence");
  quot->add_option("--name", out_name, "name for the emitted instance");

  auto* star = app.add_subcommand("star", "evaluate a star set");
  star->add_option("file", file)->required();
  star->add_option("--kind", star_kind, "xU | Ux | UV | xUy")->required();
  star->add_option("--x", star_x);
  star->add_option("--y", star_y);
  star->add_option("--set", set1, "subset name or csv");
  star->add_option("--set2", set2, "second subset for UV");

  auto* build = app.add_subcommand("build-topology",
                                   "construct a topology from neighborhood families");
  build->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "emit a generated instance document");
  gen->add_option("kind", kind,
                  "zn_mul | zn_add | left_zero | right_zero | rectangular_band | direct_product")
      ->required();
  gen->add_option("params", gen_params, "integer parameters, or kind:params for factors");
  gen->add_option("--topology", topology_spec, "discrete | indiscrete | h-block | subbase=...");
  gen->add_option("--name", out_name, "name for the emitted instance");

  auto* verify = app.add_subcommand("verify-theorems", "run the whole assertion suite");
  verify->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) {
      const InstanceDocument doc = parse_instance(read_input(file));
      const TopoSemigroup ts = to_instance(doc);
      if (as_json) {
        std::cout << analysis_json(doc.name, ts).dump(2) << "\n";
      } else {
        std::cout << analysis_text(doc.name, ts);
      }
      return 0;
    }
    if (check->parsed()) {
      const InstanceDocument doc = parse_instance(read_input(file));
      return run_check(property, to_instance(doc));
    }
    if (subs->parsed()) {
      const InstanceDocument doc = parse_instance(read_input(file));
      const TopoSemigroup ts = to_instance(doc);
      const bool botg = classify_topological(ts).is_botg_criterion;
      for (const SubcryptoRecord& r : enumerate_full_subcryptogroups(ts, only_normal, cap)) {
        std::cout << "{" << csv(r.subset) << "}"
                  << " full=" << (r.is_full ? "yes" : "no")
                  << " normal=" << (r.is_normal ? "yes" : "no")
                  << " open=" << (r.is_open ? "yes" : "no")
                  << " closed=" << (r.is_closed ? "yes" : "no")
                  << " discrete=" << (r.is_discrete_subspace ? "yes" : "no");
        if (botg && r.is_normal) {
          const HausdorffTriple t = hausdorff_equivalence(ts, r.subset);
          std::cout << " quotient-hausdorff=" << (t.quotient_hausdorff ? "yes" : "no")
                    << " rho-closed=" << (t.rho_closed ? "yes" : "no")
                    << " n-closed=" << (t.n_closed ? "yes" : "no");
        }
        std::cout << "\n";
      }
      return 0;
    }
    if (quot->parsed()) {
      const InstanceDocument doc = parse_instance(read_input(file));
      const TopoSemigroup ts = to_instance(doc);
      if (by_h == by_n.empty()) {
        throw Error("BadParams: pass exactly one of --by-n and --by-h");
      }
      if (by_h) {
        if (!ts.is_cryptogroup()) {
          throw Error("NotCryptogroup: quotient by H needs a cryptogroup");
        }
        const Partition& h = ts.h().h;
        auto [qsgp, projection] = ts.sgp().quotient(h);
        (void)projection;
        TopoSemigroup quotient(std::move(qsgp), quotient_topology(ts.top(), h));
        const std::string name = out_name.empty() ? doc.name + "_mod_h" : out_name;
        std::cout << emit_instance(document_of(name, quotient));
      } else {
        const Bits n = subset_of(doc, by_n);
        QuotientByN q = quotient_by_n(ts, n);
        const std::string name = out_name.empty() ? doc.name + "_mod_n" : out_name;
        std::cout << emit_instance(document_of(name, q.instance));
      }
      return 0;
    }
    if (star->parsed()) {
      const InstanceDocument doc = parse_instance(read_input(file));
      const TopoSemigroup ts = to_instance(doc);
      Bits result;
      if (star_kind == "xU") {
        if (star_x < 0 || set1.empty()) {
          throw Error("BadParams: xU needs --x and --set");
        }
        result = star_xu(ts, star_x, subset_of(doc, set1));
      } else if (star_kind == "Ux") {
        if (star_x < 0 || set1.empty()) {
          throw Error("BadParams: Ux needs --x and --set");
        }
        result = star_ux(ts, subset_of(doc, set1), star_x);
      } else if (star_kind == "UV") {
        if (set1.empty() || set2.empty()) {
          throw Error("BadParams: UV needs --set and --set2");
        }
        result = star_uv(ts, subset_of(doc, set1), subset_of(doc, set2));
      } else if (star_kind == "xUy") {
        if (star_x < 0 || star_y < 0 || set1.empty()) {
          throw Error("BadParams: xUy needs --x, --y and --set");
        }
        result = star_xuy(ts, star_x, subset_of(doc, set1), star_y);
      } else {
        throw Error("BadParams: unknown star kind " + star_kind);
      }
      std::cout << csv(result) << "\n";
      return 0;
    }
    if (build->parsed()) {
      const InstanceDocument doc = parse_instance(read_input(file));
      if (doc.neighborhoods.empty()) {
        throw Error("MissingIdempotentFamily: document carries no neighborhood families");
      }
      FinSemigroup s = FinSemigroup::from_table(doc.table);
      FinTopology t = topology_from_neighborhoods(s, neighborhoods_of(doc));
      TopoSemigroup ts(std::move(s), std::move(t));
      std::cout << emit_instance(document_of(doc.name + "_built", ts));
      return 0;
    }
    if (gen->parsed()) {
      FinSemigroup s = [&] {
        if (kind == "direct_product") {
          if (gen_params.size() != 2) {
            throw Error("BadParams: direct_product expects two kind:params tokens");
          }
          return direct_product(gen_token(gen_params[0]), gen_token(gen_params[1]));
        }
        std::vector<int> params;
        params.reserve(gen_params.size());
        for (const std::string& p : gen_params) {
          params.push_back(std::stoi(p));
        }
        return gen_kind(kind, params);
      }();
      FinTopology t = topology_for(s, topology_spec);
      TopoSemigroup ts(std::move(s), std::move(t));
      std::string name = out_name;
      if (name.empty()) {
        name = kind;
        for (const std::string& p : gen_params) {
          name += "_" + p;
        }
      }
      std::cout << emit_instance(document_of(name, ts));
      return 0;
    }
    if (verify->parsed()) {
      const InstanceDocument doc = parse_instance(read_input(file));
      const TopoSemigroup ts = to_instance(doc);
      const Ledger ledger = verify_theorems(ts);
      for (const CheckResult& c : ledger.items) {
        std::cout << (c.applicable ? (c.passed ? "PASS" : "FAIL") : "SKIP") << " " << c.id;
        if (!c.note.empty()) {
          std::cout << " (" << c.note << ")";
        }
        std::cout << "\n";
      }
      const std::size_t failures = ledger.failure_count();
      std::cout << (failures == 0 ? "all applicable assertions passed"
                                  : std::to_string(failures) + " assertion(s) failed")
                << "\n";
      return failures == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
