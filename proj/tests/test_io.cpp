#include <doctest.h>

#include <fstream>
#include <sstream>

#include "semitop/error.hpp"
#include "semitop/io.hpp"
#include "semitop/subcrypto.hpp"
#include "support/corpus.hpp"

using namespace semitop;
using namespace semitop::testing;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(SEMITOP_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("fixtures parse and match the in-code examples") {
  const InstanceDocument d1 = load_instance_file(fixture_path("ex2_1.json"));
  CHECK(d1.name == "ex2_1");
  CHECK(d1.n == 10);
  const TopoSemigroup t1 = to_instance(d1);
  CHECK(t1.sgp() == example_2_1().sgp());
  CHECK(t1.top() == example_2_1().top());
  CHECK(subset_of(d1, "E") == make_bits(10, {0, 1, 5, 6}));
  CHECK(subset_of(d1, "N") == make_bits(10, {0, 1, 2, 4, 5, 6, 8}));

  const TopoSemigroup t2 = to_instance(load_instance_file(fixture_path("ex2_2.json")));
  CHECK(t2.top() == example_2_2().top());

  const TopoSemigroup t3 = to_instance(load_instance_file(fixture_path("ex2_3.json")));
  CHECK(t3.top() == example_2_3().top());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_instance("{not json"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parse_instance("{\"n\": 2}"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"n": 2, "table": [[0,1],[1,0]]})"),
      doctest::Contains("ParseError"), Error);  // topology missing

  // Delegated validation: a non-associative table.
  const std::string doc = R"({
    "name": "bad", "n": 3,
    "table": [[0,2,1],[2,1,0],[1,0,2]],
    "topology": {"opens": []}
  })";
  CHECK_THROWS_WITH_AS(to_instance(parse_instance(doc)), doctest::Contains("NotAssociative"),
                       Error);

  CHECK_THROWS_WITH_AS(
      to_instance(parse_instance(
          R"({"name":"oops","n":2,"table":[[0,1],[1,2]],"topology":{"opens":[]}})")),
      doctest::Contains("EntryOutOfRange"), Error);

  CHECK_THROWS_WITH_AS(
      topology_of(parse_instance(
          R"({"name":"oor","n":2,"table":[[0,1],[1,0]],"topology":{"subbase":[[7]]}})")),
      doctest::Contains("SubsetOutOfRange"), Error);
}

TEST_CASE("canonical emission round trip") {
  for (const std::string name : {"ex2_1.json", "ex2_2.json", "ex2_3.json"}) {
    CAPTURE(name);
    const InstanceDocument doc = load_instance_file(fixture_path(name));
    const std::string once = emit_instance(doc);
    const std::string twice = emit_instance(parse_instance(once));
    CHECK(once == twice);  // byte-identical for canonical documents
    // Re-parses to the same instance.
    const TopoSemigroup a = to_instance(doc);
    const TopoSemigroup b = to_instance(parse_instance(once));
    CHECK(a.sgp() == b.sgp());
    CHECK(a.top() == b.top());
  }
}

TEST_CASE("emitted quotient documents re-validate") {
  const InstanceDocument doc = load_instance_file(fixture_path("ex2_1.json"));
  const TopoSemigroup ts = to_instance(doc);
  const QuotientByN q = quotient_by_n(ts, subset_of(doc, "N"));
  const std::string emitted = emit_instance(document_of("ex2_1_mod_n", q.instance));
  const TopoSemigroup back = to_instance(parse_instance(emitted));
  CHECK(back.sgp() == q.instance.sgp());
  CHECK(back.top() == q.instance.top());
  CHECK(back.top().separation().t2);
}

TEST_CASE("analysis report") {
  const TopoSemigroup ts = example_2_1();
  const auto j = analysis_json("ex2_1", ts);
  CHECK(j["algebra"]["cryptogroup"].get<bool>());
  CHECK(j["topology"]["band_of_topological_groups"].get<bool>());
  CHECK(!j["separation"]["t0"].get<bool>());
  CHECK(j["separation"]["separable"].get<bool>());
  CHECK(j["all_theorems_passed"].get<bool>());
  CHECK(j["full_normal_subcryptogroups"].size() == 6);

  // Every reported subcryptogroup triple is internally equal
  // (the fixture is botg, so the three conditions coincide).
  for (const auto& r : j["full_normal_subcryptogroups"]) {
    CHECK(r["quotient_hausdorff"].get<bool>() == r["rho_closed"].get<bool>());
    CHECK(r["rho_closed"].get<bool>() == r["n_closed"].get<bool>());
  }

  const std::string text = analysis_text("ex2_1", ts);
  CHECK(text.find("cryptogroup=yes") != std::string::npos);
  CHECK(text.find("all applicable theorems passed") != std::string::npos);
}

TEST_CASE("neighborhood documents") {
  // A document carrying neighborhood families drives the construction.
  const std::string doc_text = R"({
    "name": "z6_blocks", "n": 6,
    "table": [[0,0,0,0,0,0],[0,1,2,3,4,5],[0,2,4,0,2,4],[0,3,0,3,0,3],[0,4,2,0,4,2],[0,5,4,3,2,1]],
    "topology": {"subbase": []},
    "neighborhoods": {"0": [[0]], "1": [[1,5]], "3": [[3]], "4": [[2,4]]}
  })";
  const InstanceDocument doc = parse_instance(doc_text);
  const NeighborhoodSystem ns = neighborhoods_of(doc);
  const FinSemigroup s = FinSemigroup::from_table(doc.table);
  CHECK(s == zn_mul(6));
  const FinTopology t = topology_from_neighborhoods(s, ns);
  CHECK(t == topology_from_h_discrete(s));
}
