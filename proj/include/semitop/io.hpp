#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semitop/theorems.hpp"
#include "semitop/topo_semigroup.hpp"

namespace semitop {

// On-disk form of an instance: a named Cayley table plus a topology given
// either as an explicit opens family or as a subbase, with optional named
// subsets and optional neighborhood families keyed by idempotent.
struct InstanceDocument {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> table;
  std::optional<std::vector<std::vector<int>>> opens;
  std::optional<std::vector<std::vector<int>>> subbase;
  std::map<std::string, std::vector<int>> subsets;
  std::map<int, std::vector<std::vector<int>>> neighborhoods;
};

InstanceDocument parse_instance(const std::string& text);
InstanceDocument load_instance_file(const std::string& path);

// Canonical emission: topology always as sorted opens, subsets sorted by
// name, two-space indentation. emit(parse(emit(d))) is byte-identical.
std::string emit_instance(const InstanceDocument& doc);

FinTopology topology_of(const InstanceDocument& doc);
TopoSemigroup to_instance(const InstanceDocument& doc);
NeighborhoodSystem neighborhoods_of(const InstanceDocument& doc);
InstanceDocument document_of(const std::string& name, const TopoSemigroup& ts);

Bits subset_of(const InstanceDocument& doc, const std::string& name_or_csv);

nlohmann::ordered_json analysis_json(const std::string& name, const TopoSemigroup& ts,
                                     const VerifyOptions& opts = {});
std::string analysis_text(const std::string& name, const TopoSemigroup& ts,
                          const VerifyOptions& opts = {});

}  // namespace semitop
