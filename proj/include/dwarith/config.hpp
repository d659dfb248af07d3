#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwarith/global.hpp"

namespace dwarith {

struct SectionOverride {
  std::string name;
  std::map<std::string, std::vector<int>> shifts;  // local name -> per-rep shift
};

struct TransportSpec {
  std::string name;
  std::string kind;  // "section" | "cocycle" | "isomorphism"
  std::string to_section;                         // section kind
  std::vector<std::array<long long, 3>> witness;  // cocycle kind: b entries
  std::string global_label;                       // isomorphism kind
  std::string target_label;
  std::vector<int> group_iso;
  std::vector<std::vector<int>> prime_isos;
};

/// A fully validated model: gauge group, 3-cocycle, local data, global data,
/// gluing data, optional named section overrides and transport declarations.
struct ModelConfig {
  int modulus = 2;
  GroupPtr gauge;
  Cochain cocycle;
  std::vector<std::unique_ptr<LocalDatum>> locals;
  std::vector<std::unique_ptr<GlobalDatum>> globals;
  std::vector<std::unique_ptr<GluingDatum>> gluings;
  std::vector<SectionOverride> sections;
  std::vector<TransportSpec> transports;

  const LocalDatum* local_by_name(const std::string& name) const;
  const GlobalDatum* global_by_label(const std::string& label) const;
  const GluingDatum* gluing_by_label(const std::string& label) const;
};

/// Parses and validates a configuration document. Throws SchemaError,
/// DanglingReference or NotACocycle with a path to the offending field.
ModelConfig parse_config(const nlohmann::json& doc);
ModelConfig load_config_file(const std::string& path);

/// Applies a named section override (torsor shifts at each rep) to the
/// default section of a boundary. The empty name returns the default section.
Section section_from_override(const ModelConfig& config,
                              const Boundary& boundary,
                              const std::string& name);

}  // namespace dwarith
