#include "dwarith/config.hpp"

#include <fstream>

namespace dwarith {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  fail(ErrorCode::SchemaError, path + ": " + msg);
}

const json& field(const json& doc, const std::string& path,
                  const std::string& key) {
  if (!doc.is_object() || !doc.contains(key))
    schema_fail(path, "missing field '" + key + "'");
  return doc.at(key);
}

int int_field(const json& doc, const std::string& path, const std::string& key) {
  const json& v = field(doc, path, key);
  if (!v.is_number_integer()) schema_fail(path + "." + key, "expected integer");
  return v.get<int>();
}

std::string string_field(const json& doc, const std::string& path,
                         const std::string& key) {
  const json& v = field(doc, path, key);
  if (!v.is_string()) schema_fail(path + "." + key, "expected string");
  return v.get<std::string>();
}

std::vector<int> int_array(const json& v, const std::string& path) {
  if (!v.is_array()) schema_fail(path, "expected array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) schema_fail(path, "expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

GroupPtr parse_group(const json& doc, const std::string& path) {
  if (!doc.is_object()) schema_fail(path, "expected group object");
  if (doc.contains("builtin")) {
    std::string kind = string_field(doc, path, "builtin");
    if (kind == "cyclic") return cyclic_group(int_field(doc, path, "n"));
    if (kind == "product")
      return product_of_cyclics(int_array(field(doc, path, "factors"),
                                          path + ".factors"));
    schema_fail(path + ".builtin", "unknown builtin group '" + kind + "'");
  }
  if (!doc.contains("table")) schema_fail(path, "need 'table' or 'builtin'");
  const json& tj = doc.at("table");
  if (!tj.is_array()) schema_fail(path + ".table", "expected array of rows");
  std::vector<std::vector<int>> table;
  for (std::size_t i = 0; i < tj.size(); ++i)
    table.push_back(int_array(tj.at(i), path + ".table[" + std::to_string(i) + "]"));
  std::vector<int> gens =
      int_array(field(doc, path, "generators"), path + ".generators");
  std::string label = doc.contains("label") ? string_field(doc, path, "label")
                                            : "table-group";
  return build_group(table, gens, label);
}

Cochain parse_cocycle(const json& doc, const std::string& path, GroupPtr gauge,
                      int modulus) {
  Cochain c = Cochain::zero(gauge, 3, modulus);
  if (!doc.is_object()) schema_fail(path, "expected cocycle object");
  if (doc.contains("builtin")) {
    std::string kind = string_field(doc, path, "builtin");
    if (kind == "zero") {
      // nothing to fill
    } else if (kind == "cyclic") {
      // c_k(a,b,c) = k·a·⌊(b+c)/n⌋ with the natural cyclic labels.
      require(gauge->label.rfind("cyclic(", 0) == 0, ErrorCode::SchemaError,
              path + ": builtin 'cyclic' cocycle needs a cyclic gauge group");
      int k = int_field(doc, path, "k");
      int n = gauge->order;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int cc = 0; cc < n; ++cc) {
            long long v = static_cast<long long>(k) * a * ((b + cc) / n);
            std::array<int, 3> t{a, b, cc};
            c.values[c.index_of(t)] =
                static_cast<int>(((v % modulus) + modulus) % modulus);
          }
    } else {
      schema_fail(path + ".builtin", "unknown builtin cocycle '" + kind + "'");
    }
  } else if (doc.contains("entries")) {
    const json& entries = doc.at("entries");
    if (!entries.is_array()) schema_fail(path + ".entries", "expected array");
    for (const auto& e : entries) {
      std::vector<int> row = int_array(e, path + ".entries[]");
      if (row.size() != 4) schema_fail(path + ".entries[]", "expected [a,b,c,v]");
      for (int i = 0; i < 3; ++i)
        if (row[i] < 0 || row[i] >= gauge->order)
          schema_fail(path + ".entries[]", "element index out of range");
      std::array<int, 3> t{row[0], row[1], row[2]};
      c.values[c.index_of(t)] = ((row[3] % modulus) + modulus) % modulus;
    }
  } else {
    schema_fail(path, "need 'builtin' or 'entries'");
  }
  std::vector<int> bad;
  if (!is_cocycle(c, &bad)) {
    std::string where;
    for (int x : bad) where += (where.empty() ? "" : ",") + std::to_string(x);
    fail(ErrorCode::NotACocycle,
         path + ": dc != 0 at quadruple (" + where + ")");
  }
  return c;
}

InvFunctional parse_inv(const json& doc, const std::string& path,
                        const GroupPtr& group, int modulus) {
  InvFunctional inv;
  inv.modulus = modulus;
  if (!doc.is_object()) schema_fail(path, "expected inv object");
  if (doc.contains("builtin")) {
    std::string kind = string_field(doc, path, "builtin");
    if (kind == "commutator_pairing") {
      // α(a,b) − α(b,a) on the first two generators.
      require(group->generators.size() >= 2, ErrorCode::SchemaError,
              path + ": commutator_pairing needs two generators");
      long long a = group->generators[0], b = group->generators[1];
      inv.terms.push_back({a, b, 1});
      inv.terms.push_back({b, a, -1});
    } else if (kind == "cyclic_sum") {
      // Σ_j α(s, j) over the whole group for the first generator s.
      long long s = group->generators[0];
      for (int j = 0; j < group->order; ++j) inv.terms.push_back({s, j, 1});
    } else {
      schema_fail(path + ".builtin", "unknown builtin inv '" + kind + "'");
    }
    return inv;
  }
  if (!doc.contains("entries")) schema_fail(path, "need 'builtin' or 'entries'");
  const json& entries = doc.at("entries");
  if (!entries.is_array()) schema_fail(path + ".entries", "expected array");
  for (const auto& e : entries) {
    std::vector<int> row = int_array(e, path + ".entries[]");
    if (row.size() != 3) schema_fail(path + ".entries[]", "expected [g,h,coeff]");
    inv.terms.push_back({row[0], row[1], row[2]});
  }
  return inv;
}

GroupHom parse_map(const json& doc, const std::string& path, GroupPtr source,
                   GroupPtr target) {
  std::vector<int> map = int_array(doc, path);
  if (static_cast<int>(map.size()) != source->order)
    schema_fail(path, "map length must equal the source order");
  for (int v : map)
    if (v < 0 || v >= target->order)
      schema_fail(path, "map image out of range");
  require(is_valid_hom(*source, *target, map), ErrorCode::SchemaError,
          path + ": map is not a homomorphism");
  return GroupHom{std::move(source), std::move(target), std::move(map)};
}

}  // namespace

const LocalDatum* ModelConfig::local_by_name(const std::string& name) const {
  for (const auto& d : locals)
    if (d->name == name) return d.get();
  return nullptr;
}

const GlobalDatum* ModelConfig::global_by_label(const std::string& label) const {
  for (const auto& d : globals)
    if (d->label == label) return d.get();
  return nullptr;
}

const GluingDatum* ModelConfig::gluing_by_label(const std::string& label) const {
  for (const auto& d : gluings)
    if (d->label == label) return d.get();
  return nullptr;
}

ModelConfig parse_config(const nlohmann::json& doc) {
  ModelConfig config;
  if (!doc.is_object()) schema_fail("$", "expected a configuration object");
  config.modulus = int_field(doc, "$", "modulus");
  if (config.modulus < 2) schema_fail("$.modulus", "modulus must be >= 2");
  config.gauge = parse_group(field(doc, "$", "gauge_group"), "$.gauge_group");
  require(config.gauge->order <= 64, ErrorCode::SchemaError,
          "$.gauge_group: order above 64 is not supported for degree-3 work");
  config.cocycle = parse_cocycle(field(doc, "$", "cocycle"), "$.cocycle",
                                 config.gauge, config.modulus);

  if (doc.contains("locals")) {
    const json& locals = doc.at("locals");
    if (!locals.is_array()) schema_fail("$.locals", "expected array");
    for (std::size_t i = 0; i < locals.size(); ++i) {
      const std::string path = "$.locals[" + std::to_string(i) + "]";
      const json& lj = locals.at(i);
      std::string name = string_field(lj, path, "name");
      require(config.local_by_name(name) == nullptr, ErrorCode::SchemaError,
              path + ": duplicate local name '" + name + "'");
      GroupPtr group = parse_group(field(lj, path, "group"), path + ".group");
      require(group->order <= 64, ErrorCode::SchemaError,
              path + ".group: order above 64 is not supported for degree-3 work");
      InvFunctional inv =
          parse_inv(field(lj, path, "inv"), path + ".inv", group, config.modulus);
      int orientation = lj.contains("orientation")
                            ? int_field(lj, path, "orientation")
                            : 1;
      std::optional<UnramifiedQuotient> unram;
      if (lj.contains("unramified")) {
        const json& uj = lj.at("unramified");
        GroupPtr ugroup = parse_group(field(uj, path + ".unramified", "group"),
                                      path + ".unramified.group");
        GroupHom v = parse_map(field(uj, path + ".unramified", "v_map"),
                               path + ".unramified.v_map", group, ugroup);
        unram = UnramifiedQuotient{ugroup, std::move(v)};
      }
      config.locals.push_back(std::make_unique<LocalDatum>(make_local_datum(
          std::move(name), std::move(group), std::move(inv), orientation,
          std::move(unram))));
    }
  }

  if (doc.contains("globals")) {
    const json& globals = doc.at("globals");
    if (!globals.is_array()) schema_fail("$.globals", "expected array");
    for (std::size_t i = 0; i < globals.size(); ++i) {
      const std::string path = "$.globals[" + std::to_string(i) + "]";
      const json& gj = globals.at(i);
      auto gd = std::make_unique<GlobalDatum>();
      gd->label = string_field(gj, path, "label");
      require(config.global_by_label(gd->label) == nullptr,
              ErrorCode::SchemaError,
              path + ": duplicate global label '" + gd->label + "'");
      gd->group = parse_group(field(gj, path, "group"), path + ".group");
      const json& atts = field(gj, path, "attachments");
      if (!atts.is_array()) schema_fail(path + ".attachments", "expected array");
      for (std::size_t a = 0; a < atts.size(); ++a) {
        const std::string apath =
            path + ".attachments[" + std::to_string(a) + "]";
        const json& aj = atts.at(a);
        std::string lname = string_field(aj, apath, "local");
        const LocalDatum* local = config.local_by_name(lname);
        require(local != nullptr, ErrorCode::DanglingReference,
                apath + ": unknown local '" + lname + "'");
        GroupHom iota = parse_map(field(aj, apath, "iota_map"),
                                  apath + ".iota_map", local->group, gd->group);
        gd->attachments.push_back(Attachment{local, std::move(iota)});
      }
      config.globals.push_back(std::move(gd));
    }
  }

  if (doc.contains("gluings")) {
    const json& gluings = doc.at("gluings");
    if (!gluings.is_array()) schema_fail("$.gluings", "expected array");
    for (std::size_t i = 0; i < gluings.size(); ++i) {
      const std::string path = "$.gluings[" + std::to_string(i) + "]";
      const json& gj = gluings.at(i);
      auto gl = std::make_unique<GluingDatum>();
      gl->label = string_field(gj, path, "label");
      std::string outer_label = string_field(gj, path, "outer");
      std::string inner_label = string_field(gj, path, "inner");
      gl->outer = config.global_by_label(outer_label);
      require(gl->outer != nullptr, ErrorCode::DanglingReference,
              path + ".outer: unknown global '" + outer_label + "'");
      gl->inner = config.global_by_label(inner_label);
      require(gl->inner != nullptr, ErrorCode::DanglingReference,
              path + ".inner: unknown global '" + inner_label + "'");
      gl->eta = parse_map(field(gj, path, "eta_map"), path + ".eta_map",
                          gl->outer->group, gl->inner->group);
      const json& umaps = field(gj, path, "u_maps");
      if (!umaps.is_object()) schema_fail(path + ".u_maps", "expected object");
      gl->u_maps.assign(gl->outer->attachments.size(), std::nullopt);
      for (const auto& [key, value] : umaps.items()) {
        const LocalDatum* local = config.local_by_name(key);
        require(local != nullptr, ErrorCode::DanglingReference,
                path + ".u_maps: unknown local '" + key + "'");
        require(local->unramified.has_value(), ErrorCode::SchemaError,
                path + ".u_maps: local '" + key + "' has no unramified quotient");
        bool placed = false;
        for (std::size_t a = 0; a < gl->outer->attachments.size(); ++a) {
          if (gl->outer->attachments[a].local == local) {
            gl->u_maps[a] = parse_map(value, path + ".u_maps." + key,
                                      local->unramified->group,
                                      gl->inner->group);
            placed = true;
          }
        }
        require(placed, ErrorCode::DanglingReference,
                path + ".u_maps: local '" + key +
                    "' is not attached to the outer global");
      }
      config.gluings.push_back(std::move(gl));
    }
  }

  if (doc.contains("sections")) {
    const json& sections = doc.at("sections");
    if (!sections.is_array()) schema_fail("$.sections", "expected array");
    for (std::size_t i = 0; i < sections.size(); ++i) {
      const std::string path = "$.sections[" + std::to_string(i) + "]";
      const json& sj = sections.at(i);
      SectionOverride so;
      so.name = string_field(sj, path, "name");
      const json& shifts = field(sj, path, "shifts");
      if (!shifts.is_object()) schema_fail(path + ".shifts", "expected object");
      for (const auto& [key, value] : shifts.items()) {
        require(config.local_by_name(key) != nullptr,
                ErrorCode::DanglingReference,
                path + ".shifts: unknown local '" + key + "'");
        so.shifts[key] = int_array(value, path + ".shifts." + key);
      }
      config.sections.push_back(std::move(so));
    }
  }

  if (doc.contains("transports")) {
    const json& transports = doc.at("transports");
    if (!transports.is_array()) schema_fail("$.transports", "expected array");
    for (std::size_t i = 0; i < transports.size(); ++i) {
      const std::string path = "$.transports[" + std::to_string(i) + "]";
      const json& tj = transports.at(i);
      TransportSpec spec;
      spec.name = string_field(tj, path, "name");
      spec.kind = string_field(tj, path, "kind");
      if (spec.kind == "section") {
        spec.to_section = string_field(tj, path, "to");
      } else if (spec.kind == "cocycle") {
        const json& entries = field(tj, path, "b_entries");
        if (!entries.is_array()) schema_fail(path + ".b_entries", "expected array");
        for (const auto& e : entries) {
          std::vector<int> row = int_array(e, path + ".b_entries[]");
          if (row.size() != 3)
            schema_fail(path + ".b_entries[]", "expected [g,h,v]");
          spec.witness.push_back({row[0], row[1], row[2]});
        }
      } else if (spec.kind == "isomorphism") {
        spec.global_label = string_field(tj, path, "global");
        spec.target_label = tj.contains("target")
                                ? string_field(tj, path, "target")
                                : spec.global_label;
        spec.group_iso =
            int_array(field(tj, path, "group_iso"), path + ".group_iso");
        const json& pis = field(tj, path, "prime_isos");
        if (!pis.is_array()) schema_fail(path + ".prime_isos", "expected array");
        for (std::size_t p = 0; p < pis.size(); ++p)
          spec.prime_isos.push_back(int_array(
              pis.at(p), path + ".prime_isos[" + std::to_string(p) + "]"));
      } else {
        schema_fail(path + ".kind", "unknown transport kind '" + spec.kind + "'");
      }
      config.transports.push_back(std::move(spec));
    }
  }
  return config;
}

ModelConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::SchemaError, "cannot open config '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::SchemaError, "config '" + path + "' is not valid JSON: " +
                                      e.what());
  }
  return parse_config(doc);
}

Section section_from_override(const ModelConfig& config,
                              const Boundary& boundary,
                              const std::string& name) {
  Section x = default_section(boundary);
  if (name.empty() || name == "default") return x;
  const SectionOverride* found = nullptr;
  for (const auto& so : config.sections)
    if (so.name == name) found = &so;
  require(found != nullptr, ErrorCode::DanglingReference,
          "unknown section override '" + name + "'");
  x.label = name;
  for (int p = 0; p < boundary.prime_count(); ++p) {
    auto it = found->shifts.find(boundary.components[p].datum->name);
    if (it == found->shifts.end()) continue;
    const auto& shifts = it->second;
    require(static_cast<int>(shifts.size()) ==
                boundary.components[p].reps.size(),
            ErrorCode::SchemaError,
            "section '" + name + "' shift list for '" +
                boundary.components[p].datum->name +
                "' has the wrong length");
    for (int i = 0; i < boundary.components[p].reps.size(); ++i)
      x.assignment[p][i] = fiber_act(x.at(p, i), shifts[i]);
  }
  return x;
}

}  // namespace dwarith
