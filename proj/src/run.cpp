#include "dwarith/run.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dwarith/checks.hpp"
#include "dwarith/quantum.hpp"

namespace dwarith {

namespace {

using nlohmann::ordered_json;

ordered_json hom_images(const GroupHom& hom) {
  ordered_json out = ordered_json::array();
  for (int gen : hom.source->generators) out.push_back(hom.map[gen]);
  return out;
}

ordered_json tuple_images(const Boundary& boundary, long long tuple) {
  ordered_json out = ordered_json::array();
  std::vector<int> parts = boundary.tuple_at(tuple);
  for (int p = 0; p < boundary.prime_count(); ++p)
    out.push_back(hom_images(boundary.components[p].reps.homs[parts[p]]));
  return out;
}

ordered_json cyclotomic_json(const Cyclotomic& value) {
  ordered_json out;
  out["coeffs"] = value.coeffs();
  out["den"] = value.denominator();
  return out;
}

ordered_json theta_json(const Boundary& boundary, const ThetaVector& theta) {
  ordered_json out;
  out["base"] = theta.base_names;
  out["section"] = theta.section_label;
  ordered_json entries = ordered_json::array();
  for (long long t = 0; t < theta.size(); ++t) {
    ordered_json row;
    row["rho_S"] = tuple_images(boundary, t);
    row["value"] = cyclotomic_json(theta.entries[t]);
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

ordered_json report_json(const AxiomReport& report) {
  ordered_json items = ordered_json::array();
  for (const CheckItem& item : report.items) {
    ordered_json row;
    row["check"] = item.name;
    row["passed"] = item.passed;
    if (!item.detail.empty()) row["detail"] = item.detail;
    items.push_back(std::move(row));
  }
  return items;
}

struct SpaceEntry {
  std::string name;
  Boundary boundary;
};

// Deterministic list of boundary models: one per local, then one per global.
std::vector<SpaceEntry> model_spaces(const ModelConfig& config) {
  std::vector<SpaceEntry> spaces;
  for (const auto& local : config.locals)
    spaces.push_back(SpaceEntry{
        local->name,
        make_boundary(config.gauge, config.cocycle, {local.get()})});
  for (const auto& global : config.globals) {
    std::vector<const LocalDatum*> locals;
    for (const Attachment& att : global->attachments)
      locals.push_back(att.local);
    if (locals.empty()) continue;
    spaces.push_back(SpaceEntry{
        global->label, make_boundary(config.gauge, config.cocycle, locals)});
  }
  return spaces;
}

bool tube_capable(const Boundary& boundary) {
  return boundary.prime_count() > 0 &&
         std::all_of(boundary.components.begin(), boundary.components.end(),
                     [](const BoundaryComponent& comp) {
                       return comp.datum->unramified.has_value();
                     });
}

void render_text(const ordered_json& doc, std::ostream& os, int indent = 0) {
  const std::string pad(indent, ' ');
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) {
      if (value.is_object() || value.is_array()) {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (doc.is_array()) {
    for (const auto& value : doc) {
      if (value.is_object() || value.is_array()) {
        os << pad << "-\n";
        render_text(value, os, indent + 2);
      } else {
        os << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << doc.dump() << "\n";
  }
}

ordered_json cmd_validate(const ModelConfig& config, bool& ok) {
  ordered_json out;
  ordered_json locals = ordered_json::array();
  for (const auto& local : config.locals) {
    Boundary boundary =
        make_boundary(config.gauge, config.cocycle, {local.get()});
    AxiomReport report = check_local_axioms(boundary);
    ok = ok && report.passed();
    ordered_json row;
    row["local"] = local->name;
    row["passed"] = report.passed();
    row["checks"] = report_json(report);
    locals.push_back(std::move(row));
  }
  out["locals"] = std::move(locals);

  ordered_json globals = ordered_json::array();
  for (const auto& global : config.globals) {
    GlobalContext ctx =
        make_global_context(*global, config.gauge, config.cocycle);
    AxiomReport report = check_global_axioms(ctx);
    ok = ok && report.passed();
    ordered_json row;
    row["global"] = global->label;
    row["passed"] = report.passed();
    row["checks"] = report_json(report);
    if (tube_capable(ctx.boundary)) {
      TubeContext tube = make_tube_context(ctx.boundary);
      AxiomReport tr = check_tube_axioms(tube);
      ok = ok && tr.passed();
      row["tube_checks"] = report_json(tr);
      row["tube_passed"] = tr.passed();
    }
    globals.push_back(std::move(row));
  }
  out["globals"] = std::move(globals);

  ordered_json gluings = ordered_json::array();
  for (const auto& gluing : config.gluings) {
    GluingContext ctx =
        make_gluing_context(*gluing, config.gauge, config.cocycle);
    AxiomReport report = check_gluing_axioms(ctx);
    AxiomReport tube_report = check_tube_axioms(ctx.tube);
    ok = ok && report.passed() && tube_report.passed();
    ordered_json row;
    row["gluing"] = gluing->label;
    row["passed"] = report.passed() && tube_report.passed();
    row["checks"] = report_json(report);
    row["tube_checks"] = report_json(tube_report);
    gluings.push_back(std::move(row));
  }
  out["gluings"] = std::move(gluings);
  return out;
}

ordered_json cmd_homs(const ModelConfig& config) {
  ordered_json out;
  ordered_json locals = ordered_json::array();
  for (const auto& local : config.locals) {
    HomSet reps = enumerate_hom_set(local->group, config.gauge);
    ordered_json row;
    row["local"] = local->name;
    row["count"] = reps.size();
    ordered_json homs = ordered_json::array();
    for (const GroupHom& hom : reps.homs) homs.push_back(hom_images(hom));
    row["homs"] = std::move(homs);
    OrbitDecomposition dec =
        orbits_stabilizers(reps.size(), *config.gauge, reps.conj_action);
    ordered_json orbits = ordered_json::array();
    for (const Orbit& orbit : dec.orbits) {
      ordered_json orow;
      orow["representative"] = orbit.representative;
      orow["elements"] = orbit.elements;
      orow["stabilizer"] = orbit.stabilizer;
      orbits.push_back(std::move(orow));
    }
    row["orbits"] = std::move(orbits);
    locals.push_back(std::move(row));
  }
  out["locals"] = std::move(locals);

  ordered_json globals = ordered_json::array();
  for (const auto& global : config.globals) {
    HomSet reps = enumerate_hom_set(global->group, config.gauge);
    ordered_json row;
    row["global"] = global->label;
    row["count"] = reps.size();
    ordered_json homs = ordered_json::array();
    for (const GroupHom& hom : reps.homs) homs.push_back(hom_images(hom));
    row["homs"] = std::move(homs);
    OrbitDecomposition dec =
        orbits_stabilizers(reps.size(), *config.gauge, reps.conj_action);
    ordered_json orbits = ordered_json::array();
    for (const Orbit& orbit : dec.orbits) {
      ordered_json orow;
      orow["representative"] = orbit.representative;
      orow["elements"] = orbit.elements;
      orow["stabilizer"] = orbit.stabilizer;
      orbits.push_back(std::move(orow));
    }
    row["orbits"] = std::move(orbits);
    globals.push_back(std::move(row));
  }
  out["globals"] = std::move(globals);
  return out;
}

ordered_json cmd_lambda(const ModelConfig& config) {
  ordered_json out = ordered_json::array();
  for (const SpaceEntry& space : model_spaces(config)) {
    if (!check_local_axioms(space.boundary).passed()) continue;
    Section x = default_section(space.boundary);
    auto lam = lambda_table(space.boundary, x);
    ordered_json row;
    row["space"] = space.name;
    row["section"] = x.label;
    ordered_json table = ordered_json::array();
    for (int g = 0; g < config.gauge->order; ++g) {
      ordered_json grow;
      grow["g"] = g;
      ordered_json values = ordered_json::array();
      for (long long t = 0; t < space.boundary.tuple_count(); ++t) {
        ordered_json cell;
        cell["rho_S"] = tuple_images(space.boundary, t);
        cell["lambda"] = lam[g][t];
        values.push_back(std::move(cell));
      }
      grow["values"] = std::move(values);
      table.push_back(std::move(grow));
    }
    row["table"] = std::move(table);
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json cmd_cs(const ModelConfig& config) {
  ordered_json out;
  ordered_json globals = ordered_json::array();
  for (const auto& global : config.globals) {
    GlobalContext ctx =
        make_global_context(*global, config.gauge, config.cocycle);
    if (!check_global_axioms(ctx).passed() ||
        !check_local_axioms(ctx.boundary).passed())
      continue;
    Section x = default_section(ctx.boundary);
    std::vector<int> table = cs_global_table(ctx, x);
    ordered_json row;
    row["global"] = global->label;
    row["section"] = x.label;
    ordered_json values = ordered_json::array();
    for (int i = 0; i < ctx.reps.size(); ++i) {
      ordered_json cell;
      cell["rho"] = hom_images(ctx.reps.homs[i]);
      cell["cs"] = table[i];
      values.push_back(std::move(cell));
    }
    row["values"] = std::move(values);
    globals.push_back(std::move(row));
  }
  out["globals"] = std::move(globals);

  ordered_json tubes = ordered_json::array();
  for (const SpaceEntry& space : model_spaces(config)) {
    if (!tube_capable(space.boundary)) continue;
    if (!check_local_axioms(space.boundary).passed()) continue;
    TubeContext tube = make_tube_context(space.boundary);
    if (!check_tube_axioms(tube).passed()) continue;
    Section x = default_section(space.boundary);
    std::vector<int> table = cs_tube_table(tube, x);
    ordered_json row;
    row["space"] = space.name;
    row["section"] = x.label;
    ordered_json values = ordered_json::array();
    for (long long t = 0; t < tube.tilde_count(); ++t) {
      ordered_json cell;
      std::vector<int> parts = tube.tilde_at(t);
      ordered_json images = ordered_json::array();
      for (int p = 0; p < tube.prime_count(); ++p)
        images.push_back(hom_images(tube.tilde_reps[p].homs[parts[p]]));
      cell["rho_tilde"] = std::move(images);
      cell["cs"] = table[t];
      values.push_back(std::move(cell));
    }
    row["values"] = std::move(values);
    tubes.push_back(std::move(row));
  }
  out["tubes"] = std::move(tubes);

  ordered_json closed = ordered_json::array();
  std::map<std::string, std::vector<std::pair<std::string, std::vector<int>>>>
      by_inner;
  for (const auto& gluing : config.gluings) {
    GluingContext ctx =
        make_gluing_context(*gluing, config.gauge, config.cocycle);
    if (!check_gluing_axioms(ctx).passed()) continue;
    Section x = default_section(ctx.outer_ctx.boundary);
    ordered_json row;
    row["gluing"] = gluing->label;
    if (ctx.closed_case()) {
      std::vector<int> table = cs_closed_table(ctx, x);
      ordered_json values = ordered_json::array();
      for (int i = 0; i < ctx.inner_ctx.reps.size(); ++i) {
        ordered_json cell;
        cell["rho"] = hom_images(ctx.inner_ctx.reps.homs[i]);
        cell["cs"] = table[i];
        values.push_back(std::move(cell));
      }
      row["closed_cs"] = std::move(values);
      by_inner[gluing->inner->label].push_back({gluing->label, table});
    } else {
      ordered_json rows = ordered_json::array();
      for (const DecompositionRow& dr : check_decomposition(ctx, x)) {
        ordered_json cell;
        cell["rho"] = hom_images(ctx.inner_ctx.reps.homs[dr.inner_rep]);
        cell["lhs"] = dr.lhs;
        cell["rhs"] = dr.rhs;
        cell["equal"] = dr.equal;
        rows.push_back(std::move(cell));
      }
      row["decomposition"] = std::move(rows);
    }
    closed.push_back(std::move(row));
  }
  for (const auto& [inner, tables] : by_inner) {
    if (tables.size() < 2) continue;
    ordered_json row;
    row["inner"] = inner;
    bool agree = true;
    for (const auto& [label, table] : tables)
      if (table != tables.front().second) agree = false;
    row["auxiliary_independent"] = agree;
    closed.push_back(std::move(row));
  }
  out["gluings"] = std::move(closed);
  return out;
}

ordered_json cmd_partition(const ModelConfig& config) {
  ordered_json out;
  ordered_json globals = ordered_json::array();
  for (const auto& global : config.globals) {
    GlobalContext ctx =
        make_global_context(*global, config.gauge, config.cocycle);
    if (!check_global_axioms(ctx).passed() ||
        !check_local_axioms(ctx.boundary).passed())
      continue;
    Section x = default_section(ctx.boundary);
    ThetaVector z = partition_global(ctx, x);
    ordered_json row;
    row["global"] = global->label;
    row["vector"] = theta_json(ctx.boundary, z);
    globals.push_back(std::move(row));
  }
  out["globals"] = std::move(globals);

  ordered_json tubes = ordered_json::array();
  for (const SpaceEntry& space : model_spaces(config)) {
    if (!tube_capable(space.boundary)) continue;
    if (!check_local_axioms(space.boundary).passed()) continue;
    TubeContext tube = make_tube_context(space.boundary);
    if (!check_tube_axioms(tube).passed()) continue;
    Section x = default_section(space.boundary);
    ordered_json row;
    row["space"] = space.name;
    row["vector"] = theta_json(space.boundary, partition_tube(tube, x, false));
    row["reversed"] = theta_json(space.boundary, partition_tube(tube, x, true));
    tubes.push_back(std::move(row));
  }
  out["tubes"] = std::move(tubes);

  ordered_json closed = ordered_json::array();
  for (const auto& gluing : config.gluings) {
    GluingContext ctx =
        make_gluing_context(*gluing, config.gauge, config.cocycle);
    if (!ctx.closed_case()) continue;
    if (!check_gluing_axioms(ctx).passed()) continue;
    Section x = default_section(ctx.outer_ctx.boundary);
    ordered_json row;
    row["gluing"] = gluing->label;
    row["value"] = cyclotomic_json(partition_closed(ctx, x));
    closed.push_back(std::move(row));
  }
  out["closed"] = std::move(closed);
  return out;
}

ordered_json cmd_hdim(const ModelConfig& config) {
  ordered_json out = ordered_json::array();
  for (const SpaceEntry& space : model_spaces(config)) {
    if (!check_local_axioms(space.boundary).passed()) continue;
    Section x = default_section(space.boundary);
    ThetaSpace ts = theta_space(space.boundary, x);
    ordered_json row;
    row["space"] = space.name;
    row["tuples"] = space.boundary.tuple_count();
    row["dim"] = ts.dimension;
    ordered_json basis = ordered_json::array();
    for (const ThetaVector& v : ts.basis)
      basis.push_back(theta_json(space.boundary, v));
    row["basis"] = std::move(basis);
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json cmd_glue(const ModelConfig& config, bool& ok) {
  ordered_json out = ordered_json::array();
  for (const auto& gluing : config.gluings) {
    GluingContext ctx =
        make_gluing_context(*gluing, config.gauge, config.cocycle);
    if (!check_gluing_axioms(ctx).passed()) {
      ok = false;
      ordered_json row;
      row["gluing"] = gluing->label;
      row["error"] = "gluing axioms failed";
      out.push_back(std::move(row));
      continue;
    }
    Section x = default_section(ctx.outer_ctx.boundary);
    ThetaVector z_outer = partition_global(ctx.outer_ctx, x);
    Section suffix = slice_section_suffix(x, ctx.s1_count);
    ThetaVector z_tube_rev = partition_tube(ctx.tube, suffix, true);
    ThetaVector paired =
        glue_pair(ctx.outer_ctx.boundary, ctx.s1_count, z_outer, z_tube_rev);
    ordered_json row;
    row["gluing"] = gluing->label;
    if (ctx.closed_case()) {
      Cyclotomic closed = partition_closed(ctx, x);
      row["lhs"] = cyclotomic_json(paired.entries[0]);
      row["rhs"] = cyclotomic_json(closed);
      row["equal"] = paired.entries[0] == closed;
      ok = ok && paired.entries[0] == closed;
    } else {
      Section prefix = slice_section_prefix(x, ctx.s1_count);
      ThetaVector z_inner = partition_global(ctx.inner_ctx, prefix);
      row["lhs"] = theta_json(ctx.inner_ctx.boundary, paired);
      row["rhs"] = theta_json(ctx.inner_ctx.boundary, z_inner);
      bool equal = paired.size() == z_inner.size();
      for (long long t = 0; equal && t < paired.size(); ++t)
        equal = paired.entries[t] == z_inner.entries[t];
      row["equal"] = equal;
      ok = ok && equal;
    }
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json cmd_transport(const ModelConfig& config, bool& ok) {
  ordered_json out = ordered_json::array();
  for (const TransportSpec& spec : config.transports) {
    ordered_json row;
    row["transport"] = spec.name;
    row["kind"] = spec.kind;
    if (spec.kind == "section") {
      ordered_json applied = ordered_json::array();
      for (const auto& global : config.globals) {
        GlobalContext ctx =
            make_global_context(*global, config.gauge, config.cocycle);
        if (!check_global_axioms(ctx).passed() ||
            !check_local_axioms(ctx.boundary).passed())
          continue;
        Section x = default_section(ctx.boundary);
        Section to = section_from_override(config, ctx.boundary, spec.to_section);
        ThetaVector z = partition_global(ctx, x);
        ThetaVector moved = transport_section(ctx.boundary, x, to, z);
        ThetaVector fresh = partition_global(ctx, to);
        bool match = true;
        for (long long t = 0; t < moved.size(); ++t)
          if (moved.entries[t] != fresh.entries[t]) match = false;
        ok = ok && match;
        ordered_json one;
        one["global"] = global->label;
        one["vector"] = theta_json(ctx.boundary, moved);
        one["matches_fresh"] = match;
        applied.push_back(std::move(one));
      }
      row["applied"] = std::move(applied);
    } else if (spec.kind == "cocycle") {
      Cochain b = Cochain::zero(config.gauge, 2, config.modulus);
      for (const auto& [g, h, v] : spec.witness) {
        std::array<int, 2> t{static_cast<int>(g), static_cast<int>(h)};
        b.values[b.index_of(t)] =
            static_cast<int>(((v % config.modulus) + config.modulus) %
                             config.modulus);
      }
      ordered_json applied = ordered_json::array();
      for (const auto& global : config.globals) {
        GlobalContext ctx =
            make_global_context(*global, config.gauge, config.cocycle);
        if (!check_global_axioms(ctx).passed() ||
            !check_local_axioms(ctx.boundary).passed())
          continue;
        Section x = default_section(ctx.boundary);
        CocycleShift shifted = shift_cocycle(ctx.boundary, x, b);
        GlobalContext fresh_ctx = make_global_context(
            *global, config.gauge, shifted.boundary.cocycle);
        Section fresh_x = default_section(fresh_ctx.boundary);
        ThetaVector z = partition_global(ctx, x);
        ThetaVector carried = z;
        carried.section_label = shifted.section.label;
        carried = transport_section(fresh_ctx.boundary, shifted.section,
                                    fresh_x, carried);
        ThetaVector fresh = partition_global(fresh_ctx, fresh_x);
        bool match = true;
        for (long long t = 0; t < carried.size(); ++t)
          if (carried.entries[t] != fresh.entries[t]) match = false;
        ok = ok && match;
        ordered_json one;
        one["global"] = global->label;
        one["vector"] = theta_json(fresh_ctx.boundary, carried);
        one["matches_fresh"] = match;
        applied.push_back(std::move(one));
      }
      row["applied"] = std::move(applied);
    } else if (spec.kind == "isomorphism") {
      const GlobalDatum* from = config.global_by_label(spec.global_label);
      const GlobalDatum* to = config.global_by_label(spec.target_label);
      require(from != nullptr && to != nullptr, ErrorCode::DanglingReference,
              "transport '" + spec.name + "' references unknown globals");
      GlobalContext from_ctx =
          make_global_context(*from, config.gauge, config.cocycle);
      GlobalContext to_ctx =
          make_global_context(*to, config.gauge, config.cocycle);
      IsoWitness witness;
      witness.global_iso =
          GroupHom{from->group, to->group, spec.group_iso};
      require(is_valid_hom(*from->group, *to->group, spec.group_iso),
              ErrorCode::InvalidWitness,
              "transport '" + spec.name + "': group_iso is not a homomorphism");
      for (std::size_t p = 0; p < spec.prime_isos.size(); ++p) {
        require(p < from->attachments.size(), ErrorCode::InvalidWitness,
                "transport '" + spec.name + "': too many prime isomorphisms");
        witness.prime_isos.push_back(
            GroupHom{from->attachments[p].local->group,
                     to->attachments[p].local->group, spec.prime_isos[p]});
      }
      Section x_from = default_section(from_ctx.boundary);
      Section x_to = default_section(to_ctx.boundary);
      ThetaVector z = partition_global(from_ctx, x_from);
      ThetaVector moved = transport_isomorphism(from_ctx, to_ctx, witness, z);
      // The relabeled vector sits over the transported section; compare with
      // the fresh computation after the δ-twist to the default section.
      Section transported;
      transported.label = moved.section_label;
      transported.assignment.resize(to_ctx.boundary.prime_count());
      for (int p = 0; p < to_ctx.boundary.prime_count(); ++p) {
        const BoundaryComponent& comp = to_ctx.boundary.components[p];
        for (int i = 0; i < comp.reps.size(); ++i) {
          GroupHom pulled = compose(comp.reps.homs[i], witness.prime_isos[p]);
          int idx = from_ctx.boundary.components[p].reps.index_of(pulled.map);
          require(idx >= 0, ErrorCode::Internal, "missing relabeled rep");
          const FiberElement& fe = x_from.at(p, idx);
          // Rebase the cochain through the prime isomorphism.
          Cochain moved_cochain =
              Cochain::zero(comp.datum->group, 2, config.modulus);
          const FiniteGroup& target_group = *comp.datum->group;
          const GroupHom& phi_p = witness.prime_isos[p];
          std::vector<int> inverse_map(target_group.order);
          for (int e = 0; e < target_group.order; ++e)
            inverse_map[phi_p.map[e]] = e;
          GroupHom phi_inv{comp.datum->group,
                           from_ctx.boundary.components[p].datum->group,
                           inverse_map};
          moved_cochain = pullback(fe.cochain, phi_inv);
          transported.assignment[p].push_back(
              FiberElement{comp.datum, comp.reps.homs[i], moved_cochain});
        }
      }
      ThetaVector rebased =
          transport_section(to_ctx.boundary, transported, x_to, moved);
      ThetaVector fresh = partition_global(to_ctx, x_to);
      bool match = true;
      for (long long t = 0; t < rebased.size(); ++t)
        if (rebased.entries[t] != fresh.entries[t]) match = false;
      ok = ok && match;
      row["vector"] = theta_json(to_ctx.boundary, moved);
      row["matches_fresh"] = match;
    }
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json cmd_suite(const ModelConfig& config, bool& ok) {
  ordered_json out = ordered_json::array();
  for (const CheckResult& result : run_model_suite(config)) {
    ordered_json row;
    row["check"] = result.name;
    row["passed"] = result.passed;
    if (!result.detail.empty()) row["detail"] = result.detail;
    ok = ok && result.passed;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

int exit_code_for(const Error& error) {
  switch (error.code()) {
    case ErrorCode::SchemaError:
    case ErrorCode::DanglingReference:
    case ErrorCode::NotACocycle:
    case ErrorCode::NotAGroup:
    case ErrorCode::GeneratorsDontGenerate:
      return 2;
    case ErrorCode::Internal:
      return 3;
    default:
      return 1;
  }
}

RunResult run_command(const std::string& command, const ModelConfig& config) {
  RunResult result;
  ordered_json body;
  bool ok = true;
  if (command == "validate") {
    body = cmd_validate(config, ok);
    result.exit_code = ok ? 0 : 1;
  } else if (command == "homs") {
    body = cmd_homs(config);
  } else if (command == "lambda") {
    body = cmd_lambda(config);
  } else if (command == "cs") {
    body = cmd_cs(config);
  } else if (command == "partition") {
    body = cmd_partition(config);
  } else if (command == "hdim") {
    body = cmd_hdim(config);
  } else if (command == "glue") {
    body = cmd_glue(config, ok);
    result.exit_code = ok ? 0 : 3;
  } else if (command == "transport") {
    body = cmd_transport(config, ok);
    result.exit_code = ok ? 0 : 3;
  } else if (command == "suite") {
    body = cmd_suite(config, ok);
    result.exit_code = ok ? 0 : 3;
  } else {
    fail(ErrorCode::SchemaError, "unknown command '" + command + "'");
  }
  result.structured["command"] = command;
  result.structured["modulus"] = config.modulus;
  result.structured["gauge_group"] = config.gauge->label;
  result.structured["report"] = std::move(body);
  std::ostringstream os;
  render_text(result.structured, os);
  result.text = os.str();
  return result;
}

}  // namespace dwarith
