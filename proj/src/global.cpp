#include "dwarith/global.hpp"

#include <algorithm>

namespace dwarith {

namespace {

int mod_reduce(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

Cochain cochain_from_values(GroupPtr g, int degree, int modulus,
                            const std::vector<long long>& vec) {
  Cochain c = Cochain::zero(std::move(g), degree, modulus);
  for (std::size_t i = 0; i < vec.size(); ++i)
    c.values[i] = mod_reduce(vec[i], modulus);
  return c;
}

}  // namespace

std::vector<GroupHom> restrict_rep(const GlobalDatum& datum,
                                   const GroupHom& rho) {
  require(rho.source.get() == datum.group.get(), ErrorCode::Internal,
          "restriction of a representation of a different group");
  std::vector<GroupHom> out;
  out.reserve(datum.attachments.size());
  for (const Attachment& att : datum.attachments)
    out.push_back(compose(rho, att.iota));
  return out;
}

GlobalContext make_global_context(const GlobalDatum& datum, GroupPtr gauge,
                                  const Cochain& cocycle) {
  GlobalContext ctx;
  ctx.datum = &datum;
  std::vector<const LocalDatum*> locals;
  for (const Attachment& att : datum.attachments) {
    require(att.iota.source.get() == att.local->group.get() &&
                att.iota.target.get() == datum.group.get(),
            ErrorCode::SchemaError,
            "attachment map endpoints wrong in global '" + datum.label + "'");
    locals.push_back(att.local);
  }
  ctx.boundary = make_boundary(gauge, cocycle, locals);
  ctx.reps = enumerate_hom_set(datum.group, gauge);
  for (int i = 0; i < ctx.reps.size(); ++i) {
    std::vector<GroupHom> res = restrict_rep(datum, ctx.reps.homs[i]);
    std::vector<int> parts(res.size());
    for (std::size_t p = 0; p < res.size(); ++p) {
      int idx = ctx.boundary.components[p].reps.index_of(res[p].map);
      require(idx >= 0, ErrorCode::Internal, "restriction missing from F_p");
      parts[p] = idx;
    }
    ctx.restriction.push_back(ctx.boundary.tuple_index(parts));
  }
  return ctx;
}

AxiomReport check_global_axioms(const GlobalContext& ctx) {
  AxiomReport report;
  const GlobalDatum& gd = *ctx.datum;
  const int n = ctx.modulus();
  const std::string tag = "global[" + gd.label + "].";

  // Reciprocity over a generating set of Z²(Q_S).
  IntMat d3 = coboundary_matrix(*gd.group, 3);
  bool reciprocity = true;
  std::string detail;
  int gen_index = 0;
  for (const auto& gen : kernel_mod(d3, n)) {
    Cochain z = cochain_from_values(gd.group, 2, n, gen);
    long long total = 0;
    for (std::size_t p = 0; p < gd.attachments.size(); ++p)
      total += gd.attachments[p].local->invariant(
          pullback(z, gd.attachments[p].iota));
    if (mod_reduce(total, n) != 0) {
      reciprocity = false;
      detail = "sum of invariants = " + std::to_string(mod_reduce(total, n)) +
               " on cocycle generator " + std::to_string(gen_index);
      break;
    }
    ++gen_index;
  }
  report.add(tag + "reciprocity", reciprocity, detail);

  bool solvable = true;
  std::string failing;
  for (int i = 0; i < ctx.reps.size(); ++i) {
    if (!solve_coboundary(pullback(ctx.boundary.cocycle, ctx.reps.homs[i]))) {
      solvable = false;
      failing += (failing.empty() ? "rep " : ", rep ") + std::to_string(i);
    }
  }
  report.add(tag + "pullbacks_solvable", solvable, failing);
  return report;
}

namespace {

int cs_global_with(const GlobalContext& ctx, const Section& x, int rep_index,
                   PivotStrategy strategy) {
  const GroupHom& rho = ctx.reps.homs[rep_index];
  auto beta = solve_coboundary(pullback(ctx.boundary.cocycle, rho), strategy);
  require(beta.has_value(), ErrorCode::ModelViolation,
          "c∘ρ is not a coboundary on '" + ctx.datum->label + "' for rep " +
              std::to_string(rep_index));
  std::vector<int> parts = ctx.boundary.tuple_at(ctx.restriction[rep_index]);
  long long total = 0;
  for (std::size_t p = 0; p < ctx.datum->attachments.size(); ++p) {
    const Attachment& att = ctx.datum->attachments[p];
    const BoundaryComponent& comp = ctx.boundary.components[p];
    FiberElement res_beta{att.local, comp.reps.homs[parts[p]],
                          pullback(*beta, att.iota)};
    total += fiber_diff(res_beta, x.at(static_cast<int>(p), parts[p]));
  }
  return mod_reduce(total, ctx.modulus());
}

}  // namespace

int cs_global(const GlobalContext& ctx, const Section& x, int rep_index) {
  int primary = cs_global_with(ctx, x, rep_index, PivotStrategy::primary);
  int second = cs_global_with(ctx, x, rep_index, PivotStrategy::alternate);
  require(primary == second, ErrorCode::ReciprocityViolation,
          "CS value depends on the coboundary solution for rep " +
              std::to_string(rep_index) + " of '" + ctx.datum->label +
              "' (" + std::to_string(primary) + " vs " +
              std::to_string(second) + ")");
  return primary;
}

std::vector<int> cs_global_table(const GlobalContext& ctx, const Section& x) {
  std::vector<int> out(ctx.reps.size());
  for (int i = 0; i < ctx.reps.size(); ++i) out[i] = cs_global(ctx, x, i);
  return out;
}

long long TubeContext::tilde_count() const {
  long long total = 1;
  for (const auto& hs : tilde_reps) total *= hs.size();
  return total;
}

std::vector<int> TubeContext::tilde_at(long long index) const {
  std::vector<int> out(tilde_reps.size());
  for (int i = prime_count() - 1; i >= 0; --i) {
    out[i] = static_cast<int>(index % tilde_reps[i].size());
    index /= tilde_reps[i].size();
  }
  return out;
}

long long TubeContext::tilde_index(std::span<const int> parts) const {
  long long idx = 0;
  for (int i = 0; i < prime_count(); ++i)
    idx = idx * tilde_reps[i].size() + parts[i];
  return idx;
}

long long TubeContext::act_tilde(long long index, int g) const {
  std::vector<int> t = tilde_at(index);
  for (int i = 0; i < prime_count(); ++i) t[i] = tilde_reps[i].act(t[i], g);
  return tilde_index(t);
}

long long TubeContext::restrict_tuple(long long tilde) const {
  std::vector<int> t = tilde_at(tilde);
  std::vector<int> parts(t.size());
  for (int i = 0; i < prime_count(); ++i) parts[i] = tilde_restriction[i][t[i]];
  return boundary->tuple_index(parts);
}

TubeContext make_tube_context(const Boundary& boundary) {
  TubeContext tube;
  tube.boundary = &boundary;
  for (int p = 0; p < boundary.prime_count(); ++p) {
    const LocalDatum& d = *boundary.components[p].datum;
    require(d.unramified.has_value(), ErrorCode::ModelViolation,
            "local datum '" + d.name + "' has no unramified quotient");
    HomSet hs = enumerate_hom_set(d.unramified->group, boundary.gauge);
    std::vector<int> res(hs.size());
    for (int i = 0; i < hs.size(); ++i) {
      GroupHom restricted = compose(hs.homs[i], d.unramified->projection);
      int idx = boundary.components[p].reps.index_of(restricted.map);
      require(idx >= 0, ErrorCode::Internal,
              "unramified restriction missing from F_p");
      res[i] = idx;
    }
    tube.tilde_reps.push_back(std::move(hs));
    tube.tilde_restriction.push_back(std::move(res));
  }
  return tube;
}

AxiomReport check_tube_axioms(const TubeContext& tube) {
  AxiomReport report;
  const Boundary& boundary = *tube.boundary;
  const int n = boundary.cocycle.modulus;
  for (int p = 0; p < tube.prime_count(); ++p) {
    const LocalDatum& d = *boundary.components[p].datum;
    const std::string tag = "tube[" + d.name + "].";

    bool solvable = true;
    std::string failing;
    for (int i = 0; i < tube.tilde_reps[p].size(); ++i) {
      if (!solve_coboundary(
              pullback(boundary.cocycle, tube.tilde_reps[p].homs[i]))) {
        solvable = false;
        failing += (failing.empty() ? "rep " : ", rep ") + std::to_string(i);
      }
    }
    report.add(tag + "unramified_pullbacks_solvable", solvable, failing);

    // Independence of the unramified coboundary choice: the invariant must
    // kill every pullback of an unramified 2-cocycle.
    IntMat d3 = coboundary_matrix(*d.unramified->group, 3);
    bool kills = true;
    std::string detail;
    int gen_index = 0;
    for (const auto& gen : kernel_mod(d3, n)) {
      Cochain z = cochain_from_values(d.unramified->group, 2, n, gen);
      int v = d.invariant(pullback(z, d.unramified->projection));
      if (v != 0) {
        kills = false;
        detail = "invariant = " + std::to_string(v) +
                 " on unramified cocycle generator " + std::to_string(gen_index);
        break;
      }
      ++gen_index;
    }
    report.add(tag + "invariant_kills_unramified_classes", kills, detail);
  }
  return report;
}

namespace {

int cs_tube_with(const TubeContext& tube, const Section& x, long long tilde,
                 PivotStrategy strategy) {
  const Boundary& boundary = *tube.boundary;
  std::vector<int> parts = tube.tilde_at(tilde);
  long long total = 0;
  for (int p = 0; p < tube.prime_count(); ++p) {
    const LocalDatum& d = *boundary.components[p].datum;
    const GroupHom& tilde_rho = tube.tilde_reps[p].homs[parts[p]];
    auto beta = solve_coboundary(pullback(boundary.cocycle, tilde_rho), strategy);
    require(beta.has_value(), ErrorCode::ModelViolation,
            "c∘ρ~ is not a coboundary on the unramified model of '" + d.name +
                "' for rep " + std::to_string(parts[p]));
    int fp_index = tube.tilde_restriction[p][parts[p]];
    FiberElement res_beta{&d, boundary.components[p].reps.homs[fp_index],
                          pullback(*beta, d.unramified->projection)};
    total += fiber_diff(res_beta, x.at(p, fp_index));
  }
  return mod_reduce(total, boundary.cocycle.modulus);
}

}  // namespace

int cs_tube(const TubeContext& tube, const Section& x, long long tilde_index) {
  int primary = cs_tube_with(tube, x, tilde_index, PivotStrategy::primary);
  int second = cs_tube_with(tube, x, tilde_index, PivotStrategy::alternate);
  require(primary == second, ErrorCode::BetaDependence,
          "tube CS value depends on the coboundary solution at tuple " +
              std::to_string(tilde_index) + " (" + std::to_string(primary) +
              " vs " + std::to_string(second) + ")");
  return primary;
}

std::vector<int> cs_tube_table(const TubeContext& tube, const Section& x) {
  std::vector<int> out(tube.tilde_count());
  for (long long t = 0; t < tube.tilde_count(); ++t)
    out[t] = cs_tube(tube, x, t);
  return out;
}

GluingContext make_gluing_context(const GluingDatum& datum, GroupPtr gauge,
                                  const Cochain& cocycle) {
  GluingContext ctx;
  ctx.datum = &datum;
  require(datum.u_maps.size() == datum.outer->attachments.size(),
          ErrorCode::SchemaError, "u_maps misaligned with outer attachments");
  // S1 primes form the prefix of the outer attachment list.
  int first_s2 = -1;
  for (std::size_t i = 0; i < datum.u_maps.size(); ++i) {
    if (datum.u_maps[i].has_value()) {
      if (first_s2 < 0) first_s2 = static_cast<int>(i);
    } else {
      require(first_s2 < 0, ErrorCode::SchemaError,
              "outer attachments must list the glued primes last");
    }
  }
  require(first_s2 >= 0, ErrorCode::SchemaError,
          "gluing needs at least one glued prime");
  ctx.s1_count = first_s2;
  require(static_cast<int>(datum.inner->attachments.size()) == ctx.s1_count,
          ErrorCode::SchemaError,
          "inner attachments must match the ungated outer prefix");
  require(datum.eta.source.get() == datum.outer->group.get() &&
              datum.eta.target.get() == datum.inner->group.get(),
          ErrorCode::SchemaError, "eta endpoints wrong");
  for (std::size_t i = ctx.s1_count; i < datum.u_maps.size(); ++i) {
    const Attachment& att = datum.outer->attachments[i];
    require(att.local->unramified.has_value(), ErrorCode::SchemaError,
            "glued prime '" + att.local->name + "' has no unramified quotient");
    require(datum.u_maps[i]->source.get() ==
                    att.local->unramified->group.get() &&
                datum.u_maps[i]->target.get() == datum.inner->group.get(),
            ErrorCode::SchemaError,
            "u map endpoints wrong at '" + att.local->name + "'");
  }

  ctx.outer_ctx = make_global_context(*datum.outer, gauge, cocycle);
  ctx.inner_ctx = make_global_context(*datum.inner, gauge, cocycle);
  std::vector<const LocalDatum*> s2_locals;
  for (std::size_t i = ctx.s1_count; i < datum.outer->attachments.size(); ++i)
    s2_locals.push_back(datum.outer->attachments[i].local);
  ctx.tube_boundary = make_boundary(gauge, cocycle, s2_locals);
  ctx.tube = make_tube_context(ctx.tube_boundary);
  return ctx;
}

AxiomReport check_gluing_axioms(const GluingContext& ctx) {
  AxiomReport report;
  const GluingDatum& gl = *ctx.datum;
  const std::string tag = "gluing[" + gl.label + "].";

  report.add(tag + "eta_surjective", gl.eta.is_surjective());

  bool prefix_ok = true;
  std::string prefix_detail;
  for (int p = 0; p < ctx.s1_count; ++p) {
    const Attachment& outer_att = gl.outer->attachments[p];
    const Attachment& inner_att = gl.inner->attachments[p];
    if (inner_att.local != outer_att.local ||
        compose(gl.eta, outer_att.iota).map != inner_att.iota.map) {
      prefix_ok = false;
      prefix_detail = "prime position " + std::to_string(p);
      break;
    }
  }
  report.add(tag + "inner_attachments_match", prefix_ok, prefix_detail);

  bool squares_ok = true;
  std::string square_detail;
  for (std::size_t p = ctx.s1_count; p < gl.outer->attachments.size(); ++p) {
    const Attachment& att = gl.outer->attachments[p];
    const GroupHom& u = *gl.u_maps[p];
    const GroupHom& v = att.local->unramified->projection;
    if (compose(u, v).map != compose(gl.eta, att.iota).map) {
      squares_ok = false;
      square_detail = "prime '" + att.local->name + "'";
      break;
    }
  }
  report.add(tag + "commuting_squares", squares_ok, square_detail);

  // Gluing exactness: ρ factors through eta iff every glued restriction
  // factors through the unramified projection.
  std::vector<int> eta_kernel;
  for (int x = 0; x < gl.outer->group->order; ++x)
    if (gl.eta.map[x] == FiniteGroup::identity) eta_kernel.push_back(x);
  std::vector<std::vector<int>> v_kernel_images;  // ι_p(ker v_p) per S2 prime
  for (std::size_t p = ctx.s1_count; p < gl.outer->attachments.size(); ++p) {
    const Attachment& att = gl.outer->attachments[p];
    const GroupHom& v = att.local->unramified->projection;
    std::vector<int> img;
    for (int x = 0; x < att.local->group->order; ++x)
      if (v.map[x] == FiniteGroup::identity) img.push_back(att.iota.map[x]);
    v_kernel_images.push_back(std::move(img));
  }
  bool exact = true;
  std::string exact_detail;
  for (int i = 0; i < ctx.outer_ctx.reps.size() && exact; ++i) {
    const GroupHom& rho = ctx.outer_ctx.reps.homs[i];
    bool factors_eta = std::all_of(
        eta_kernel.begin(), eta_kernel.end(),
        [&](int k) { return rho.map[k] == FiniteGroup::identity; });
    bool factors_v = true;
    for (const auto& img : v_kernel_images)
      for (int y : img)
        if (rho.map[y] != FiniteGroup::identity) factors_v = false;
    if (factors_eta != factors_v) {
      exact = false;
      exact_detail = "rep " + std::to_string(i);
    }
  }
  report.add(tag + "gluing_exactness", exact, exact_detail);
  return report;
}

Section slice_section_prefix(const Section& x, int s1_count) {
  Section out;
  out.label = x.label;
  out.assignment.assign(x.assignment.begin(), x.assignment.begin() + s1_count);
  return out;
}

Section slice_section_suffix(const Section& x, int s1_count) {
  Section out;
  out.label = x.label;
  out.assignment.assign(x.assignment.begin() + s1_count, x.assignment.end());
  return out;
}

long long outer_rep_of(const GluingContext& ctx, int inner_rep_index) {
  GroupHom composed =
      compose(ctx.inner_ctx.reps.homs[inner_rep_index], ctx.datum->eta);
  int idx = ctx.outer_ctx.reps.index_of(composed.map);
  require(idx >= 0, ErrorCode::Internal, "ρ∘eta missing from the outer reps");
  return idx;
}

long long tilde_tuple_of(const GluingContext& ctx, int inner_rep_index) {
  const GroupHom& rho = ctx.inner_ctx.reps.homs[inner_rep_index];
  std::vector<int> parts(ctx.tube.prime_count());
  for (int p = 0; p < ctx.tube.prime_count(); ++p) {
    GroupHom composed = compose(rho, *ctx.datum->u_maps[ctx.s1_count + p]);
    int idx = ctx.tube.tilde_reps[p].index_of(composed.map);
    require(idx >= 0, ErrorCode::Internal, "ρ∘u_p missing from the tube reps");
    parts[p] = idx;
  }
  return ctx.tube.tilde_index(parts);
}

std::vector<DecompositionRow> check_decomposition(const GluingContext& ctx,
                                                  const Section& outer_section) {
  require(ctx.s1_count > 0, ErrorCode::ModelViolation,
          "decomposition check needs a non-empty retained prime set");
  Section x1 = slice_section_prefix(outer_section, ctx.s1_count);
  Section x2 = slice_section_suffix(outer_section, ctx.s1_count);
  const int n = ctx.outer_ctx.modulus();
  std::vector<DecompositionRow> rows;
  for (int i = 0; i < ctx.inner_ctx.reps.size(); ++i) {
    DecompositionRow row;
    row.inner_rep = i;
    int cs_inner = cs_global(ctx.inner_ctx, x1, i);
    int cs_v = cs_tube(ctx.tube, x2, tilde_tuple_of(ctx, i));
    row.lhs = mod_reduce(static_cast<long long>(cs_inner) + cs_v, n);
    row.rhs = cs_global(ctx.outer_ctx, outer_section,
                        static_cast<int>(outer_rep_of(ctx, i)));
    row.equal = row.lhs == row.rhs;
    rows.push_back(row);
  }
  return rows;
}

int cs_closed(const GluingContext& ctx, const Section& outer_section,
              int inner_rep_index) {
  require(ctx.closed_case(), ErrorCode::ModelViolation,
          "closed invariant needs an empty retained prime set");
  const int n = ctx.outer_ctx.modulus();
  int cs_outer = cs_global(ctx.outer_ctx, outer_section,
                           static_cast<int>(outer_rep_of(ctx, inner_rep_index)));
  int cs_v = cs_tube(ctx.tube, outer_section,
                     tilde_tuple_of(ctx, inner_rep_index));
  return mod_reduce(static_cast<long long>(cs_outer) - cs_v, n);
}

std::vector<int> cs_closed_table(const GluingContext& ctx,
                                 const Section& outer_section) {
  std::vector<int> out(ctx.inner_ctx.reps.size());
  for (int i = 0; i < ctx.inner_ctx.reps.size(); ++i)
    out[i] = cs_closed(ctx, outer_section, i);
  return out;
}

}  // namespace dwarith
