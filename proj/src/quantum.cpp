#include "dwarith/quantum.hpp"

#include <algorithm>
#include <map>

namespace dwarith {

namespace {

std::vector<std::string> prime_names(const Boundary& boundary) {
  std::vector<std::string> names;
  for (const auto& comp : boundary.components) names.push_back(comp.datum->name);
  return names;
}

std::vector<std::vector<int>> tuple_action_table(const Boundary& boundary) {
  const long long count = boundary.tuple_count();
  std::vector<std::vector<int>> action(count,
                                       std::vector<int>(boundary.gauge->order));
  for (long long t = 0; t < count; ++t)
    for (int g = 0; g < boundary.gauge->order; ++g)
      action[t][g] = static_cast<int>(boundary.act_tuple(t, g));
  return action;
}

}  // namespace

ThetaVector zero_vector(const Boundary& boundary, const Section& x) {
  ThetaVector v;
  v.modulus = boundary.cocycle.modulus;
  v.base_names = prime_names(boundary);
  v.section_label = x.label;
  v.entries.assign(boundary.tuple_count(),
                   Cyclotomic::zero(boundary.cocycle.modulus));
  return v;
}

bool is_equivariant(const Boundary& boundary, const Section& x,
                    const ThetaVector& theta, int sign) {
  require(theta.size() == boundary.tuple_count(), ErrorCode::BaseMismatch,
          "vector size does not match the representation space");
  const int n = boundary.cocycle.modulus;
  auto lam = lambda_table(boundary, x);
  for (long long t = 0; t < boundary.tuple_count(); ++t) {
    for (int g = 0; g < boundary.gauge->order; ++g) {
      long long moved = boundary.act_tuple(t, g);
      Cyclotomic expect =
          theta.entries[t] *
          Cyclotomic::root_power(n, sign * lam[g][t]);
      if (theta.entries[moved] != expect) return false;
    }
  }
  return true;
}

ThetaSpace theta_space(const Boundary& boundary, const Section& x, int sign) {
  const int n = boundary.cocycle.modulus;
  ThetaSpace space;
  auto action = tuple_action_table(boundary);
  space.orbits = orbits_stabilizers(static_cast<int>(boundary.tuple_count()),
                                    *boundary.gauge, action);
  auto lam = lambda_table(boundary, x);
  for (std::size_t oi = 0; oi < space.orbits.orbits.size(); ++oi) {
    const Orbit& orbit = space.orbits.orbits[oi];
    bool admissible = std::all_of(
        orbit.stabilizer.begin(), orbit.stabilizer.end(),
        [&](int g) { return lam[g][orbit.representative] == 0; });
    if (!admissible) continue;
    space.admissible.push_back(static_cast<int>(oi));
    ThetaVector v = zero_vector(boundary, x);
    for (int element : orbit.elements) {
      for (int g = 0; g < boundary.gauge->order; ++g) {
        if (action[orbit.representative][g] == element) {
          v.entries[element] =
              Cyclotomic::root_power(n, sign * lam[g][orbit.representative]);
          break;
        }
      }
    }
    space.basis.push_back(std::move(v));
  }
  space.dimension = static_cast<int>(space.basis.size());
  return space;
}

ThetaVector partition_global(const GlobalContext& ctx, const Section& x) {
  ThetaVector v = zero_vector(ctx.boundary, x);
  const int n = ctx.modulus();
  for (int i = 0; i < ctx.reps.size(); ++i) {
    int cs = cs_global(ctx, x, i);
    long long t = ctx.restriction[i];
    v.entries[t] = v.entries[t] + Cyclotomic::root_power(n, cs);
  }
  for (auto& e : v.entries) e = e.scaled(1, ctx.boundary.gauge->order);
  return v;
}

ThetaVector partition_tube(const TubeContext& tube, const Section& x,
                           bool reversed) {
  const Boundary& boundary = *tube.boundary;
  ThetaVector v = zero_vector(boundary, x);
  const int n = boundary.cocycle.modulus;
  for (long long t = 0; t < tube.tilde_count(); ++t) {
    int cs = cs_tube(tube, x, t);
    long long target = tube.restrict_tuple(t);
    v.entries[target] =
        v.entries[target] + Cyclotomic::root_power(n, reversed ? -cs : cs);
  }
  return v;
}

Cyclotomic partition_closed(const GluingContext& ctx,
                            const Section& outer_section) {
  const int n = ctx.outer_ctx.modulus();
  Cyclotomic total = Cyclotomic::zero(n);
  for (int i = 0; i < ctx.inner_ctx.reps.size(); ++i)
    total = total + Cyclotomic::root_power(n, cs_closed(ctx, outer_section, i));
  return total.scaled(1, ctx.outer_ctx.boundary.gauge->order);
}

ThetaVector glue_pair(const Boundary& full_boundary, int s1_count,
                      const ThetaVector& theta_full,
                      const ThetaVector& theta_rev) {
  require(theta_full.modulus == theta_rev.modulus, ErrorCode::ModulusMismatch,
          "pairing vectors over different moduli");
  require(theta_full.size() == full_boundary.tuple_count(),
          ErrorCode::BaseMismatch, "vector does not match the glued boundary");
  require(static_cast<int>(theta_full.base_names.size()) >= s1_count,
          ErrorCode::BaseMismatch, "split longer than the base");
  std::vector<std::string> suffix_names(
      theta_full.base_names.begin() + s1_count, theta_full.base_names.end());
  require(theta_rev.base_names == suffix_names, ErrorCode::BaseMismatch,
          "glued factor is not indexed by the boundary suffix");
  require(theta_rev.section_label == theta_full.section_label,
          ErrorCode::BaseMismatch,
          "pairing vectors expressed against different sections");

  long long suffix_size = 1;
  for (int p = s1_count; p < full_boundary.prime_count(); ++p)
    suffix_size *= full_boundary.components[p].reps.size();
  require(theta_rev.size() == suffix_size, ErrorCode::BaseMismatch,
          "suffix vector has the wrong length");

  ThetaVector out;
  out.modulus = theta_full.modulus;
  out.base_names.assign(theta_full.base_names.begin(),
                        theta_full.base_names.begin() + s1_count);
  out.section_label = theta_full.section_label;
  const long long prefix_size = theta_full.size() / std::max<long long>(suffix_size, 1);
  out.entries.assign(prefix_size, Cyclotomic::zero(theta_full.modulus));
  for (long long pre = 0; pre < prefix_size; ++pre)
    for (long long suf = 0; suf < suffix_size; ++suf)
      out.entries[pre] =
          out.entries[pre] +
          theta_full.entries[full_boundary.join_tuple(pre, suf, s1_count)] *
              theta_rev.entries[suf];
  return out;
}

ThetaVector transport_section(const Boundary& boundary, const Section& from,
                              const Section& to, const ThetaVector& theta) {
  require(theta.size() == boundary.tuple_count(), ErrorCode::BaseMismatch,
          "vector does not match the boundary");
  require(theta.section_label == from.label, ErrorCode::BaseMismatch,
          "vector is not expressed against the source section");
  const int n = boundary.cocycle.modulus;
  ThetaVector out = theta;
  out.section_label = to.label;
  for (long long t = 0; t < boundary.tuple_count(); ++t)
    out.entries[t] =
        theta.entries[t] *
        Cyclotomic::root_power(n, delta_sections(boundary, from, to, t));
  return out;
}

CocycleShift shift_cocycle(const Boundary& boundary, const Section& x,
                           const Cochain& b) {
  require(b.group.get() == boundary.gauge.get() && b.degree == 2 &&
              b.modulus == boundary.cocycle.modulus && b.trivial_action(),
          ErrorCode::InvalidWitness,
          "cocycle-change witness must be a 2-cochain on the gauge group");
  std::vector<const LocalDatum*> locals;
  for (const auto& comp : boundary.components) locals.push_back(comp.datum);
  CocycleShift out{
      make_boundary(boundary.gauge, boundary.cocycle + coboundary(b), locals),
      Section{}};
  out.section.label = x.label;
  out.section.assignment.resize(boundary.prime_count());
  for (int p = 0; p < boundary.prime_count(); ++p) {
    const BoundaryComponent& comp = boundary.components[p];
    for (int i = 0; i < comp.reps.size(); ++i) {
      const FiberElement& fe = x.at(p, i);
      out.section.assignment[p].push_back(FiberElement{
          fe.local, fe.rep, fe.cochain + pullback(b, comp.reps.homs[i])});
    }
  }
  return out;
}

ThetaVector transport_isomorphism(const GlobalContext& from,
                                  const GlobalContext& to,
                                  const IsoWitness& witness,
                                  const ThetaVector& theta) {
  const GroupHom& phi = witness.global_iso;
  require(phi.source.get() == from.datum->group.get() &&
              phi.target.get() == to.datum->group.get() && phi.is_bijective() &&
              is_valid_hom(*phi.source, *phi.target, phi.map),
          ErrorCode::InvalidWitness, "global map is not an isomorphism");
  require(witness.prime_isos.size() == from.datum->attachments.size() &&
              from.datum->attachments.size() == to.datum->attachments.size(),
          ErrorCode::InvalidWitness, "prime isomorphism list misaligned");
  const int n = from.modulus();
  for (std::size_t p = 0; p < witness.prime_isos.size(); ++p) {
    const GroupHom& phi_p = witness.prime_isos[p];
    const Attachment& fa = from.datum->attachments[p];
    const Attachment& ta = to.datum->attachments[p];
    require(phi_p.source.get() == fa.local->group.get() &&
                phi_p.target.get() == ta.local->group.get() &&
                phi_p.is_bijective() &&
                is_valid_hom(*phi_p.source, *phi_p.target, phi_p.map),
            ErrorCode::InvalidWitness,
            "prime map " + std::to_string(p) + " is not an isomorphism");
    require(compose(ta.iota, phi_p).map == compose(phi, fa.iota).map,
            ErrorCode::InvalidWitness,
            "attachment square does not commute at prime " + std::to_string(p));
    // Invariant compatibility: inv'(α') must equal inv(α'∘φ_p), i.e. the
    // aggregated coefficient maps agree after relabeling through φ_p.
    std::map<std::pair<int, int>, long long> lhs, rhs;
    for (const auto& [g, h, coeff] : ta.local->inv.terms)
      lhs[{static_cast<int>(g), static_cast<int>(h)}] +=
          coeff * ta.local->orientation;
    for (const auto& [g, h, coeff] : fa.local->inv.terms)
      rhs[{phi_p.map[static_cast<int>(g)], phi_p.map[static_cast<int>(h)]}] +=
          coeff * fa.local->orientation;
    auto reduced = [&](std::map<std::pair<int, int>, long long>& m) {
      std::map<std::pair<int, int>, int> r;
      for (auto& [k, v] : m) {
        int val = static_cast<int>(((v % n) + n) % n);
        if (val != 0) r[k] = val;
      }
      return r;
    };
    require(reduced(lhs) == reduced(rhs), ErrorCode::InvalidWitness,
            "invariant functionals do not correspond at prime " +
                std::to_string(p));
  }
  require(theta.size() == from.boundary.tuple_count(), ErrorCode::BaseMismatch,
          "vector does not match the source model");

  ThetaVector out;
  out.modulus = theta.modulus;
  out.base_names = prime_names(to.boundary);
  out.section_label = theta.section_label + "~iso";
  out.entries.assign(to.boundary.tuple_count(), Cyclotomic::zero(n));
  for (long long t = 0; t < to.boundary.tuple_count(); ++t) {
    std::vector<int> parts = to.boundary.tuple_at(t);
    std::vector<int> source_parts(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
      GroupHom pulled = compose(to.boundary.components[p].reps.homs[parts[p]],
                                witness.prime_isos[p]);
      int idx = from.boundary.components[p].reps.index_of(pulled.map);
      require(idx >= 0, ErrorCode::Internal, "relabeled representation missing");
      source_parts[p] = idx;
    }
    out.entries[t] = theta.entries[from.boundary.tuple_index(source_parts)];
  }
  return out;
}

StructureReport tensor_and_dual(const Boundary& full_boundary,
                                const Section& x, int prefix_len) {
  StructureReport report;
  std::vector<const LocalDatum*> prefix_locals, suffix_locals;
  for (int p = 0; p < full_boundary.prime_count(); ++p)
    (p < prefix_len ? prefix_locals : suffix_locals)
        .push_back(full_boundary.components[p].datum);
  Boundary prefix = make_boundary(full_boundary.gauge, full_boundary.cocycle,
                                  prefix_locals);
  Boundary suffix = make_boundary(full_boundary.gauge, full_boundary.cocycle,
                                  suffix_locals);
  Section x1 = slice_section_prefix(x, prefix_len);
  Section x2 = slice_section_suffix(x, prefix_len);

  ThetaSpace space_pre = theta_space(prefix, x1);
  ThetaSpace space_suf = theta_space(suffix, x2);
  ThetaSpace space_full = theta_space(full_boundary, x);
  ThetaSpace space_rev = theta_space(full_boundary, x, -1);
  report.dim_prefix = space_pre.dimension;
  report.dim_suffix = space_suf.dimension;
  report.dim_full = space_full.dimension;
  report.dim_reversed = space_rev.dimension;
  report.multiplicative =
      report.dim_full == report.dim_prefix * report.dim_suffix;
  report.dual_dimension = report.dim_reversed == report.dim_full;

  // Products of basis vectors: each must be equivariant; distinct pairs have
  // disjoint supports, so counting them against dim_full decides spanning.
  bool products_ok = true;
  std::vector<std::vector<char>> supports;
  for (const ThetaVector& t1 : space_pre.basis) {
    for (const ThetaVector& t2 : space_suf.basis) {
      ThetaVector prod = zero_vector(full_boundary, x);
      std::vector<char> supp(full_boundary.tuple_count(), 0);
      for (long long t = 0; t < full_boundary.tuple_count(); ++t) {
        auto [pre, suf] = full_boundary.split_tuple(t, prefix_len);
        prod.entries[t] = t1.entries[pre] * t2.entries[suf];
        supp[t] = prod.entries[t].is_zero() ? 0 : 1;
      }
      if (!is_equivariant(full_boundary, x, prod)) products_ok = false;
      for (const auto& other : supports)
        for (long long t = 0; t < full_boundary.tuple_count(); ++t)
          if (supp[t] && other[t]) products_ok = false;
      supports.push_back(std::move(supp));
    }
  }
  report.products_span =
      products_ok &&
      static_cast<int>(supports.size()) == report.dim_full &&
      report.multiplicative;

  // Duality pairing on the computed bases: the matrix is diagonal by
  // disjointness of orbit supports; nondegeneracy = nonzero diagonal.
  bool nondegenerate = report.dual_dimension;
  for (int i = 0; i < space_rev.dimension && nondegenerate; ++i) {
    for (int j = 0; j < space_full.dimension && nondegenerate; ++j) {
      Cyclotomic pairing = Cyclotomic::zero(full_boundary.cocycle.modulus);
      for (long long t = 0; t < full_boundary.tuple_count(); ++t)
        pairing = pairing +
                  space_rev.basis[i].entries[t] * space_full.basis[j].entries[t];
      if (i == j && pairing.is_zero()) nondegenerate = false;
      if (i != j && !pairing.is_zero()) nondegenerate = false;
    }
  }
  report.pairing_nondegenerate = nondegenerate;
  return report;
}

}  // namespace dwarith
