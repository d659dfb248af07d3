#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwarith/local.hpp"

namespace dwarith {

struct Attachment {
  const LocalDatum* local = nullptr;
  GroupHom iota;  // Q_p -> Q_S
};

/// A finite model of the Galois group unramified outside S, with the local
/// attachment maps.
struct GlobalDatum {
  std::string label;
  GroupPtr group;
  std::vector<Attachment> attachments;
};

/// A global datum with its enumerated representation space and the boundary
/// model over its attachment primes.
struct GlobalContext {
  const GlobalDatum* datum = nullptr;
  Boundary boundary;
  HomSet reps;                          // Hom(Q_S, gauge)
  std::vector<long long> restriction;   // rep index -> boundary tuple index

  int modulus() const { return boundary.cocycle.modulus; }
};

GlobalContext make_global_context(const GlobalDatum& datum, GroupPtr gauge,
                                  const Cochain& cocycle);

/// The componentwise restriction (ρ∘ι_p)_p of one representation.
std::vector<GroupHom> restrict_rep(const GlobalDatum& datum,
                                   const GroupHom& rho);

/// Reciprocity over a generating set of the global 2-cocycles, plus
/// solvability of c∘ρ for every ρ.
AxiomReport check_global_axioms(const GlobalContext& ctx);

/// CS(ρ) = Σ_p inv_p(Res_p β_ρ − x_p(res_p ρ)) with β_ρ the canonical
/// coboundary solution; recomputed against a second, differently pivoted
/// solution and cross-checked. Throws ModelViolation when c∘ρ is not a
/// coboundary and ReciprocityViolation when the two solutions disagree.
int cs_global(const GlobalContext& ctx, const Section& x, int rep_index);
std::vector<int> cs_global_table(const GlobalContext& ctx, const Section& x);

/// The tube model over a boundary whose components all carry unramified
/// quotients: representation spaces of the unramified groups with the index
/// machinery for F_{V_S}.
struct TubeContext {
  const Boundary* boundary = nullptr;
  std::vector<HomSet> tilde_reps;                       // Hom(Q~_p, gauge)
  std::vector<std::vector<int>> tilde_restriction;      // [prime][i] -> F_p idx

  int prime_count() const { return static_cast<int>(tilde_reps.size()); }
  long long tilde_count() const;
  std::vector<int> tilde_at(long long index) const;
  long long tilde_index(std::span<const int> parts) const;
  long long act_tilde(long long index, int g) const;
  long long restrict_tuple(long long tilde) const;  // -> boundary tuple index
};

TubeContext make_tube_context(const Boundary& boundary);

/// Solvability of c∘ρ~ on every unramified group and the independence
/// condition: the invariant kills pullbacks of unramified 2-cocycles.
AxiomReport check_tube_axioms(const TubeContext& tube);

/// CS_{V_S}(ρ~) = Σ_p inv_p(β~_p∘v_p − x_p(ρ~_p∘v_p)); double-solved and
/// cross-checked. Throws ModelViolation / BetaDependence.
int cs_tube(const TubeContext& tube, const Section& x, long long tilde_index);
std::vector<int> cs_tube_table(const TubeContext& tube, const Section& x);

/// Gluing data: outer covers S = S1 ⊔ S2 with the S1 attachments first;
/// u_maps are engaged exactly at the S2 positions.
struct GluingDatum {
  std::string label;
  const GlobalDatum* outer = nullptr;
  const GlobalDatum* inner = nullptr;
  GroupHom eta;  // Q_S -> Q_{S1}, surjective
  std::vector<std::optional<GroupHom>> u_maps;  // aligned with outer attachments
};

struct GluingContext {
  const GluingDatum* datum = nullptr;
  GlobalContext outer_ctx;
  GlobalContext inner_ctx;
  Boundary tube_boundary;  // over the S2 primes
  TubeContext tube;
  int s1_count = 0;

  bool closed_case() const { return s1_count == 0; }
};

GluingContext make_gluing_context(const GluingDatum& datum, GroupPtr gauge,
                                  const Cochain& cocycle);

/// Commuting squares, eta surjectivity, inner/outer attachment coherence and
/// the gluing exactness axiom (ρ factors through eta iff every S2 restriction
/// factors through v_p).
AxiomReport check_gluing_axioms(const GluingContext& ctx);

/// Prefix (S1) and suffix (S2) slices of a section over the outer boundary.
Section slice_section_prefix(const Section& x, int s1_count);
Section slice_section_suffix(const Section& x, int s1_count);

/// The index of ρ∘eta in the outer representation set, and the tube index of
/// (ρ∘u_p)_p, for ρ a representation of the inner group.
long long outer_rep_of(const GluingContext& ctx, int inner_rep_index);
long long tilde_tuple_of(const GluingContext& ctx, int inner_rep_index);

struct DecompositionRow {
  int inner_rep = 0;
  int lhs = 0;  // CS_{X_{S1}}(ρ) + CS_{V_{S2}}((ρ∘u_p))
  int rhs = 0;  // CS_{X_S}(ρ∘eta)
  bool equal = false;
};

/// Evaluates both sides of the decomposition identity for every inner
/// representation. Requires a non-empty S1.
std::vector<DecompositionRow> check_decomposition(const GluingContext& ctx,
                                                  const Section& outer_section);

/// The closed invariant (empty S1), defined through the decomposition
/// identity: CS(ρ1) = CS_{X_S}(ρ1∘eta) − CS_{V_{S2}}((ρ1∘u_p)).
int cs_closed(const GluingContext& ctx, const Section& outer_section,
              int inner_rep_index);
std::vector<int> cs_closed_table(const GluingContext& ctx,
                                 const Section& outer_section);

}  // namespace dwarith
