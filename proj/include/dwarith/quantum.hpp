#pragma once

#include <string>
#include <vector>

#include "dwarith/cyclotomic.hpp"
#include "dwarith/global.hpp"

namespace dwarith {

/// An exact vector over the boundary representation tuples: one cyclotomic
/// value per tuple, remembering which section the coordinates refer to.
struct ThetaVector {
  int modulus = 2;
  std::vector<std::string> base_names;  // prime names, in boundary order
  std::string section_label;
  std::vector<Cyclotomic> entries;

  long long size() const { return static_cast<long long>(entries.size()); }
};

ThetaVector zero_vector(const Boundary& boundary, const Section& x);

/// Exact equivariance test: θ(ρ.g) = ζ^{sign·λ(g,ρ)}·θ(ρ) for all g, ρ.
bool is_equivariant(const Boundary& boundary, const Section& x,
                    const ThetaVector& theta, int sign = +1);

struct ThetaSpace {
  int dimension = 0;
  OrbitDecomposition orbits;              // of the tuple space
  std::vector<int> admissible;            // orbit indices contributing a line
  std::vector<ThetaVector> basis;         // one vector per admissible orbit
};

/// Dimension and basis of the space of equivariant vectors. An orbit
/// contributes one basis line iff λ vanishes on the stabilizer of its
/// representative; the basis vector takes value 1 there and ζ-powers along
/// the orbit. sign = -1 builds the reversed-orientation space.
ThetaSpace theta_space(const Boundary& boundary, const Section& x,
                       int sign = +1);

/// Z(ρ_S) = (1/#G)·Σ_{res(ρ)=ρ_S} ζ^{CS(ρ)}, exact with denominator #G.
ThetaVector partition_global(const GlobalContext& ctx, const Section& x);

/// Z_{V_S}(ρ_S) = Σ_{res~(ρ~)=ρ_S} ζ^{±CS_V(ρ~)}; no averaging factor.
ThetaVector partition_tube(const TubeContext& tube, const Section& x,
                           bool reversed);

/// The closed invariant (empty retained set): (1/#G)·Σ ζ^{cs_closed(ρ1)}.
Cyclotomic partition_closed(const GluingContext& ctx,
                            const Section& outer_section);

/// ⟨θ_S, θ*⟩(ρ_{S1}) = Σ_{ρ_{S2}} θ_S(ρ_{S1},ρ_{S2})·θ*(ρ_{S2}).
/// theta_full lives over the full boundary, theta_rev over its suffix.
ThetaVector glue_pair(const Boundary& full_boundary, int s1_count,
                      const ThetaVector& theta_full,
                      const ThetaVector& theta_rev);

/// Section transport: entrywise multiplication by ζ^{δ^{x,x'}}.
ThetaVector transport_section(const Boundary& boundary, const Section& from,
                              const Section& to, const ThetaVector& theta);

/// Cocycle change c' = c + db: the boundary with the shifted cocycle and the
/// image section x' = x + b∘ρ (which leaves λ, CS and Z unchanged).
struct CocycleShift {
  Boundary boundary;  // same primes, cocycle c + db
  Section section;    // the transported section
};
CocycleShift shift_cocycle(const Boundary& boundary, const Section& x,
                           const Cochain& b);

/// Witness for a model isomorphism: compatible isomorphisms of the global
/// group and of each local group.
struct IsoWitness {
  GroupHom global_iso;               // Q_S -> Q'_S
  std::vector<GroupHom> prime_isos;  // Q_p -> Q'_p, aligned with attachments
};

/// Validates the witness (bijectivity, commuting attachment squares,
/// invariant compatibility) and relabels: θ'(ρ') = θ(ρ'∘φ). Throws
/// InvalidWitness.
ThetaVector transport_isomorphism(const GlobalContext& from,
                                  const GlobalContext& to,
                                  const IsoWitness& witness,
                                  const ThetaVector& theta);

struct StructureReport {
  int dim_prefix = 0;
  int dim_suffix = 0;
  int dim_full = 0;
  int dim_reversed = 0;
  bool multiplicative = false;      // dim_full == dim_prefix * dim_suffix
  bool dual_dimension = false;      // dim_reversed == dim_full
  bool products_span = false;       // basis products are a basis of the full space
  bool pairing_nondegenerate = false;
};

/// Multiplicativity and duality structure for a split of the boundary primes
/// into a prefix and a suffix.
StructureReport tensor_and_dual(const Boundary& full_boundary,
                                const Section& x, int prefix_len);

}  // namespace dwarith
