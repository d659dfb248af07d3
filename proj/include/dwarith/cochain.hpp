#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dwarith/group.hpp"
#include "dwarith/snf.hpp"

namespace dwarith {

/// A degree-n cochain on a finite group with coefficients in Z/N, stored as a
/// dense table over n-tuples (row-major, first coordinate most significant).
/// The module action on Z/N is through a unit character (empty = trivial).
struct Cochain {
  GroupPtr group;
  int degree = 0;
  int modulus = 2;
  std::vector<int> values;       // order^degree entries in [0, N)
  std::vector<int> action_char;  // empty, or per-element unit mod N

  static Cochain zero(GroupPtr g, int degree, int modulus);

  long long table_size() const { return static_cast<long long>(values.size()); }
  bool trivial_action() const;
  int act_on_value(int group_element, int value) const;

  int at(std::span<const int> tuple) const { return values[index_of(tuple)]; }
  long long index_of(std::span<const int> tuple) const;
  std::vector<int> tuple_at(long long index) const;
};

long long power_ll(int base, int exp);

bool same_shape(const Cochain& x, const Cochain& y);
bool operator==(const Cochain& x, const Cochain& y);
Cochain operator+(const Cochain& x, const Cochain& y);
Cochain operator-(const Cochain& x, const Cochain& y);
Cochain scale(const Cochain& x, int m);

/// The bar-resolution coboundary. On degree 0, (dα)(γ) = γ·α − α.
Cochain coboundary(const Cochain& alpha);

/// True iff dα = 0; runs without materializing the degree-(n+1) table.
/// If a counterexample tuple is requested, the first one is stored there.
bool is_cocycle(const Cochain& alpha, std::vector<int>* counterexample = nullptr);

/// (σ.α)(γ₁…γₙ) = σ·α(σ⁻¹γ₁σ, …, σ⁻¹γₙσ).
Cochain conj_act(int sigma, const Cochain& alpha);

/// Degree-lowering homotopy: C^{n+1} -> C^n,
/// h_σ(α) = Σ_{0≤i≤n} (−1)^i α∘s_i(σ). Throws DegreeTooLow on degree 0.
Cochain homotopy_h(int sigma, const Cochain& alpha);

/// Second homotopy: C^{n+2} -> C^n,
/// H_{σ₁,σ₂}(α) = Σ_{0≤i≤j≤n} (−1)^{i+j} α∘s_{i,j}(σ₁,σ₂).
Cochain homotopy_hh(int sigma1, int sigma2, const Cochain& alpha);

/// (α∘ρ)(γ₁…γₙ) = α(ρ(γ₁), …, ρ(γₙ)); α must carry the trivial action.
Cochain pullback(const Cochain& alpha, const GroupHom& rho);

/// The degree-2 representative h²_g(c) with d(h²_g(c)) = g.c − c.
/// Throws NotACocycle when dc ≠ 0.
Cochain h_class(int g, const Cochain& c);

/// Integer lift of the coboundary matrix d: C^{degree-1} -> C^{degree}.
IntMat coboundary_matrix(const FiniteGroup& g, int degree);

/// Solves dβ = z exactly over Z/N; returns the deterministic solution (SNF
/// coordinates lexicographically minimal, free parameters zero) or absent when
/// z is not a coboundary. The alternate strategy returns a second solution
/// that differs whenever the solution is not unique.
std::optional<Cochain> solve_coboundary(
    const Cochain& z, PivotStrategy strategy = PivotStrategy::primary);

struct CohomologyBasis {
  int degree = 0;
  int modulus = 2;
  std::vector<Cochain> cocycle_basis;      // spans Z^n as a Z/N-module
  std::vector<Cochain> coboundary_basis;   // spans B^n
  std::vector<long long> quotient_structure;  // invariant factors > 1 of H^n
  long long quotient_order() const;
};

CohomologyBasis cohomology_basis(GroupPtr q, int modulus, int degree);

}  // namespace dwarith
