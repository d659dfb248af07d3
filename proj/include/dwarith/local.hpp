#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwarith/torsor.hpp"

namespace dwarith {

/// A linear functional on 2-cochains given by a formal integer combination of
/// evaluation points; models the local invariant map on H². Must vanish on
/// coboundaries and hit 1 on some 2-cocycle (checked by check_local_axioms).
struct InvFunctional {
  int modulus = 2;
  std::vector<std::array<long long, 3>> terms;  // (g, h, coefficient)

  int eval(const Cochain& two_cochain) const;
};

struct UnramifiedQuotient {
  GroupPtr group;      // model of the unramified local Galois group
  GroupHom projection;  // v: Q_p -> group, surjective
};

/// A finite model of a local Galois group: group, invariant functional,
/// orientation sign, a cached unit 2-cocycle with invariant() = 1, and an
/// optional unramified quotient used by tube invariants.
struct LocalDatum {
  std::string name;
  GroupPtr group;
  InvFunctional inv;
  int orientation = 1;  // +1 or -1
  Cochain unit_cocycle;
  std::optional<UnramifiedQuotient> unramified;

  /// Orientation-adjusted invariant of a 2-cochain.
  int invariant(const Cochain& two_cochain) const;
};

/// Builds a datum, deriving the unit cocycle from the invariant functional
/// (deterministic gcd combination over a basis of 2-cocycles). Throws
/// ModelViolation when the functional is not surjective on cocycles.
LocalDatum make_local_datum(std::string name, GroupPtr group, InvFunctional inv,
                            int orientation,
                            std::optional<UnramifiedQuotient> unramified);

/// Same datum with the invariant negated (orientation flipped).
LocalDatum reverse_orientation(const LocalDatum& datum);

struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AxiomReport {
  std::vector<CheckItem> items;
  bool passed() const;
  void add(std::string name, bool ok, std::string detail = "");
};

/// Data of one boundary component: the local datum together with its
/// enumerated representation space Hom(Q_p, G).
struct BoundaryComponent {
  const LocalDatum* datum = nullptr;
  HomSet reps;
};

/// The boundary model for an ordered set of primes: gauge group, 3-cocycle,
/// per-prime components, and the product representation space with its
/// diagonal conjugation action. Tuple indices are mixed-radix, first prime
/// most significant.
struct Boundary {
  GroupPtr gauge;
  Cochain cocycle;  // 3-cocycle on the gauge group
  std::vector<BoundaryComponent> components;

  int prime_count() const { return static_cast<int>(components.size()); }
  long long tuple_count() const;
  std::vector<int> tuple_at(long long index) const;
  long long tuple_index(std::span<const int> component_indices) const;
  long long act_tuple(long long index, int g) const;
  /// Splits a tuple index into the prefix (first `prefix_len` primes) and
  /// suffix parts.
  std::pair<long long, long long> split_tuple(long long index, int prefix_len) const;
  long long join_tuple(long long prefix, long long suffix, int prefix_len) const;
};

Boundary make_boundary(GroupPtr gauge, Cochain cocycle,
                       std::vector<const LocalDatum*> locals);

/// Checks the invariant-functional axioms (vanishing on coboundaries,
/// surjectivity on cocycles) and local solvability of c∘ρ for every ρ.
AxiomReport check_local_axioms(const Boundary& boundary, int component);
AxiomReport check_local_axioms(const Boundary& boundary);

/// A section of the prequantization data over every F_p of the boundary:
/// one fiber element per representation per prime.
struct Section {
  std::string label = "default";
  std::vector<std::vector<FiberElement>> assignment;  // [prime][rep index]

  const FiberElement& at(int prime, int rep_index) const {
    return assignment[prime][rep_index];
  }
};

/// Deterministic section: the canonical solve_coboundary solution per fiber.
/// Throws ModelViolation when some c∘ρ is not a coboundary.
Section default_section(const Boundary& boundary);

/// Acts on one fiber assignment by the torsor action; relabels the section.
Section perturb_section(const Boundary& boundary, const Section& x, int prime,
                        int rep_index, int amount);

/// The Chern-Simons 1-cocycle component at one prime:
/// λ(g, ρ) = (x(ρ) + h_g∘ρ) − x(ρ.g) read through the invariant.
int lambda_prime(const Boundary& boundary, const Section& x, int prime, int g,
                 int rep_index);

/// λ_S(g, ρ_S) = Σ_p λ_p(g, ρ_p); zero for an empty boundary.
int lambda_space(const Boundary& boundary, const Section& x, int g,
                 long long tuple_index);

/// δ(ρ_S) = Σ_p (x_p(ρ_p) − x'_p(ρ_p)).
int delta_sections(const Boundary& boundary, const Section& x,
                   const Section& x_prime, long long tuple_index);

/// Precomputed λ table: [g][tuple index].
std::vector<std::vector<int>> lambda_table(const Boundary& boundary,
                                           const Section& x);

}  // namespace dwarith
