#pragma once

#include "dwarith/cochain.hpp"

namespace dwarith {

struct LocalDatum;

/// A point of the prequantization fiber over rep: a degree-2 cochain with
/// d(cochain) = c∘rep. Elements are stored as representatives; all
/// class-level predicates go through fiber_diff.
struct FiberElement {
  const LocalDatum* local = nullptr;
  GroupHom rep;
  Cochain cochain;
};

/// s − t read through the local invariant functional. Requires both elements
/// to sit over the same representation of the same local datum.
int fiber_diff(const FiberElement& s, const FiberElement& t);

/// t.m: adds m copies of the local unit 2-cocycle to the representative.
FiberElement fiber_act(const FiberElement& t, int m);

/// Class equality under the invariant-functional coarsening.
bool fiber_equal(const FiberElement& s, const FiberElement& t);

/// A torsor morphism between two fibers of the same local datum, of the form
/// α ↦ α + shift. conj_fiber_map builds the gauge map α ↦ α + h_g∘ρ.
struct FiberMap {
  const LocalDatum* local = nullptr;
  GroupHom source_rep;
  GroupHom target_rep;
  Cochain shift;
};

FiberMap conj_fiber_map(const LocalDatum& datum, const Cochain& gauge_cocycle,
                        int g, const GroupHom& rho);

FiberElement apply_fiber_map(const FiberMap& f, const FiberElement& t);

/// The commuting-square scalar λ(f; t, t') = f(t) − t'.
int transition_scalar(const FiberMap& f, const FiberElement& t,
                      const FiberElement& t_prime);

}  // namespace dwarith
