#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dwarith/error.hpp"

namespace dwarith {

/// A finite group stored as a full multiplication table. Element indices are
/// 0-based and the identity is always index 0 (build_group renormalizes).
struct FiniteGroup {
  int order = 0;
  std::vector<int> mul;         // order*order, mul[a*order+b] = a·b
  std::vector<int> inverse_of;  // order
  std::vector<int> generators;  // nonempty, generates the group
  std::string label;

  static constexpr int identity = 0;

  int times(int a, int b) const { return mul[a * order + b]; }
  int inv(int a) const { return inverse_of[a]; }
  int conj(int g, int x) const {  // g^{-1} x g
    return times(times(inv(g), x), g);
  }
  bool is_abelian() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates the table (associativity, two-sided identity, inverses,
/// generator closure), renormalizes so the identity sits at index 0.
/// Throws NotAGroup / GeneratorsDontGenerate.
GroupPtr build_group(const std::vector<std::vector<int>>& table,
                     std::vector<int> generators, std::string label = "");

GroupPtr cyclic_group(int n);
GroupPtr product_of_cyclics(const std::vector<int>& orders);

/// A homomorphism given by its full element map.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;  // source->target, size = source->order

  int operator()(int x) const { return map[x]; }
  bool is_surjective() const;
  bool is_bijective() const;
};

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> map);
bool is_valid_hom(const FiniteGroup& source, const FiniteGroup& target,
                  const std::vector<int>& map);
GroupHom identity_hom(GroupPtr g);
GroupHom trivial_hom(GroupPtr source, GroupPtr target);
/// outer ∘ inner
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// γ ↦ g⁻¹·ρ(γ)·g, a right action of ρ.target.
GroupHom conjugate_hom(const GroupHom& rho, int g);

/// All homomorphisms source -> target, ordered lexicographically by the
/// tuple of generator images. Enumeration assigns generator images one at a
/// time and extends by closure, backtracking on multiplication conflicts.
std::vector<GroupHom> enumerate_homs(GroupPtr source, GroupPtr target);

/// Hom(source, target) with a precomputed conjugation-action table.
struct HomSet {
  GroupPtr source;
  GroupPtr target;
  std::vector<GroupHom> homs;
  std::vector<std::vector<int>> conj_action;  // [hom][g] -> hom index

  int size() const { return static_cast<int>(homs.size()); }
  int index_of(const std::vector<int>& map) const;  // -1 if absent
  int act(int hom_index, int g) const { return conj_action[hom_index][g]; }
};

HomSet enumerate_hom_set(GroupPtr source, GroupPtr target);

struct Orbit {
  int representative = 0;        // first element in enumeration order
  std::vector<int> elements;     // ascending
  std::vector<int> stabilizer;   // elements of G fixing the representative
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;
  std::vector<int> orbit_of;  // item index -> orbit index
};

/// Orbits of {0..set_size-1} under the right G-action given by an action
/// table act[item][g]. The set must be closed under the action.
OrbitDecomposition orbits_stabilizers(
    int set_size, const FiniteGroup& g_group,
    const std::vector<std::vector<int>>& action);

}  // namespace dwarith
