#pragma once

#include <string>
#include <vector>

#include "dwarith/config.hpp"
#include "dwarith/quantum.hpp"

namespace dwarith {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SweepSettings {
  int random_samples = 60;    // sampled cochains per identity sweep
  unsigned long long seed = 0x5eed5eedULL;
};

/// Homotopy and conjugation identities on one group: d∘d = 0, the two
/// homotopy equalities, commutation of the action with d, and the cocycle
/// corollaries. Exhausts all cochains when the table is small enough,
/// otherwise samples.
std::vector<CheckResult> check_cochain_identities(GroupPtr q, int modulus,
                                                  int max_degree,
                                                  const SweepSettings& settings);

/// Torsor axioms exercised on genuine prequantization fibers of a boundary.
std::vector<CheckResult> check_torsor_axioms(const Boundary& boundary,
                                             const SweepSettings& settings);

/// λ cocycle law, section-change coherence and component-rechoice invariance
/// for one boundary with the given sections.
std::vector<CheckResult> check_lambda_laws(const Boundary& boundary,
                                           const std::vector<Section>& sections);

/// CS equivariance, section-change shift and Z-membership for one global
/// context; the β-independence double check runs inside every CS call.
std::vector<CheckResult> check_global_laws(const GlobalContext& ctx,
                                           const std::vector<Section>& sections);

/// Tube-side analogues over F_{V_S}.
std::vector<CheckResult> check_tube_laws(const TubeContext& tube,
                                         const std::vector<Section>& sections);

/// Decomposition / closed-invariant coherence and the gluing identity.
std::vector<CheckResult> check_gluing_laws(const GluingContext& ctx,
                                           const Section& outer_section);

/// Structure identities (multiplicativity, duality, spanning products,
/// nondegenerate pairing) for every prefix split of a boundary, plus
/// dimension invariance under section change.
std::vector<CheckResult> check_structure_laws(const Boundary& boundary,
                                              const std::vector<Section>& sections);

/// Cocycle-class invariance: shift by a random coboundary db and compare λ,
/// CS, dim and transported Z against the fresh computation.
std::vector<CheckResult> check_cocycle_change(const GlobalContext& ctx,
                                              const SweepSettings& settings);

/// Everything applicable to one parsed model, deterministic order.
std::vector<CheckResult> run_model_suite(const ModelConfig& config,
                                         const SweepSettings& settings = {});

}  // namespace dwarith
