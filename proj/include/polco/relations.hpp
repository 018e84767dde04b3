#pragma once

// Verification engine for the complementarity identities.
//
//   duality             P^2 + C^2 = 1 (qubit) or 4/3 (qutrit), pure single system
//   pct                 P_deg^2 = P^2 + C^2, any 2x2 density matrix
//   qubit-triality      E^2 + P^2 + C^2 = 1, pure two-qubit state
//   qutrit-triality     E_AB^2 + C^2 + P^2 = 4/3, pure two-qutrit state
//   mixed-triality      M^2 + C^2 + P^2 = 1 (d = 2); 4/3 M^2 + P^2 + C^2 = 4/3 (d = 3)
//   stokes-geometry     sum S_i^2 = 1 and sqrt(3) sum d_ijk S_i S_j = S_k, pure qutrit
//   mixed-parent-bound  P^2 + C^2 <= 1 on the reduced state of a mixed two-qubit parent
//   entanglement-bridge wedge-product E^2 against the purity form 2(1 - Tr rho_A^2)
//
// A verdict's residual is the worst residual over the main identity and any
// companion identities evaluated with it; pass <=> residual <= tolerance.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polco/matrix.hpp"

namespace polco {

enum class RelationId {
  duality,
  pct,
  qubit_triality,
  qutrit_triality,
  mixed_triality,
  stokes_geometry,
  mixed_parent_bound,
  entanglement_bridge,
};

std::string_view to_string(RelationId id);
/// Throws UnknownRelation.
RelationId parse_relation(std::string_view name);
const std::vector<RelationId>& all_relations();

struct CompanionCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

struct RelationVerdict {
  RelationId relation = RelationId::duality;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = tol::rel;
  bool pass = false;
  std::string state_ref;
  std::vector<CompanionCheck> companions;
  std::string note;
};

struct RelationOptions {
  double tolerance = tol::rel;
  /// Which subsystem supplies the reduced matrix in the bipartite checks.
  Subsystem side = Subsystem::A;
};

RelationVerdict check_duality_pure(const StateVector& state, const RelationOptions& opts = {});
/// PreconditionError when rho is mixed.
RelationVerdict check_duality_pure(const ComplexMatrix& rho, const RelationOptions& opts = {});
RelationVerdict check_pct(const ComplexMatrix& phi, const RelationOptions& opts = {});
RelationVerdict check_qubit_triality_pure(const StateVector& state, const RelationOptions& opts = {});
RelationVerdict check_qutrit_triality_pure(const StateVector& state, const RelationOptions& opts = {});
RelationVerdict check_mixed_triality(const ComplexMatrix& rho, const RelationOptions& opts = {});
RelationVerdict check_pure_stokes_geometry(const StateVector& state, const RelationOptions& opts = {});
RelationVerdict check_pure_stokes_geometry(const ComplexMatrix& rho, const RelationOptions& opts = {});
/// `parent` is a 4x4 two-qubit density matrix, pure or mixed.
RelationVerdict check_mixed_parent_bound(const ComplexMatrix& parent, const RelationOptions& opts = {});
RelationVerdict check_entanglement_bridge(const StateVector& state, const RelationOptions& opts = {});

struct CampaignParams {
  int dim = 0;   // 0: relation default
  int rank = 0;  // 0: cycle 1..dim across samples
  double tolerance = tol::rel;
  Subsystem side = Subsystem::A;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CampaignSummary {
  RelationId relation = RelationId::duality;
  std::int64_t n_samples = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  std::int64_t failures = 0;
  std::int64_t errors = 0;  // samples whose evaluation threw; counted as failures
  std::uint64_t seed = 0;
  double tolerance = tol::rel;
  int dim = 0;
  int rank = 0;
};

/// Evaluates sample `index` of the stream defined by `seed`. Each sample owns
/// a sampler seeded with derive_seed(seed, index).
RelationVerdict evaluate_sample(RelationId relation, std::uint64_t seed, std::uint64_t index,
                                const CampaignParams& params);

/// Deterministic in (relation, n, seed, params) regardless of thread count.
/// Individual failures are counted, never thrown.
CampaignSummary run_campaign(RelationId relation, std::int64_t n, std::uint64_t seed, const CampaignParams& params = {});

/// Relations that apply to a given input, for `verify --input`.
std::vector<RelationId> applicable_relations(const StateVector& state);
std::vector<RelationId> applicable_relations(const ComplexMatrix& rho);
RelationVerdict check(RelationId relation, const StateVector& state, const RelationOptions& opts = {});
RelationVerdict check(RelationId relation, const ComplexMatrix& rho, const RelationOptions& opts = {});

}  // namespace polco
