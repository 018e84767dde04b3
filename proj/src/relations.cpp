#include "polco/relations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <thread>

#include "polco/errors.hpp"
#include "polco/measures.hpp"
#include "polco/states.hpp"
#include "polco/su_basis.hpp"

namespace polco {

namespace {

struct RelationEntry {
  RelationId id;
  std::string_view name;
};

constexpr std::array kRelations{
    RelationEntry{RelationId::duality, "duality"},
    RelationEntry{RelationId::pct, "pct"},
    RelationEntry{RelationId::qubit_triality, "qubit-triality"},
    RelationEntry{RelationId::qutrit_triality, "qutrit-triality"},
    RelationEntry{RelationId::mixed_triality, "mixed-triality"},
    RelationEntry{RelationId::stokes_geometry, "stokes-geometry"},
    RelationEntry{RelationId::mixed_parent_bound, "mixed-parent-bound"},
    RelationEntry{RelationId::entanglement_bridge, "entanglement-bridge"},
};

constexpr double kFourThirds = 4.0 / 3.0;

RelationVerdict make_verdict(RelationId id, double lhs, double rhs, const RelationOptions& opts, std::string ref,
                             std::vector<CompanionCheck> companions = {}) {
  RelationVerdict v;
  v.relation = id;
  v.lhs = lhs;
  v.rhs = rhs;
  v.residual = std::abs(lhs - rhs);
  for (const auto& c : companions) v.residual = std::max(v.residual, c.residual);
  v.tolerance = opts.tolerance;
  v.pass = v.residual <= v.tolerance;
  v.state_ref = std::move(ref);
  v.companions = std::move(companions);
  return v;
}

CompanionCheck companion(std::string name, double lhs, double rhs) {
  return {std::move(name), lhs, rhs, std::abs(lhs - rhs)};
}

double purity_defect(const ComplexMatrix& rho) {
  double p = 0.0;
  for (const auto& z : rho.data()) p += std::norm(z);
  return 1.0 - p;
}

ComplexMatrix reduced(const StateVector& state, Subsystem side) {
  const Split s = state.require_split();
  return partial_trace(state.density(), s.a, s.b, side);
}

int reduced_dim(const StateVector& state, Subsystem side) {
  const Split s = state.require_split();
  return side == Subsystem::A ? s.a : s.b;
}

void require_split_equal(const StateVector& state, Split expected, const char* what) {
  const Split s = state.require_split();
  if (s != expected) {
    throw DimensionError(std::string(what) + " needs a " + std::to_string(expected.a) + "x" +
                         std::to_string(expected.b) + " split, got " + std::to_string(s.a) + "x" +
                         std::to_string(s.b));
  }
}

[[noreturn]] void not_applicable(RelationId id) {
  throw PreconditionError("relation '" + std::string(to_string(id)) + "' does not apply to this input");
}

}  // namespace

std::string_view to_string(RelationId id) {
  for (const auto& e : kRelations) {
    if (e.id == id) return e.name;
  }
  throw UnknownRelation("unnamed relation enumerator");
}

RelationId parse_relation(std::string_view name) {
  for (const auto& e : kRelations) {
    if (e.name == name) return e.id;
  }
  throw UnknownRelation("unknown relation '" + std::string(name) + "'");
}

const std::vector<RelationId>& all_relations() {
  static const std::vector<RelationId> list = [] {
    std::vector<RelationId> out;
    for (const auto& e : kRelations) out.push_back(e.id);
    return out;
  }();
  return list;
}

// --- single-input checks ------------------------------------------------------

RelationVerdict check_duality_pure(const StateVector& state, const RelationOptions& opts) {
  if (state.dim() != 2 && state.dim() != 3) {
    throw UnsupportedDimension("duality applies to a single qubit or qutrit, got dimension " +
                               std::to_string(state.dim()));
  }
  const ComplexMatrix rho = state.density();
  const double lhs = predictability_sq(rho) + coherence_hs_sq(rho);
  const double rhs = state.dim() == 2 ? 1.0 : kFourThirds;
  return make_verdict(RelationId::duality, lhs, rhs, opts, content_hash(state.amplitudes()));
}

RelationVerdict check_duality_pure(const ComplexMatrix& rho, const RelationOptions& opts) {
  if (rho.dim() != 2 && rho.dim() != 3) {
    throw UnsupportedDimension("duality applies to 2x2 or 3x3 matrices, got " + std::to_string(rho.dim()));
  }
  if (purity_defect(rho) > tol::rel) {
    throw PreconditionError("duality needs a pure state; use the mixed-triality check for mixed matrices");
  }
  const double lhs = predictability_sq(rho) + coherence_hs_sq(rho);
  const double rhs = rho.dim() == 2 ? 1.0 : kFourThirds;
  return make_verdict(RelationId::duality, lhs, rhs, opts, content_hash(rho.data()));
}

RelationVerdict check_pct(const ComplexMatrix& phi, const RelationOptions& opts) {
  if (phi.dim() != 2) throw UnsupportedDimension("polarization-coherence theorem applies to 2x2 matrices");
  const double lhs = degree_pol_sq(phi);
  const double rhs = predictability_sq(phi) + coherence_hs_sq(phi);
  return make_verdict(RelationId::pct, lhs, rhs, opts, content_hash(phi.data()));
}

RelationVerdict check_qubit_triality_pure(const StateVector& state, const RelationOptions& opts) {
  require_split_equal(state, {2, 2}, "qubit triality");
  const ComplexMatrix rho = reduced(state, opts.side);
  const double e2 = std::pow(concurrence_2x2(state), 2);
  const double p2 = predictability_sq(rho);
  const double c2 = coherence_hs_sq(rho);
  const double m2 = linear_entropy_sq(rho);
  return make_verdict(RelationId::qubit_triality, e2 + p2 + c2, 1.0, opts, content_hash(state.amplitudes()),
                      {companion("mixedness-triality", m2 + c2 + p2, 1.0), companion("concurrence-vs-mixedness", e2, m2)});
}

RelationVerdict check_qutrit_triality_pure(const StateVector& state, const RelationOptions& opts) {
  require_split_equal(state, {3, 3}, "qutrit triality");
  const ComplexMatrix rho = reduced(state, opts.side);
  const double e2 = i_concurrence_sq(state, opts.side);
  const double p2 = predictability_sq(rho);
  const double c2 = coherence_hs_sq(rho);
  const double m2 = linear_entropy_sq(rho);
  return make_verdict(RelationId::qutrit_triality, e2 + c2 + p2, kFourThirds, opts, content_hash(state.amplitudes()),
                      {companion("i-concurrence-vs-mixedness", e2, kFourThirds * m2)});
}

RelationVerdict check_mixed_triality(const ComplexMatrix& rho, const RelationOptions& opts) {
  if (rho.dim() != 2 && rho.dim() != 3) {
    throw UnsupportedDimension("mixedness triality applies to 2x2 or 3x3 matrices, got " + std::to_string(rho.dim()));
  }
  const double m2 = linear_entropy_sq(rho);
  const double p2 = predictability_sq(rho);
  const double c2 = coherence_hs_sq(rho);
  if (rho.dim() == 2) return make_verdict(RelationId::mixed_triality, m2 + c2 + p2, 1.0, opts, content_hash(rho.data()));
  return make_verdict(RelationId::mixed_triality, kFourThirds * m2 + p2 + c2, kFourThirds, opts,
                      content_hash(rho.data()));
}

RelationVerdict check_pure_stokes_geometry(const ComplexMatrix& rho, const RelationOptions& opts) {
  if (rho.dim() != 3) throw UnsupportedDimension("pure-state Stokes geometry applies to 3x3 matrices");
  const StokesVector s = stokes_extract(rho);
  const PureStateResiduals r = pure_state_constraints(s);
  // lhs/rhs carry the norm condition; the d_ijk condition is reported as its
  // max-over-k residual against zero.
  return make_verdict(RelationId::stokes_geometry, s.norm_sq(), 1.0, opts, content_hash(rho.data()),
                      {CompanionCheck{"dijk-constraint", r.dijk_residual, 0.0, r.dijk_residual}});
}

RelationVerdict check_pure_stokes_geometry(const StateVector& state, const RelationOptions& opts) {
  if (state.dim() != 3) throw UnsupportedDimension("pure-state Stokes geometry applies to a single qutrit");
  auto v = check_pure_stokes_geometry(state.density(), opts);
  v.state_ref = content_hash(state.amplitudes());
  return v;
}

RelationVerdict check_mixed_parent_bound(const ComplexMatrix& parent, const RelationOptions& opts) {
  if (parent.dim() != 4) throw DimensionError("mixed-parent bound needs a 4x4 two-qubit density matrix");
  const auto report = validate_density(parent, true);
  if (!report.ok()) throw ValidationError("mixed-parent bound: parent is not a valid density matrix");
  const ComplexMatrix rho = partial_trace(parent, 2, 2, opts.side);
  const double lhs = predictability_sq(rho) + coherence_hs_sq(rho);
  RelationVerdict v = make_verdict(RelationId::mixed_parent_bound, lhs, 1.0, opts, content_hash(parent.data()));
  v.residual = std::max(lhs - 1.0, 0.0);
  v.pass = v.residual <= v.tolerance;
  v.note = "inequality; concurrence triality not checked for mixed parents";
  return v;
}

RelationVerdict check_entanglement_bridge(const StateVector& state, const RelationOptions& opts) {
  const Split s = state.require_split();
  const ComplexMatrix rho = reduced(state, opts.side);
  const int d = reduced_dim(state, opts.side);
  if (d < 2) throw UnsupportedDimension("entanglement bridge needs a reduced dimension of at least 2");
  const double e2 = i_concurrence_sq(state, opts.side);
  // M^2 = d/(d-1) (1 - Tr rho^2), so 2(1 - Tr rho^2) = 2(d-1)/d M^2; for
  // d = 3 that is 4/3 M^2 and for d = 2 it is M^2.
  const double m2 = linear_entropy_sq(rho);
  const double rhs = 2.0 * (d - 1) / d * m2;
  std::vector<CompanionCheck> companions;
  if (s == Split{2, 2}) companions.push_back(companion("concurrence-squared-vs-mixedness", std::pow(concurrence_2x2(state), 2), m2));
  return make_verdict(RelationId::entanglement_bridge, e2, rhs, opts, content_hash(state.amplitudes()),
                      std::move(companions));
}

// --- dispatch -------------------------------------------------------------------

std::vector<RelationId> applicable_relations(const StateVector& state) {
  using R = RelationId;
  if (!state.split()) {
    if (state.dim() == 2) return {R::duality, R::pct, R::mixed_triality};
    if (state.dim() == 3) return {R::duality, R::mixed_triality, R::stokes_geometry};
    return {};
  }
  const Split s = *state.split();
  if (s == Split{2, 2}) return {R::qubit_triality, R::pct, R::mixed_triality, R::mixed_parent_bound, R::entanglement_bridge};
  if (s == Split{3, 3}) return {R::qutrit_triality, R::mixed_triality, R::entanglement_bridge};
  if (s.a == 2 || s.a == 3) return {R::mixed_triality, R::entanglement_bridge};
  return {R::entanglement_bridge};
}

std::vector<RelationId> applicable_relations(const ComplexMatrix& rho) {
  using R = RelationId;
  const bool pure = purity_defect(rho) <= tol::rel;
  std::vector<R> out;
  if (rho.dim() == 2) {
    out = {R::pct, R::mixed_triality};
    if (pure) out.push_back(R::duality);
  } else if (rho.dim() == 3) {
    out = {R::mixed_triality};
    if (pure) {
      out.push_back(R::duality);
      out.push_back(R::stokes_geometry);
    }
  } else if (rho.dim() == 4) {
    out = {R::mixed_parent_bound};
  }
  return out;
}

RelationVerdict check(RelationId relation, const StateVector& state, const RelationOptions& opts) {
  const bool single = !state.split();
  switch (relation) {
    case RelationId::duality:
      if (single) return check_duality_pure(state, opts);
      break;
    case RelationId::pct:
      if (single && state.dim() == 2) return check_pct(state.density(), opts);
      if (!single && reduced_dim(state, opts.side) == 2) return check_pct(reduced(state, opts.side), opts);
      break;
    case RelationId::qubit_triality:
      if (!single) return check_qubit_triality_pure(state, opts);
      break;
    case RelationId::qutrit_triality:
      if (!single) return check_qutrit_triality_pure(state, opts);
      break;
    case RelationId::mixed_triality:
      if (single) return check_mixed_triality(state.density(), opts);
      return check_mixed_triality(reduced(state, opts.side), opts);
    case RelationId::stokes_geometry:
      if (single) return check_pure_stokes_geometry(state, opts);
      break;
    case RelationId::mixed_parent_bound:
      if (!single) return check_mixed_parent_bound(state.density(), opts);
      break;
    case RelationId::entanglement_bridge:
      if (!single) return check_entanglement_bridge(state, opts);
      break;
  }
  not_applicable(relation);
}

RelationVerdict check(RelationId relation, const ComplexMatrix& rho, const RelationOptions& opts) {
  switch (relation) {
    case RelationId::duality:
      return check_duality_pure(rho, opts);
    case RelationId::pct:
      return check_pct(rho, opts);
    case RelationId::mixed_triality:
      return check_mixed_triality(rho, opts);
    case RelationId::stokes_geometry:
      return check_pure_stokes_geometry(rho, opts);
    case RelationId::mixed_parent_bound:
      return check_mixed_parent_bound(rho, opts);
    default:
      not_applicable(relation);
  }
}

// --- campaigns -------------------------------------------------------------------

namespace {

int default_dim(RelationId relation) {
  switch (relation) {
    case RelationId::pct:
    case RelationId::qubit_triality:
      return 2;
    case RelationId::mixed_parent_bound:
      return 4;
    default:
      return 3;
  }
}

int sample_rank(const CampaignParams& params, int dim, std::uint64_t index) {
  if (params.rank > 0) return params.rank;
  return static_cast<int>(index % static_cast<std::uint64_t>(dim)) + 1;
}

}  // namespace

RelationVerdict evaluate_sample(RelationId relation, std::uint64_t seed, std::uint64_t index,
                                const CampaignParams& params) {
  StateSampler sampler(derive_seed(seed, index));
  const int dim = params.dim > 0 ? params.dim : default_dim(relation);
  const RelationOptions opts{params.tolerance, params.side};
  switch (relation) {
    case RelationId::duality:
      return check_duality_pure(sampler.haar_pure(dim), opts);
    case RelationId::pct:
      return check_pct(sampler.random_mixed(2, sample_rank(params, 2, index)), opts);
    case RelationId::qubit_triality:
      return check_qubit_triality_pure(sampler.haar_pure(4, Split{2, 2}), opts);
    case RelationId::qutrit_triality:
      return check_qutrit_triality_pure(sampler.haar_pure(9, Split{3, 3}), opts);
    case RelationId::mixed_triality:
      return check_mixed_triality(sampler.random_mixed(dim, sample_rank(params, dim, index)), opts);
    case RelationId::stokes_geometry:
      return check_pure_stokes_geometry(sampler.haar_pure(3), opts);
    case RelationId::mixed_parent_bound:
      return check_mixed_parent_bound(sampler.random_mixed(4, sample_rank(params, 4, index)), opts);
    case RelationId::entanglement_bridge:
      return check_entanglement_bridge(sampler.haar_pure(dim * dim, Split{dim, dim}), opts);
  }
  throw UnknownRelation("unknown relation");
}

CampaignSummary run_campaign(RelationId relation, std::int64_t n, std::uint64_t seed, const CampaignParams& params) {
  if (n < 1) throw PreconditionError("a campaign needs at least one sample");
  if (!(params.tolerance > 0.0)) throw PreconditionError("tolerance must be positive");
  to_string(relation);  // rejects out-of-range enumerators

  // Residuals land in index order, so the reduction below does not depend on
  // how samples were spread over threads.
  std::vector<double> residuals(static_cast<std::size_t>(n));
  std::vector<char> errored(static_cast<std::size_t>(n), 0);
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        residuals[i] = evaluate_sample(relation, seed, i, params).residual;
      } catch (const Error&) {
        residuals[i] = std::numeric_limits<double>::infinity();
        errored[i] = 1;
      }
    }
  };

  unsigned threads = params.threads != 0 ? params.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::int64_t>(1, n / 256)));
  if (threads <= 1) {
    work(0, residuals.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (residuals.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(residuals.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }

  CampaignSummary summary;
  summary.relation = relation;
  summary.n_samples = n;
  summary.seed = seed;
  summary.tolerance = params.tolerance;
  summary.dim = params.dim > 0 ? params.dim : default_dim(relation);
  summary.rank = params.rank;
  double total = 0.0;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    const double r = residuals[i];
    summary.max_residual = std::max(summary.max_residual, r);
    total += r;
    if (!(r <= params.tolerance)) ++summary.failures;
    if (errored[i]) ++summary.errors;
  }
  summary.mean_residual = total / static_cast<double>(n);
  return summary;
}

}  // namespace polco
