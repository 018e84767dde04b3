#include "polco/states.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "polco/errors.hpp"

namespace polco {

StateVector beam_to_state(const BeamSpec& spec) {
  CVector amps{spec.a, spec.b, spec.c, spec.d};
  if (norm_sq(amps) == 0.0) throw DegenerateInput("beam coefficients are all zero");
  return StateVector::normalized(std::move(amps), Split{2, 2});
}

namespace {

struct NamedEntry {
  NamedState id;
  std::string_view name;
};

constexpr std::array kNames{
    NamedEntry{NamedState::qubit_zero, "qubit_zero"},
    NamedEntry{NamedState::qubit_plus, "qubit_plus"},
    NamedEntry{NamedState::bell_phi_plus, "bell_phi_plus"},
    NamedEntry{NamedState::bell_psi_minus, "bell_psi_minus"},
    NamedEntry{NamedState::product_00, "product_00"},
    NamedEntry{NamedState::product_01, "product_01"},
    NamedEntry{NamedState::partial_entangled_08, "partial_entangled_08"},
    NamedEntry{NamedState::qutrit_zero, "qutrit_zero"},
    NamedEntry{NamedState::qutrit_uniform_pure, "qutrit_uniform_pure"},
    NamedEntry{NamedState::qutrit_max_entangled, "qutrit_max_entangled"},
    NamedEntry{NamedState::qutrit_product_00, "qutrit_product_00"},
};

CVector basis(int dim, int k) {
  CVector v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(k)] = 1.0;
  return v;
}

}  // namespace

std::string_view to_string(NamedState name) {
  for (const auto& e : kNames) {
    if (e.id == name) return e.name;
  }
  throw UnknownState("unnamed state enumerator");
}

NamedState parse_named_state(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  throw UnknownState("unknown named state '" + std::string(name) + "'");
}

const std::vector<NamedState>& all_named_states() {
  static const std::vector<NamedState> list = [] {
    std::vector<NamedState> out;
    for (const auto& e : kNames) out.push_back(e.id);
    return out;
  }();
  return list;
}

StateVector named_state(NamedState name) {
  const double h = 1.0 / std::numbers::sqrt2;
  const double t = 1.0 / std::numbers::sqrt3;
  switch (name) {
    case NamedState::qubit_zero:
      return StateVector(basis(2, 0));
    case NamedState::qubit_plus:
      return StateVector({h, h});
    case NamedState::bell_phi_plus:
      return StateVector({h, 0.0, 0.0, h}, Split{2, 2});
    case NamedState::bell_psi_minus:
      return StateVector({0.0, h, -h, 0.0}, Split{2, 2});
    case NamedState::product_00:
      return StateVector(basis(4, 0), Split{2, 2});
    case NamedState::product_01:
      return StateVector(basis(4, 1), Split{2, 2});
    case NamedState::partial_entangled_08:
      return StateVector({std::sqrt(0.8), 0.0, 0.0, std::sqrt(0.2)}, Split{2, 2});
    case NamedState::qutrit_zero:
      return StateVector(basis(3, 0));
    case NamedState::qutrit_uniform_pure:
      return StateVector({t, t, t});
    case NamedState::qutrit_max_entangled:
      return StateVector({t, 0.0, 0.0, 0.0, t, 0.0, 0.0, 0.0, t}, Split{3, 3});
    case NamedState::qutrit_product_00:
      return StateVector(basis(9, 0), Split{3, 3});
  }
  throw UnknownState("unknown named state");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double StateSampler::uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double StateSampler::normal() {
  if (spare_normal_) {
    const double v = *spare_normal_;
    spare_normal_.reset();
    return v;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  spare_normal_ = r * std::sin(theta);
  return r * std::cos(theta);
}

Complex StateSampler::complex_gaussian() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::numbers::sqrt2;
}

StateVector StateSampler::haar_pure(int dim, std::optional<Split> split) {
  if (dim < 1) throw DimensionError("Haar sampling needs a positive dimension");
  CVector v(static_cast<std::size_t>(dim));
  for (auto& z : v) z = complex_gaussian();
  return StateVector::normalized(std::move(v), split);
}

ComplexMatrix StateSampler::random_mixed(int dim, int rank, bool equal_weights) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw DimensionError("random mixed state needs 1 <= rank <= dim, got rank " + std::to_string(rank) + " for dim " +
                         std::to_string(dim));
  }
  std::vector<double> weights(static_cast<std::size_t>(rank), 1.0);
  if (!equal_weights) {
    for (auto& w : weights) w = -std::log(uniform());
  }
  double total = 0.0;
  for (double w : weights) total += w;

  // Gram-Schmidt on Haar vectors: the columns of a Haar unitary, so the
  // eigenvalues of rho are exactly the weights.
  std::vector<CVector> basis_vectors;
  ComplexMatrix rho(dim);
  while (static_cast<int>(basis_vectors.size()) < rank) {
    CVector v(static_cast<std::size_t>(dim));
    for (auto& z : v) z = complex_gaussian();
    for (const auto& u : basis_vectors) {
      const Complex overlap = inner(u, v);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= overlap * u[k];
    }
    const double n = norm_sq(v);
    if (n < 1e-12) continue;
    for (auto& z : v) z /= std::sqrt(n);
    const double w = weights[basis_vectors.size()] / total;
    rho += ComplexMatrix::outer(v, v) * Complex(w);
    basis_vectors.push_back(std::move(v));
  }
  return rho;
}

StateVector haar_pure(int dim, std::uint64_t seed, std::optional<Split> split) {
  return StateSampler(seed).haar_pure(dim, split);
}

ComplexMatrix random_mixed(int dim, int rank, std::uint64_t seed, bool equal_weights) {
  return StateSampler(seed).random_mixed(dim, rank, equal_weights);
}

}  // namespace polco
