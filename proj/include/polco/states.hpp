#pragma once

// State constructors: beam coefficients, canonical named states and seeded
// random samplers.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "polco/matrix.hpp"

namespace polco {

/// E(r) = a e_x psi(r) + b e_x phi(r) + c e_y psi(r) + d e_y phi(r)
struct BeamSpec {
  Complex a{}, b{}, c{}, d{};
  std::string polarization_labels[2] = {"e_x", "e_y"};
  std::string spatial_labels[2] = {"psi", "phi"};
};

/// |E> = a|00> + b|01> + c|10> + d|11> with |0>_p = e_x, |1>_p = e_y,
/// |0>_s = psi, |1>_s = phi. Normalizes; DegenerateInput when all zero.
StateVector beam_to_state(const BeamSpec& spec);

enum class NamedState {
  qubit_zero,            // |0>
  qubit_plus,            // (|0> + |1>)/sqrt2
  bell_phi_plus,         // (|00> + |11>)/sqrt2
  bell_psi_minus,        // (|01> - |10>)/sqrt2
  product_00,            // |00>
  product_01,            // |01>
  partial_entangled_08,  // sqrt(0.8)|00> + sqrt(0.2)|11>
  qutrit_zero,           // |0>
  qutrit_uniform_pure,   // (|0> + |1> + |2>)/sqrt3
  qutrit_max_entangled,  // (|00> + |11> + |22>)/sqrt3
  qutrit_product_00,     // |00> on 3x3
};

std::string_view to_string(NamedState name);
/// Throws UnknownState.
NamedState parse_named_state(std::string_view name);
const std::vector<NamedState>& all_named_states();

StateVector named_state(NamedState name);

/// splitmix64 finalizer applied to (seed, stream); gives the seed of
/// independent sub-stream `stream`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded sampler. Uses std::mt19937_64, whose output sequence is fixed by
/// the standard, and derives uniforms and normals by hand so that samples do
/// not depend on the standard library's distribution implementations.
/// One instance is single-threaded; independent instances are not shared.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in the open interval (0, 1).
  double uniform();
  double normal();
  /// (g1 + i g2) / sqrt2 with g1, g2 standard normal.
  Complex complex_gaussian();

  /// Normalized vector of independent complex Gaussians.
  StateVector haar_pure(int dim, std::optional<Split> split = std::nullopt);

  /// sum_k p_k |v_k><v_k| over `rank` orthonormalized Haar vectors with
  /// uniform Dirichlet weights, or p_k = 1/rank when equal_weights is set.
  ComplexMatrix random_mixed(int dim, int rank, bool equal_weights = false);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

StateVector haar_pure(int dim, std::uint64_t seed, std::optional<Split> split = std::nullopt);
ComplexMatrix random_mixed(int dim, int rank, std::uint64_t seed, bool equal_weights = false);

}  // namespace polco
