#pragma once

// Complementarity measures. Every function returns the SQUARED quantity.
//
// Matrix inputs must be valid density matrices (Hermitian, PSD, unit trace
// within the core tolerances); anything else raises ValidationError. Use
// analyze() for unnormalized polarization-coherence matrices: it splits off
// the intensity Tr(Phi) and works on Phi / Tr(Phi).

#include <optional>
#include <string>

#include "polco/matrix.hpp"
#include "polco/su_basis.hpp"

namespace polco {

/// 2(n-1)/n [ sum_i Phi_ii^2 - 2/(n-1) sum_{i<j} Phi_ii Phi_jj ]
double predictability_sq(const ComplexMatrix& phi);

/// 2 sum_{i != j} |Phi_ij|^2
double coherence_hs_sq(const ComplexMatrix& phi);

/// S_1^2 + S_2^2 + S_3^2 of a 2x2 density matrix. UnsupportedDimension otherwise.
double degree_pol_sq(const ComplexMatrix& phi);

/// d/(d-1) (1 - Tr rho^2)
double linear_entropy_sq(const ComplexMatrix& rho);

/// 2|ad - bc| for a pure state with split 2x2.
double concurrence_2x2(const StateVector& state);

/// 4 sum_{i<j} |phi_i ^ phi_j|^2 over the slices of the chosen side.
double i_concurrence_sq(const StateVector& state, Subsystem side = Subsystem::A);

/// Full set of measures for one input.
struct MeasureReport {
  int dim_n = 0;
  double predictability_sq = 0.0;
  double coherence_hs_sq = 0.0;
  std::optional<double> degree_pol_sq;  // n = 2 only
  double linear_entropy_sq = 0.0;
  std::optional<double> entanglement_sq;  // pure bipartite parent only
  double stokes_norm_sq = 0.0;
  StokesVector stokes;
  double intensity = 1.0;  // Tr(Phi) before normalization
  std::string basis_label;

  /// Values before clamping at zero, keyed like the clamped fields.
  struct Raw {
    double predictability_sq = 0.0;
    double coherence_hs_sq = 0.0;
    double linear_entropy_sq = 0.0;
    std::optional<double> entanglement_sq;
  } raw;
};

/// Measures of a (possibly unnormalized) 2x2 or 3x3 polarization-coherence matrix.
MeasureReport analyze(const ComplexMatrix& phi);

/// Single-system pure state: measures of |psi><psi|. Bipartite state with a
/// split: measures of rho_A plus the I-concurrence of the parent.
MeasureReport analyze(const StateVector& state);

}  // namespace polco
