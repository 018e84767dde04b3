#pragma once

// Pauli (n = 2) and Gell-Mann (n = 3) generators, the SU(3) structure
// constants, and Stokes-vector extraction / reconstruction.
//
//   n = 2:  Phi   = (I + sum_i S_i sigma_i) / 2,              S_i = Tr(Phi sigma_i)
//   n = 3:  Phi_3 = (I + sqrt(3) sum_i S_i lambda_i) / 3,      S_i = sqrt(3)/2 Tr(Phi_3 lambda_i)

#include <array>
#include <vector>

#include "polco/matrix.hpp"

namespace polco {

/// sigma_1..sigma_3 or lambda_1..lambda_8, in the usual listing order.
struct GeneratorSet {
  int dim = 0;
  std::vector<ComplexMatrix> generators;

  /// 1-based access matching the physics labels.
  const ComplexMatrix& operator[](int label) const { return generators.at(static_cast<std::size_t>(label - 1)); }
  int size() const { return static_cast<int>(generators.size()); }
};

/// Throws UnsupportedDimension for n outside {2, 3}. The returned reference
/// points to an immutable table built on first use.
const GeneratorSet& generators(int n);

/// Totally symmetric d_ijk and totally antisymmetric f_ijk of SU(3), derived
/// from the Gell-Mann matrices through
///   d_ijk = Tr({l_i, l_j} l_k) / 4,   f_ijk = Tr([l_i, l_j] l_k) / (4i).
/// Indices are 0-based internally (label - 1).
class StructureConstants {
 public:
  static constexpr int kSize = 8;

  double d(int i, int j, int k) const { return d_[flat(i, j, k)]; }
  double f(int i, int j, int k) const { return f_[flat(i, j, k)]; }

  /// Largest imaginary part discarded while building the tables.
  double max_discarded_imag() const { return max_discarded_imag_; }

 private:
  friend const StructureConstants& structure_constants();
  StructureConstants();

  static std::size_t flat(int i, int j, int k) { return static_cast<std::size_t>((i * kSize + j) * kSize + k); }

  std::array<double, kSize * kSize * kSize> d_{};
  std::array<double, kSize * kSize * kSize> f_{};
  double max_discarded_imag_ = 0.0;
};

const StructureConstants& structure_constants();

struct StokesVector {
  int n = 2;                          // matrix dimension, 2 or 3
  std::vector<double> components;     // length n^2 - 1

  double norm_sq() const;
  friend bool operator==(const StokesVector&, const StokesVector&) = default;
};

/// Trace-normalizes before extracting. Throws ValidationError for
/// non-Hermitian or zero-trace input, UnsupportedDimension for other sizes.
StokesVector stokes_extract(const ComplexMatrix& phi);

/// Hermitian and unit trace; positivity is the caller's concern.
ComplexMatrix stokes_reconstruct(const StokesVector& s);

struct PureStateResiduals {
  double norm_residual = 0.0;  // |sum S_i^2 - 1|
  double dijk_residual = 0.0;  // max_k |sqrt(3) sum_ij d_ijk S_i S_j - S_k|
};

/// Conditions a qutrit Stokes vector must meet to come from a projector.
PureStateResiduals pure_state_constraints(const StokesVector& s);

}  // namespace polco
