#pragma once

// Small dense complex linear algebra for polarization-coherence matrices and
// the bipartite states they are reduced from.
//
// Bipartite index convention: basis state |i_A i_B> sits at flat index
// i_A * dB + i_B (A major, B minor). Every routine below relies on it.

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polco {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

namespace tol {
inline constexpr double herm = 1e-10;  // max-abs of m - m^dagger
inline constexpr double psd = 1e-10;   // eigenvalue floor
inline constexpr double norm = 1e-10;  // |trace - 1|, |<psi|psi> - 1|
inline constexpr double num = 1e-12;   // algebraic identities
inline constexpr double rel = 1e-9;    // relation residuals
}  // namespace tol

enum class Subsystem { A, B };

struct Split {
  int a = 0;
  int b = 0;
  friend bool operator==(const Split&, const Split&) = default;
};

/// Dense dim x dim complex matrix stored row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::vector<Complex> row_major);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix diagonal(std::initializer_list<double> diag);
  /// |u><v|
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

  int dim() const { return dim_; }
  Complex operator()(int row, int col) const { return data_[index(row, col)]; }
  Complex& operator()(int row, int col) { return data_[index(row, col)]; }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// Hermitian part (m + m^dagger) / 2.
  ComplexMatrix hermitian_part() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(col);
  }

  int dim_;
  std::vector<Complex> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Normalized pure state, optionally carrying a bipartite split dA x dB.
class StateVector {
 public:
  /// Throws ValidationError unless sum |amp|^2 = 1 within tol::norm, and
  /// DimensionError when the split does not factor the dimension.
  explicit StateVector(CVector amplitudes, std::optional<Split> split = std::nullopt);

  /// Rescales to unit norm. Throws DegenerateInput for the zero vector.
  static StateVector normalized(CVector amplitudes, std::optional<Split> split = std::nullopt);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](int i) const { return amplitudes_[static_cast<std::size_t>(i)]; }
  const std::optional<Split>& split() const { return split_; }
  /// Split or throw DimensionError.
  Split require_split() const;

  /// |psi><psi|
  ComplexMatrix density() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  CVector amplitudes_;
  std::optional<Split> split_;
};

struct ValidationReport {
  bool hermitian = false;
  bool psd = false;
  bool unit_trace = true;  // only evaluated when requested
  Complex trace{};
  double min_eigenvalue = 0.0;
  std::vector<std::string> messages;

  bool ok() const { return hermitian && psd && unit_trace; }
};

/// Never throws; the caller decides what to do with the report.
ValidationReport validate_density(const ComplexMatrix& m, bool require_unit_trace);

/// Ascending eigenvalues of the Hermitian part of m.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
/// The result carries split (a.dim, b.dim).
StateVector tensor(const StateVector& a, const StateVector& b);
CVector tensor(std::span<const Complex> a, std::span<const Complex> b);

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dA, int dB, Subsystem keep);

/// Slice vectors of a bipartite state. For side A these are
/// |phi_i> = <i_A|psi>, i = 0..dA-1, each of dimension dB; side B gives
/// <j_B|psi>, each of dimension dA.
std::vector<CVector> subsystem_slices(const StateVector& state, int dA, int dB, Subsystem side = Subsystem::A);

/// G_ij = <phi_j|phi_i>, which is the reduced matrix on the sliced side.
ComplexMatrix gram_matrix(std::span<const CVector> slices);

/// <u|v> (conjugate-linear in u).
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm_sq(std::span<const Complex> v);

/// FNV-1a over the IEEE bytes of the entries, as 16 hex digits. Identifies
/// inputs in reports.
std::string content_hash(std::span<const Complex> values);

/// |u ^ v|^2 = |u|^2 |v|^2 - |<v|u>|^2, clamped at zero.
double wedge_norm_sq(std::span<const Complex> u, std::span<const Complex> v);

}  // namespace polco
