#include "polco/matrix.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cmath>
#include <limits>
#include <sstream>

#include "polco/errors.hpp"

namespace polco {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw DimensionError("matrix dimension must be positive, got " + std::to_string(dim));
  data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Complex{});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
  if (dim < 1) throw DimensionError("matrix dimension must be positive, got " + std::to_string(dim));
  if (data_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> diag) {
  return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DimensionError("outer product of vectors with different lengths");
  ComplexMatrix m(static_cast<int>(u.size()));
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) m(r, c) = u[static_cast<std::size_t>(r)] * std::conj(v[static_cast<std::size_t>(c)]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::hermitian_part() const { return (*this + adjoint()) * Complex(0.5); }

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& z : data_) best = std::max(best, std::abs(z));
  return best;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw DimensionError("matrix sum of mismatched dimensions");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw DimensionError("matrix difference of mismatched dimensions");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("matrix product of mismatched dimensions");
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (int c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("comparison of mismatched dimensions");
  double best = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
  return best;
}

// --- StateVector -----------------------------------------------------------

namespace {

void check_split(std::size_t dim, const std::optional<Split>& split) {
  if (dim == 0) throw DimensionError("state vector must have at least one amplitude");
  if (!split) return;
  if (split->a < 1 || split->b < 1 || static_cast<std::size_t>(split->a) * static_cast<std::size_t>(split->b) != dim) {
    std::ostringstream msg;
    msg << "split " << split->a << "x" << split->b << " does not factor dimension " << dim;
    throw DimensionError(msg.str());
  }
}

}  // namespace

StateVector::StateVector(CVector amplitudes, std::optional<Split> split)
    : amplitudes_(std::move(amplitudes)), split_(split) {
  check_split(amplitudes_.size(), split_);
  const double n = norm_sq(amplitudes_);
  if (std::abs(n - 1.0) > tol::norm) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state vector is not normalized: <psi|psi> = " << n;
    throw ValidationError(msg.str());
  }
}

StateVector StateVector::normalized(CVector amplitudes, std::optional<Split> split) {
  check_split(amplitudes.size(), split);
  const double n = norm_sq(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw DegenerateInput("cannot normalize a zero or non-finite vector");
  const double scale = 1.0 / std::sqrt(n);
  for (auto& z : amplitudes) z *= scale;
  return StateVector(std::move(amplitudes), split);
}

Split StateVector::require_split() const {
  if (!split_) throw DimensionError("state vector carries no bipartite split");
  return *split_;
}

ComplexMatrix StateVector::density() const { return ComplexMatrix::outer(amplitudes_, amplitudes_); }

// --- validation --------------------------------------------------------------

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  const int n = m.dim();
  Eigen::MatrixXcd h(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

ValidationReport validate_density(const ComplexMatrix& m, bool require_unit_trace) {
  ValidationReport report;
  report.trace = m.trace();

  bool finite = true;
  for (const auto& z : m.data()) finite = finite && std::isfinite(z.real()) && std::isfinite(z.imag());
  if (!finite) {
    report.hermitian = false;
    report.psd = false;
    report.unit_trace = !require_unit_trace;
    report.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    report.messages.emplace_back("matrix has non-finite entries");
    return report;
  }

  const double asym = max_abs_diff(m, m.adjoint());
  report.hermitian = asym <= tol::herm;
  if (!report.hermitian) {
    std::ostringstream msg;
    msg << "not Hermitian: max |m - m^dagger| = " << asym;
    report.messages.push_back(msg.str());
  }

  const auto ev = hermitian_eigenvalues(m);
  report.min_eigenvalue = ev.front();
  report.psd = report.hermitian && report.min_eigenvalue >= -tol::psd;
  if (report.min_eigenvalue < -tol::psd) {
    std::ostringstream msg;
    msg << "not positive semi-definite: min eigenvalue = " << report.min_eigenvalue;
    report.messages.push_back(msg.str());
  }

  if (require_unit_trace) {
    report.unit_trace = std::abs(report.trace - Complex(1.0)) <= tol::norm;
    if (!report.unit_trace) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "trace is not 1: " << report.trace;
      report.messages.push_back(msg.str());
    }
  }
  return report;
}

// --- tensor structure ---------------------------------------------------------

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int dA = a.dim();
  const int dB = b.dim();
  ComplexMatrix out(dA * dB);
  for (int ra = 0; ra < dA; ++ra) {
    for (int ca = 0; ca < dA; ++ca) {
      const Complex x = a(ra, ca);
      for (int rb = 0; rb < dB; ++rb) {
        for (int cb = 0; cb < dB; ++cb) out(ra * dB + rb, ca * dB + cb) = x * b(rb, cb);
      }
    }
  }
  return out;
}

CVector tensor(std::span<const Complex> a, std::span<const Complex> b) {
  CVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  return StateVector(tensor(a.amplitudes(), b.amplitudes()), Split{a.dim(), b.dim()});
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dA, int dB, Subsystem keep) {
  if (dA < 1 || dB < 1 || rho.dim() != dA * dB) {
    std::ostringstream msg;
    msg << "partial trace: matrix of dimension " << rho.dim() << " does not split as " << dA << "x" << dB;
    throw DimensionError(msg.str());
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out(dA);
    for (int i = 0; i < dA; ++i) {
      for (int j = 0; j < dA; ++j) {
        Complex s{};
        for (int k = 0; k < dB; ++k) s += rho(i * dB + k, j * dB + k);
        out(i, j) = s;
      }
    }
    return out;
  }
  ComplexMatrix out(dB);
  for (int i = 0; i < dB; ++i) {
    for (int j = 0; j < dB; ++j) {
      Complex s{};
      for (int k = 0; k < dA; ++k) s += rho(k * dB + i, k * dB + j);
      out(i, j) = s;
    }
  }
  return out;
}

std::vector<CVector> subsystem_slices(const StateVector& state, int dA, int dB, Subsystem side) {
  if (dA < 1 || dB < 1 || state.dim() != dA * dB) {
    std::ostringstream msg;
    msg << "state of dimension " << state.dim() << " does not split as " << dA << "x" << dB;
    throw DimensionError(msg.str());
  }
  const auto amp = state.amplitudes();
  const auto at = [&](int i, int j) { return amp[static_cast<std::size_t>(i * dB + j)]; };
  std::vector<CVector> slices;
  if (side == Subsystem::A) {
    slices.assign(static_cast<std::size_t>(dA), CVector(static_cast<std::size_t>(dB)));
    for (int i = 0; i < dA; ++i) {
      for (int j = 0; j < dB; ++j) slices[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
    }
  } else {
    slices.assign(static_cast<std::size_t>(dB), CVector(static_cast<std::size_t>(dA)));
    for (int j = 0; j < dB; ++j) {
      for (int i = 0; i < dA; ++i) slices[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = at(i, j);
    }
  }
  return slices;
}

ComplexMatrix gram_matrix(std::span<const CVector> slices) {
  ComplexMatrix g(static_cast<int>(slices.size()));
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j) {
      g(i, j) = inner(slices[static_cast<std::size_t>(j)], slices[static_cast<std::size_t>(i)]);
    }
  }
  return g;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DimensionError("inner product of vectors with different lengths");
  Complex s{};
  for (std::size_t k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

double norm_sq(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

double wedge_norm_sq(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) {
    throw DimensionError("wedge product of vectors with lengths " + std::to_string(u.size()) + " and " +
                         std::to_string(v.size()));
  }
  const double raw = norm_sq(u) * norm_sq(v) - std::norm(inner(v, u));
  return std::max(raw, 0.0);
}

std::string content_hash(std::span<const Complex> values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& z : values) {
    for (double part : {z.real(), z.imag()}) {
      const auto bits = std::bit_cast<std::uint64_t>(part);
      for (int byte = 0; byte < 8; ++byte) {
        h ^= (bits >> (8 * byte)) & 0xffU;
        h *= 0x100000001b3ULL;
      }
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace polco
