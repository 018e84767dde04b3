#include "polco/su_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polco/errors.hpp"

namespace polco {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix make(int n, std::initializer_list<Complex> entries) { return ComplexMatrix(n, std::vector<Complex>(entries)); }

GeneratorSet build_pauli() {
  GeneratorSet set;
  set.dim = 2;
  set.generators = {
      make(2, {0.0, 1.0, 1.0, 0.0}),
      make(2, {0.0, -kI, kI, 0.0}),
      make(2, {1.0, 0.0, 0.0, -1.0}),
  };
  return set;
}

// lambda_5 and lambda_7 follow the Hermitian convention: -i above the
// diagonal, +i below.
GeneratorSet build_gell_mann() {
  const double r3 = 1.0 / std::sqrt(3.0);
  GeneratorSet set;
  set.dim = 3;
  set.generators = {
      make(3, {0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0}),
      make(3, {0.0, -kI, 0.0, kI, 0.0, 0.0, 0.0, 0.0, 0.0}),
      make(3, {1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0}),
      make(3, {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0}),
      make(3, {0.0, 0.0, -kI, 0.0, 0.0, 0.0, kI, 0.0, 0.0}),
      make(3, {0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0}),
      make(3, {0.0, 0.0, 0.0, 0.0, 0.0, -kI, 0.0, kI, 0.0}),
      make(3, {r3, 0.0, 0.0, 0.0, r3, 0.0, 0.0, 0.0, -2.0 * r3}),
  };
  return set;
}

// Tr(A B) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex s{};
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) s += a(r, c) * b(c, r);
  }
  return s;
}

void require_hermitian(const ComplexMatrix& phi) {
  const double asym = max_abs_diff(phi, phi.adjoint());
  if (asym > tol::herm) {
    throw ValidationError("Stokes extraction needs a Hermitian matrix; max |m - m^dagger| = " + std::to_string(asym));
  }
}

double stokes_scale(int n) { return n == 2 ? 1.0 : std::sqrt(3.0) / 2.0; }

}  // namespace

const GeneratorSet& generators(int n) {
  static const GeneratorSet pauli = build_pauli();
  static const GeneratorSet gell_mann = build_gell_mann();
  if (n == 2) return pauli;
  if (n == 3) return gell_mann;
  throw UnsupportedDimension("generators exist only for n = 2 and n = 3, got " + std::to_string(n));
}

StructureConstants::StructureConstants() {
  const auto& lam = generators(3).generators;
  for (int i = 0; i < kSize; ++i) {
    for (int j = 0; j < kSize; ++j) {
      const ComplexMatrix ij = lam[i] * lam[j];
      const ComplexMatrix ji = lam[j] * lam[i];
      const ComplexMatrix anti = ij + ji;
      const ComplexMatrix comm = ij - ji;
      for (int k = 0; k < kSize; ++k) {
        const Complex dv = trace_of_product(anti, lam[k]) / 4.0;
        const Complex fv = trace_of_product(comm, lam[k]) / (4.0 * kI);
        max_discarded_imag_ = std::max({max_discarded_imag_, std::abs(dv.imag()), std::abs(fv.imag())});
        // Entries are sums of a handful of exact products; snap rounding noise.
        d_[flat(i, j, k)] = std::abs(dv.real()) < 1e-15 ? 0.0 : dv.real();
        f_[flat(i, j, k)] = std::abs(fv.real()) < 1e-15 ? 0.0 : fv.real();
      }
    }
  }
}

const StructureConstants& structure_constants() {
  static const StructureConstants table;
  return table;
}

double StokesVector::norm_sq() const {
  return std::inner_product(components.begin(), components.end(), components.begin(), 0.0);
}

StokesVector stokes_extract(const ComplexMatrix& phi) {
  const int n = phi.dim();
  if (n != 2 && n != 3) throw UnsupportedDimension("Stokes parameters need a 2x2 or 3x3 matrix, got " + std::to_string(n));
  require_hermitian(phi);
  const double tr = phi.trace().real();
  if (!(std::abs(tr) > tol::norm)) throw ValidationError("cannot trace-normalize a matrix with zero trace");

  const auto& gens = generators(n);
  const double scale = stokes_scale(n) / tr;
  StokesVector s;
  s.n = n;
  s.components.reserve(gens.generators.size());
  for (const auto& g : gens.generators) s.components.push_back(scale * trace_of_product(phi, g).real());
  return s;
}

ComplexMatrix stokes_reconstruct(const StokesVector& s) {
  if (s.n != 2 && s.n != 3) throw UnsupportedDimension("Stokes vectors exist only for n = 2 and n = 3");
  const auto& gens = generators(s.n);
  if (s.components.size() != gens.generators.size()) {
    throw DimensionError("Stokes vector for n = " + std::to_string(s.n) + " needs " +
                         std::to_string(gens.generators.size()) + " components");
  }
  // n = 2: (I + sum S sigma) / 2;  n = 3: (I + sqrt(3) sum S lambda) / 3.
  const double coeff = s.n == 2 ? 1.0 : std::sqrt(3.0);
  ComplexMatrix out = ComplexMatrix::identity(s.n);
  for (std::size_t i = 0; i < gens.generators.size(); ++i) out += gens.generators[i] * Complex(coeff * s.components[i]);
  out *= 1.0 / s.n;
  return out;
}

PureStateResiduals pure_state_constraints(const StokesVector& s) {
  if (s.n != 3 || s.components.size() != 8) throw DimensionError("pure-state constraints apply to 8-component qutrit Stokes vectors");
  const auto& sc = structure_constants();
  const auto& c = s.components;
  PureStateResiduals out;
  out.norm_residual = std::abs(s.norm_sq() - 1.0);
  const double r3 = std::sqrt(3.0);
  for (int k = 0; k < 8; ++k) {
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) acc += sc.d(i, j, k) * c[i] * c[j];
    }
    out.dijk_residual = std::max(out.dijk_residual, std::abs(r3 * acc - c[k]));
  }
  return out;
}

}  // namespace polco
